import pytest

from qosc.engine import (
    E, F, K, OperatorExpr, State, TensorState, act, antipode, apply_gen,
    apply_word, check_relation, coproduct_act, coproduct_act_right,
    enumerate_states, highest_state, relation_ids, state, states_of_charge,
    tensor_state, vadd, vscale, vsub, weight_of,
)
from qosc.lattice import Eps, Lambda_w, alpha_w, delta_w, qhat
from qosc.scalars import ONE_S, Q, QINV, Scalar, qint, substitute_q

E04 = Eps.parse("0000", 2)
E05 = Eps.parse("00000", 2)
E14 = Eps.parse("1111", 2)
E0100 = Eps.parse("0100", 2)
E01010 = Eps.parse("01010", 2)

ALL_EPS = [E04, E05, E14, E0100, E01010]


# -- single-state action ------------------------------------------------------

def test_act_examples():
    s = state(E04, (0, 0, 0, 0))
    out = act(E04, F(2), s)
    assert out == {state(E04, (0, 1, 1, 0)): ONE_S}
    back = act(E04, E(2), state(E04, (0, 1, 1, 0)))
    assert back == {s: -qint(1) * qint(1)}
    assert back == {s: -ONE_S}


def test_act_fermionic_bound():
    s = state(E0100, (0, 1, 0, 0))
    assert act(E0100, F(2), s) == {}


def test_act_e0_f0():
    s = state(E04, (1, 0, 0, 2))
    x = Q ** 3
    out = act(E04, E(0), s, x)
    assert out == {state(E04, (2, 0, 0, 3)): x}
    out = act(E04, F(0), s, x)
    assert out == {state(E04, (0, 0, 0, 1)): -x.inverse() * qint(1) * qint(2)}


def test_monomial_property():
    for eps in ALL_EPS:
        for s in enumerate_states(eps, 3):
            for i in range(eps.n):
                assert len(act(eps, E(i), s)) <= 1
                assert len(act(eps, F(i), s)) <= 1


def test_weight_of():
    n = 4
    assert weight_of(state(E04, (0, 0, 0, 0))) == Lambda_w(n)
    l = 3
    assert weight_of(state(E04, (0, 0, l, 0))) == Lambda_w(n) + delta_w(n, 3).smul(l)
    t = tensor_state(E04, [(0, 0, 0, 0), (0, 0, 0, 0)])
    assert weight_of(t) == Lambda_w(n).smul(2)


def test_weight_grading():
    for eps in (E04, E0100):
        for s in enumerate_states(eps, 3):
            w = weight_of(s)
            for i in range(eps.n):
                img = act(eps, E(i), s)
                for s2 in img:
                    assert weight_of(s2) == w + alpha_w(eps.n, i)
                img = act(eps, F(i), s)
                for s2 in img:
                    assert weight_of(s2) == w - alpha_w(eps.n, i)


# -- coproduct ---------------------------------------------------------------

def test_coproduct_grouplike():
    v = tensor_state(E04, [(1, 0, 0, 0), (0, 0, 2, 0)])
    mu = delta_w(4, 3) + Lambda_w(4)
    out = coproduct_act(E04, K(mu), v)
    w1 = weight_of(state(E04, (1, 0, 0, 0)))
    w2 = weight_of(state(E04, (0, 0, 2, 0)))
    assert out == {v: qhat(E04, w1, mu) * qhat(E04, w2, mu)}


def test_coproduct_fr_ladder_base():
    # f_r (v_l (x) v_m) = q^{-|l|-1} v+_{0,1} + v+_{1,0} for l, m >= 0
    for (l, m) in [(0, 0), (1, 0), (2, 1)]:
        vl, vm = highest_state(E04, l).m, highest_state(E04, m).m
        t = tensor_state(E04, [vl, vm])
        out = coproduct_act(E04, F(2), t)
        r = 2
        bump = lambda mm: tuple(
            x + (1 if i in (r - 1, r) else 0) for i, x in enumerate(mm))
        v01 = tensor_state(E04, [vl, bump(vm)])
        v10 = tensor_state(E04, [bump(vl), vm])
        assert out == {v01: Q ** (-abs(l) - 1), v10: ONE_S}


def test_coproduct_weight_grading():
    t = tensor_state(E04, [(0, 1, 1, 0), (1, 0, 0, 1)])
    w = weight_of(t)
    for i in range(4):
        out = coproduct_act(E04, E(i), t, zmode=True)
        for k in out:
            assert weight_of(k) == w + alpha_w(4, i, affine=True)


def test_coassociativity():
    t = tensor_state(E04, [(0, 1, 1, 0), (1, 0, 0, 1), (0, 0, 1, 0)])
    gens = [E(i) for i in range(4)] + [F(i) for i in range(4)] + [K(delta_w(4, 2))]
    for g in gens:
        left = coproduct_act(E04, g, t, zmode=True)
        right = coproduct_act_right(E04, g, t)
        assert vsub(left, right) == {}


# -- relations ----------------------------------------------------------------

def test_relation_examples():
    s = state(E04, (1, 0, 0, 0))
    assert check_relation(E04, ("ef", 1, 1), s)
    for s2 in enumerate_states(E0100, 3):
        assert check_relation(E0100, ("odd-sq", 1, "e"), s2)
    for s2 in enumerate_states(E04, 3):
        assert check_relation(E04, ("distant", 0, 2, "e"), s2)


@pytest.mark.parametrize("eps", ALL_EPS, ids=lambda e: e.bits())
def test_relation_suite_small(eps):
    states = enumerate_states(eps, 2)
    for rel in relation_ids(eps):
        for s in states:
            assert check_relation(eps, rel, s), (rel, s)


def test_relation_suite_tensor_small():
    for eps in (E04, E0100):
        singles = [s.m for s in enumerate_states(eps, 1)]
        pairs = [tensor_state(eps, [a, b]) for a in singles for b in singles]
        rels = [r for r in relation_ids(eps) if r[0] in ("ef", "serre-even",
                                                         "serre-odd", "odd-sq")]
        for rel in rels:
            for t in pairs:
                assert check_relation(eps, rel, t), (rel, t)


def test_relation_suite_three_fold():
    eps = E04
    triple = tensor_state(eps, [(0, 0, 1, 0), (1, 0, 0, 0), (0, 0, 0, 1)])
    for rel in relation_ids(eps, include_k=False):
        assert check_relation(eps, rel, triple), rel


# -- q -> 1 classical limit ----------------------------------------------------

def _divided_cartan(eps, a, s):
    kd = act(eps, K(delta_w(eps.n, a)), s)[s]
    return (kd - kd.inverse()) / (Q - QINV)


def test_q1_gl_relations():
    eps = E04
    n = 4
    states = enumerate_states(eps, 3)
    for s in states:
        for i in range(1, n):
            for j in range(1, n):
                lhs = vsub(
                    apply_word(eps, (E(i), F(j)), {s: ONE_S}),
                    apply_word(eps, (F(j), E(i)), {s: ONE_S}))
                if i == j:
                    da = _divided_cartan(eps, i, s) - _divided_cartan(eps, i + 1, s)
                    lhs = vsub(lhs, {s: da})
                for coeff in lhs.values():
                    assert substitute_q(coeff, 1) == 0
        # [D_a, E_i] = (delta_{a,i} - delta_{a,i+1}) E_i at q = 1
        for a in range(1, n + 1):
            for i in range(1, n):
                img = act(eps, E(i), s)
                for s2, c in img.items():
                    da_diff = _divided_cartan(eps, a, s2) - _divided_cartan(eps, a, s)
                    expect = (1 if a == i else 0) - (1 if a == i + 1 else 0)
                    assert substitute_q(da_diff * c - Scalar.from_int(expect) * c, 1) == 0


# -- states & highest states ---------------------------------------------------

def test_enumerate_states_counts():
    assert len(enumerate_states(E04, 2)) == 15   # C(2+4,4)
    assert len(enumerate_states(E14, 2)) == 11   # 1 + 4 + C(4,2)
    assert len(states_of_charge(E04, 0, 2)) == 1 + 4  # vacuum + 4 balanced pairs


def test_highest_state():
    assert highest_state(E04, 2) == state(E04, (0, 0, 2, 0))
    assert highest_state(E04, -2) == state(E04, (0, 2, 0, 0))
    assert highest_state(E0100, -2) == state(E0100, (1, 1, 0, 0))
    for eps in ALL_EPS:
        for l in (-2, -1, 0, 1, 2):
            try:
                v = highest_state(eps, l)
            except ValueError:
                continue
            assert v.charge() == l
            for i in range(1, eps.n):
                assert act(eps, E(i), v) == {}, (eps, l, i)


def test_antipode_sanity():
    mu = delta_w(4, 1) + Lambda_w(4)
    sk = antipode(E04, K(mu))
    s = state(E04, (1, 1, 0, 2))
    out = sk.apply(E04, {s: ONE_S})
    kv = act(E04, K(mu), s)[s]
    assert out == {s: kv.inverse()}


def test_operator_expr():
    # [e_1, e_2]_t evaluated on a state equals e1 e2 - t e2 e1
    from qosc.engine import bracket
    x = OperatorExpr.gen(E(1))
    y = OperatorExpr.gen(E(2))
    t = Q ** 2
    s = state(E04, (1, 1, 0, 0))
    lhs = bracket(x, y, t).apply(E04, {s: ONE_S})
    a = apply_word(E04, (E(1), E(2)), {s: ONE_S})
    b = apply_word(E04, (E(2), E(1)), {s: ONE_S})
    assert lhs == vsub(a, vscale(b, t))
