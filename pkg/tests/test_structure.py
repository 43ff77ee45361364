import pytest

from qosc.engine import (
    E, F, K, State, act, apply_gen, coproduct_act, enumerate_states,
    highest_state, state, tensor_state, vadd, vscale, vsub, weight_of,
)
from qosc.lattice import Eps, Weight, alpha_w, delta_w
from qosc.scalars import ONE_S, Q, Scalar, qfact, qint
from qosc.structure import (
    ComponentPair, N_of, Span, check_ladders, depth_offset, form_norm,
    form_value, ladder_words, nullspace, polarization_check, projector_apply,
    rank_of, singular_formula, singular_kernel, singular_vector,
    singular_weight, solve_in_span, tensor_top_weight, tensor_weight_states,
    two_row, vab_plus, weight_at_offset,
)

E04 = Eps.parse("0000", 2)
E05 = Eps.parse("00000", 2)

PAIRS = [(0, 0), (1, 0), (1, 1), (2, 1), (2, -1), (-1, -2)]


def test_N_of():
    assert N_of(1, 0) == 0
    assert N_of(2, 1) == 1
    assert N_of(-1, -2) == 1
    assert N_of(0, 0) == 0
    assert N_of(-3, 2) == 0


def test_two_row():
    assert two_row(1, 0, 2) == (3, -2)
    assert two_row(-1, -2, 0) == (-1, -2)


# -- linear algebra ------------------------------------------------------------

def test_span_and_rank():
    sp = Span()
    assert sp.add({"a": ONE_S, "b": Q})
    assert sp.add({"b": ONE_S})
    assert not sp.add({"a": Q, "b": Q * Q + ONE_S})
    assert sp.rank() == 2
    assert rank_of([{"a": ONE_S}, {"a": Q}, {"b": ONE_S}]) == 2


def test_solve_in_span():
    cols = [{"a": ONE_S, "b": Q}, {"b": ONE_S}]
    target = {"a": Q, "b": Q * Q + ONE_S}
    coords = solve_in_span(cols, target)
    assert coords is not None
    got = {}
    for idx, c in coords.items():
        got = vadd(got, vscale(cols[idx], c))
    assert vsub(got, target) == {}
    assert solve_in_span(cols, {"c": ONE_S}) is None


def test_nullspace():
    # map sending x1 -> a, x2 -> q a: kernel spanned by q x1 - x2
    imgs = [{"a": ONE_S}, {"a": Q}]
    ker = nullspace(imgs, ["x1", "x2"])
    assert len(ker) == 1
    v = ker[0]
    assert vsub(vscale(imgs[0], v["x1"]), vscale(imgs[1], -v["x2"])) == {}


# -- weight spaces --------------------------------------------------------------

def test_tensor_weight_states():
    top = tensor_top_weight(E04, (0, 0))
    mu = top - alpha_w(4, 2)
    basis = tensor_weight_states(E04, (0, 0), mu)
    assert len(basis) == 2  # the box either side of the tensor symbol
    assert all(weight_of(t) == mu for t in basis)
    assert depth_offset(E04, top, mu) == (0, 1, 0)
    assert weight_at_offset(E04, top, (0, 1, 0)) == mu
    assert depth_offset(E04, top, top + alpha_w(4, 1)) is None


# -- singular vectors ------------------------------------------------------------

def test_singular_formula_examples():
    u0 = singular_formula(E04, 1, 0, 0)
    vl, vm = highest_state(E04, 1), highest_state(E04, 0)
    assert u0 == {tensor_state(E04, [vl.m, vm.m]): ONE_S}
    u1 = singular_formula(E04, 1, 0, 1)
    v01 = vab_plus(E04, 1, 0, 0, 1)
    v10 = vab_plus(E04, 1, 0, 1, 0)
    assert u1 == {v01: ONE_S, v10: -(Q ** -1) * qint(1) / qint(2)}


def test_singular_formula_negative_index():
    u = singular_formula(E04, 2, 1, -1)
    v01 = {k.factors for k in u}
    assert len(u) == 2
    # coefficient of the j=1 state is -q^{|m|+2i+2k}[1]/[1] = -q
    vm10 = [k for k in u if u[k] != ONE_S]
    assert len(vm10) == 1
    assert u[vm10[0]] == -Q


@pytest.mark.parametrize("lm", PAIRS)
@pytest.mark.parametrize("eps", [E04, E05], ids=lambda e: e.bits())
def test_singular_vectors_killed_by_raising(lm, eps):
    l, m = lm
    N = N_of(l, m)
    for i in range(-N, 3):
        u = singular_formula(eps, l, m, i)
        for k in range(1, eps.n):
            img = apply_gen(eps, E(k), u)
            assert img == {}, (lm, i, k)


@pytest.mark.parametrize("lm", PAIRS)
def test_singular_kernel_matches_formula(lm):
    l, m = lm
    N = N_of(l, m)
    for i in range(-N, 3):
        t = N + i
        mu = singular_weight(E04, l, m, t)
        assert mu is not None
        vecs = singular_kernel(E04, (l, m), mu)
        assert len(vecs) == 1
        u = singular_formula(E04, l, m, i)
        coords = solve_in_span([vecs[0]], u)
        assert coords is not None  # proportional


def test_singular_kernel_empty_at_generic_weight():
    # a weight inside the cone but off the singular line carries no solution
    top = tensor_top_weight(E04, (0, 0))
    mu = top - alpha_w(4, 1)
    assert singular_kernel(E04, (0, 0), mu) == []


def test_singular_vector_normalization():
    u = singular_vector(E04, 1, 0, 1)
    v01 = vab_plus(E04, 1, 0, 0, 1)
    assert u[v01] == ONE_S


# -- ladder identities -----------------------------------------------------------

@pytest.mark.parametrize("lm", PAIRS)
def test_ladders_small(lm):
    assert check_ladders(E04, lm[0], lm[1], 2, 2) == []


def test_ladders_n5():
    assert check_ladders(E05, 1, 0, 1, 1) == []
    assert check_ladders(E05, 2, 1, 1, 1) == []


# -- components and projectors ------------------------------------------------------

def test_component_dims_census():
    cache = ComponentPair(E04, 0, 0)
    top = cache.top
    # multiplicity-free: component dims per weight must add to the slice dims
    for c1 in range(3):
        for c2 in range(3):
            for c3 in range(3):
                mu = weight_at_offset(E04, top, (c1, c2, c3))
                slice_dim = len(tensor_weight_states(E04, (0, 0), mu))
                comp_total = 0
                for t, rel in cache.components_at(mu):
                    comp_total += len(cache.basis(t, rel))
                assert comp_total == slice_dim, (c1, c2, c3)


def test_component_example_weight():
    # weight of u_0 minus alpha_r: 1-dim inside component 0, 2-dim in total
    cache = ComponentPair(E04, 0, 0)
    mu = weight_at_offset(E04, cache.top, (0, 1, 0))
    assert len(tensor_weight_states(E04, (0, 0), mu)) == 2
    assert len(cache.basis(0, (0, 1, 0))) == 1
    assert len(cache.basis(1, (0, 0, 0))) == 1


def test_projector_defining_property():
    cache = ComponentPair(E04, 1, 0)
    for t in range(0, 3):
        u = singular_vector(E04, 1, 0, t)
        up = singular_vector(E04, 0, 1, t)
        img = projector_apply(E04, 1, 0, t, u, cache=cache)
        assert vsub(img, up) == {}
        for t2 in range(0, 3):
            if t2 != t:
                assert projector_apply(E04, 1, 0, t2, u, cache=cache) == {}


def test_projector_intertwines():
    cache = ComponentPair(E04, 1, 0)
    t = 1
    u = singular_vector(E04, 1, 0, t)
    up = singular_vector(E04, 0, 1, t)
    fu = apply_gen(E04, F(2), u)
    fup = apply_gen(E04, F(2), up)
    img = projector_apply(E04, 1, 0, t, fu, cache=cache)
    assert vsub(img, fup) == {}


# -- polarization ------------------------------------------------------------------

def test_form_norm_example():
    s = state(E04, (2, 0, 0, 0))
    assert form_norm(s) == Q ** -1 * qfact(2)


def test_polarization_k():
    mu = delta_w(4, 2)
    s1 = state(E04, (1, 0, 1, 0))
    s2 = state(E04, (1, 0, 1, 0))
    assert polarization_check(E04, K(mu), s1, s2)


@pytest.mark.parametrize("eps", [E04, Eps.parse("0100", 2), Eps.parse("1111", 2)],
                         ids=lambda e: e.bits())
def test_polarization_sweep_small(eps):
    states = enumerate_states(eps, 2)
    gens = [E(i) for i in range(1, eps.n)] + [F(i) for i in range(1, eps.n)]
    for v in states:
        wv = weight_of(v)
        for g in gens:
            shift = alpha_w(eps.n, g.arg) if g.kind == "e" else -alpha_w(eps.n, g.arg)
            for w in states:
                if weight_of(w) == wv + shift:
                    assert polarization_check(eps, g, v, w), (g, v, w)
