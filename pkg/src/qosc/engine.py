"""Generator actions on oscillator occupancy states and their tensor powers.

States are occupancy vectors m in Z^n_+ restricted to {0,1} on fermionic
slots.  Single generators act monomially; tensor factors are handled through
the iterated coproduct.  The spectral parameter of factor j is either a
Scalar x_j or, in symbolic mode, a z_j-exponent tracked on the state.
"""

from __future__ import annotations

from typing import NamedTuple

from .lattice import Eps, Lambda_w, Weight, alpha_w, delta_w, qhat
from .scalars import ONE_S, Q, QINV, Scalar, qint


class State(NamedTuple):
    """Basis vector |m> of the oscillator module over eps."""

    eps: Eps
    m: tuple

    def valid(self):
        return all(x >= 0 and (self.eps.entries[i] == 0 or x <= 1)
                   for i, x in enumerate(self.m))

    def occ(self):
        return sum(self.m)

    def charge(self):
        r = self.eps.r
        return sum(self.m[r:]) - sum(self.m[:r])

    def render(self):
        return "|" + ",".join(str(x) for x in self.m) + ">"


class TensorState(NamedTuple):
    """Ordered product of occupancy states with z-exponent bookkeeping."""

    eps: Eps
    factors: tuple  # tuple of occupancy tuples
    zexps: tuple    # one integer per factor

    def nfactors(self):
        return len(self.factors)

    def occ(self):
        return sum(sum(f) for f in self.factors)

    def render(self):
        body = " (x) ".join("|" + ",".join(str(x) for x in f) + ">"
                            for f in self.factors)
        if any(self.zexps):
            body += " z^" + str(tuple(self.zexps))
        return body


def state(eps, m):
    s = State(eps, tuple(m))
    if not s.valid():
        raise ValueError(f"occupancies {m} not representable under {eps}")
    return s


def tensor_state(eps, factors, zexps=None):
    factors = tuple(tuple(f) for f in factors)
    if zexps is None:
        zexps = (0,) * len(factors)
    ts = TensorState(eps, factors, tuple(zexps))
    for f in factors:
        if not State(eps, f).valid():
            raise ValueError(f"occupancies {f} not representable under {eps}")
    return ts


class GenLabel(NamedTuple):
    kind: str      # "e", "f" or "k"
    arg: object    # node index for e/f, Weight for k

    def render(self):
        if self.kind == "k":
            return f"k[{self.arg.render()}]"
        return f"{self.kind}{self.arg}"


def E(i):
    return GenLabel("e", i)


def F(i):
    return GenLabel("f", i)


def K(mu: Weight):
    return GenLabel("k", mu)


# ---------------------------------------------------------------------------
# sparse vectors: plain dicts basis-key -> coefficient
# ---------------------------------------------------------------------------

def vadd(a, b):
    out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        s = c if s is None else s + c
        if (s == 0) if isinstance(s, int) else s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def vscale(a, c):
    if (c == 0) if isinstance(c, int) else c.is_zero():
        return {}
    return {k: v * c for k, v in a.items()}


def vsub(a, b):
    return vadd(a, vscale(b, -ONE_S))


def viszero(a):
    return not a


def _add_term(out, key, coeff):
    s = out.get(key)
    s = coeff if s is None else s + coeff
    if s.is_zero():
        out.pop(key, None)
    else:
        out[key] = s


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

def weight_of(s) -> Weight:
    """Weight of a state: level 1, -m_i on the minus side, +m_j on the plus
    side; tensor states add factor weights plus (sum of z-exponents) delta."""
    if isinstance(s, State):
        eps, r, n = s.eps, s.eps.r, s.eps.n
        d = tuple(-s.m[i] if i < r else s.m[i] for i in range(n))
        return Weight(1, d, 0)
    eps, r, n = s.eps, s.eps.r, s.eps.n
    d = [0] * n
    for f in s.factors:
        for i in range(n):
            d[i] += -f[i] if i < r else f[i]
    return Weight(len(s.factors), tuple(d), sum(s.zexps))


# ---------------------------------------------------------------------------
# single-state action (monomial)
# ---------------------------------------------------------------------------

def _shift(eps, m, deltas):
    """m + deltas, or None when it leaves the admissible set."""
    out = list(m)
    for i, d in deltas:
        v = out[i] + d
        if v < 0 or (eps.entries[i] == 1 and v > 1):
            return None
        out[i] = v
    return tuple(out)


def act(eps: Eps, gen: GenLabel, s: State, x: Scalar = ONE_S):
    """Apply one generator to |m>; returns a sparse vector (dict).

    x is the spectral parameter multiplying e_0 (x^-1 on f_0).  Out-of-range
    targets give the zero vector.
    """
    kind, a = gen
    m = s.m
    r, n = eps.r, eps.n
    if kind == "k":
        return {s: qhat(eps, weight_of(s), a)}
    i = a % n
    if kind == "e":
        if i == 0:
            t = _shift(eps, m, ((0, 1), (n - 1, 1)))
            return {} if t is None else {State(eps, t): x}
        if i == r:
            c = qint(m[r - 1]) * qint(m[r])
            if c.is_zero():
                return {}
            t = _shift(eps, m, ((r - 1, -1), (r, -1)))
            return {} if t is None else {State(eps, t): -c}
        if i < r:
            c = qint(m[i - 1])
            if c.is_zero():
                return {}
            t = _shift(eps, m, ((i - 1, -1), (i, 1)))
            return {} if t is None else {State(eps, t): c}
        c = qint(m[i])
        if c.is_zero():
            return {}
        t = _shift(eps, m, ((i - 1, 1), (i, -1)))
        return {} if t is None else {State(eps, t): c}
    if kind == "f":
        if i == 0:
            c = qint(m[0]) * qint(m[n - 1])
            if c.is_zero():
                return {}
            t = _shift(eps, m, ((0, -1), (n - 1, -1)))
            return {} if t is None else {State(eps, t): -c * x.inverse()}
        if i == r:
            t = _shift(eps, m, ((r - 1, 1), (r, 1)))
            return {} if t is None else {State(eps, t): ONE_S}
        if i < r:
            c = qint(m[i])
            if c.is_zero():
                return {}
            t = _shift(eps, m, ((i - 1, 1), (i, -1)))
            return {} if t is None else {State(eps, t): c}
        c = qint(m[i - 1])
        if c.is_zero():
            return {}
        t = _shift(eps, m, ((i - 1, -1), (i, 1)))
        return {} if t is None else {State(eps, t): c}
    raise ValueError(f"unknown generator kind {kind!r}")


# ---------------------------------------------------------------------------
# tensor action through the iterated coproduct
# ---------------------------------------------------------------------------

def coproduct_act(eps: Eps, gen: GenLabel, t: TensorState, xs=None, zmode=False):
    """Apply a generator to a tensor state via the left-iterated coproduct.

    Delta(e_i) = 1 (x) e_i + e_i (x) k_i^-1, Delta(f_i) = f_i (x) 1 +
    k_i (x) f_i, Delta(k) = k (x) k.  In symbolic mode e_0/f_0 on factor j
    shifts the z_j exponent; otherwise factor j carries parameter xs[j].
    """
    kind, a = gen
    nf = len(t.factors)
    if xs is None:
        xs = (ONE_S,) * nf
    if kind == "k":
        c = ONE_S
        for f in t.factors:
            c = c * qhat(eps, weight_of(State(eps, f)), a)
        return {t: c}
    i = a % eps.n
    out = {}
    if kind == "e":
        ki_inv = [qhat(eps, weight_of(State(eps, f)), alpha_w(eps.n, i)).inverse()
                  for f in t.factors]
        for j in range(nf):
            loc = act(eps, gen, State(eps, t.factors[j]),
                      ONE_S if zmode else xs[j])
            if not loc:
                continue
            (sj, cj), = loc.items()
            tail = ONE_S
            for j2 in range(j + 1, nf):
                tail = tail * ki_inv[j2]
            factors = t.factors[:j] + (sj.m,) + t.factors[j + 1:]
            zexps = t.zexps
            if zmode and i == 0:
                zexps = zexps[:j] + (zexps[j] + 1,) + zexps[j + 1:]
            _add_term(out, TensorState(eps, factors, zexps), cj * tail)
        return out
    if kind == "f":
        ki = [qhat(eps, weight_of(State(eps, f)), alpha_w(eps.n, i))
              for f in t.factors]
        for j in range(nf):
            loc = act(eps, gen, State(eps, t.factors[j]),
                      ONE_S if zmode else xs[j])
            if not loc:
                continue
            (sj, cj), = loc.items()
            head = ONE_S
            for j2 in range(j):
                head = head * ki[j2]
            factors = t.factors[:j] + (sj.m,) + t.factors[j + 1:]
            zexps = t.zexps
            if zmode and i == 0:
                zexps = zexps[:j] + (zexps[j] - 1,) + zexps[j + 1:]
            _add_term(out, TensorState(eps, factors, zexps), cj * head)
        return out
    raise ValueError(f"unknown generator kind {kind!r}")


def apply_gen(eps, gen, vec, xs=None, zmode=False):
    """Extend act/coproduct_act linearly to sparse vectors."""
    out = {}
    for key, coeff in vec.items():
        if isinstance(key, State):
            img = act(eps, gen, key, xs[0] if xs else ONE_S)
        else:
            img = coproduct_act(eps, gen, key, xs=xs, zmode=zmode)
        for k2, c2 in img.items():
            _add_term(out, k2, coeff * c2)
    return out


def apply_word(eps, word, vec, xs=None, zmode=False):
    """Apply a product of generators, rightmost factor first."""
    for gen in reversed(word):
        if not vec:
            return {}
        vec = apply_gen(eps, gen, vec, xs=xs, zmode=zmode)
    return vec


# ---------------------------------------------------------------------------
# formal operator expressions (sums of scaled generator words)
# ---------------------------------------------------------------------------

class OperatorExpr:
    """Finite sum of Scalar-scaled generator words, evaluated via apply_word."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = tuple((c, tuple(w)) for c, w in terms if not c.is_zero())

    @classmethod
    def gen(cls, g: GenLabel):
        return cls([(ONE_S, (g,))])

    def __mul__(self, other):
        if isinstance(other, OperatorExpr):
            return OperatorExpr([(c1 * c2, w1 + w2)
                                 for c1, w1 in self.terms
                                 for c2, w2 in other.terms])
        return OperatorExpr([(c * other, w) for c, w in self.terms])

    __rmul__ = __mul__

    def __add__(self, other):
        return OperatorExpr(list(self.terms) + list(other.terms))

    def __neg__(self):
        return OperatorExpr([(-c, w) for c, w in self.terms])

    def __sub__(self, other):
        return self + (-other)

    def apply(self, eps, vec, xs=None, zmode=False):
        out = {}
        for c, w in self.terms:
            img = apply_word(eps, w, vec, xs=xs, zmode=zmode)
            out = vadd(out, vscale(img, c))
        return out

    def substituted(self, table):
        """Replace each generator by an OperatorExpr from table (GenLabel -> expr)."""
        out_terms = []
        for c, w in self.terms:
            acc = OperatorExpr([(c, ())])
            for g in w:
                acc = acc * table[g]
            out_terms.extend(acc.terms)
        return OperatorExpr(out_terms)

    def render(self):
        if not self.terms:
            return "0"
        return " + ".join(
            (f"({c.render()})*" if not c.is_one() else "")
            + "".join(g.render() for g in w)
            for c, w in self.terms)


def bracket(x: OperatorExpr, y: OperatorExpr, tw: Scalar) -> OperatorExpr:
    """Twisted commutator [x, y]_t = xy - t yx."""
    return x * y - (y * x) * tw


def antipode(eps: Eps, gen: GenLabel) -> OperatorExpr:
    """S(k_mu) = k_{-mu}, S(e_i) = -k_i e_i, S(f_i) = -f_i k_i^-1."""
    kind, a = gen
    if kind == "k":
        return OperatorExpr.gen(K(-a))
    ai = alpha_w(eps.n, a)
    if kind == "e":
        return -(OperatorExpr.gen(K(ai)) * OperatorExpr.gen(gen))
    return -(OperatorExpr.gen(gen) * OperatorExpr.gen(K(-ai)))


# ---------------------------------------------------------------------------
# relation suite
# ---------------------------------------------------------------------------

def _ef_commutator_side(eps, i, j, vec, xs, zmode):
    a = apply_gen(eps, F(j), vec, xs=xs, zmode=zmode)
    a = apply_gen(eps, E(i), a, xs=xs, zmode=zmode)
    b = apply_gen(eps, E(i), vec, xs=xs, zmode=zmode)
    b = apply_gen(eps, F(j), b, xs=xs, zmode=zmode)
    return vsub(a, b)


def _serre_even(eps, i, j, kind, vec, xs, zmode):
    g = E if kind == "e" else F
    sign = Scalar.from_int(-1 if eps.entries[(i - 1) % eps.n] else 1)
    t1 = apply_word(eps, (g(i), g(i), g(j)), vec, xs=xs, zmode=zmode)
    t2 = apply_word(eps, (g(i), g(j), g(i)), vec, xs=xs, zmode=zmode)
    t3 = apply_word(eps, (g(j), g(i), g(i)), vec, xs=xs, zmode=zmode)
    return vadd(vsub(t1, vscale(t2, sign * qint(2))), t3)


def _serre_odd(eps, i, kind, vec, xs, zmode):
    g = E if kind == "e" else F
    im, ip = i - 1, i + 1
    sign = Scalar.from_int(-1 if eps.entries[(i - 1) % eps.n] else 1)
    words = [
        (ONE_S, (g(i), g(im), g(i), g(ip))),
        (-ONE_S, (g(i), g(ip), g(i), g(im))),
        (ONE_S, (g(ip), g(i), g(im), g(i))),
        (-ONE_S, (g(im), g(i), g(ip), g(i))),
        (sign * qint(2), (g(i), g(im), g(ip), g(i))),
    ]
    out = {}
    for c, w in words:
        out = vadd(out, vscale(apply_word(eps, w, vec, xs=xs, zmode=zmode), c))
    return out


def check_relation(eps: Eps, rel_id, s, xs=None, zmode=None) -> bool:
    """Exact check of one defining relation on a single state or tensor state.

    rel_id is a tuple: ("k-law", mu, nu), ("k-e", i, mu), ("k-f", i, mu),
    ("ef", i, j), ("odd-sq", i, kind), ("distant", i, j, kind),
    ("serre-even", i, j, kind), ("serre-odd", i, kind).
    """
    single = isinstance(s, State)
    if zmode is None:
        zmode = not single
    vec = {s: ONE_S}
    n = eps.n
    kind = rel_id[0]
    if kind == "k-law":
        _, mu, nu = rel_id
        a = apply_gen(eps, K(mu), apply_gen(eps, K(nu), vec, xs=xs, zmode=zmode),
                      xs=xs, zmode=zmode)
        b = apply_gen(eps, K(mu + nu), vec, xs=xs, zmode=zmode)
        return vsub(a, b) == {}
    if kind in ("k-e", "k-f"):
        _, i, mu = rel_id
        g = E(i) if kind == "k-e" else F(i)
        lhs = apply_gen(eps, K(mu), apply_gen(eps, g, vec, xs=xs, zmode=zmode),
                        xs=xs, zmode=zmode)
        coeff = qhat(eps, mu, alpha_w(n, i))
        if kind == "k-f":
            coeff = coeff.inverse()
        rhs = vscale(apply_gen(eps, g, apply_gen(eps, K(mu), vec, xs=xs, zmode=zmode),
                               xs=xs, zmode=zmode), coeff)
        return vsub(lhs, rhs) == {}
    if kind == "ef":
        _, i, j = rel_id
        lhs = _ef_commutator_side(eps, i, j, vec, xs, zmode)
        if i != j:
            return lhs == {}
        ai = alpha_w(n, i)
        kp = apply_gen(eps, K(ai), vec, xs=xs, zmode=zmode)
        km = apply_gen(eps, K(-ai), vec, xs=xs, zmode=zmode)
        rhs = vscale(vsub(kp, km), (Q - QINV).inverse())
        return vsub(lhs, rhs) == {}
    if kind == "odd-sq":
        _, i, gk = rel_id
        g = E(i) if gk == "e" else F(i)
        return apply_word(eps, (g, g), vec, xs=xs, zmode=zmode) == {}
    if kind == "distant":
        _, i, j, gk = rel_id
        g1 = E(i) if gk == "e" else F(i)
        g2 = E(j) if gk == "e" else F(j)
        a = apply_word(eps, (g1, g2), vec, xs=xs, zmode=zmode)
        b = apply_word(eps, (g2, g1), vec, xs=xs, zmode=zmode)
        return vsub(a, b) == {}
    if kind == "serre-even":
        _, i, j, gk = rel_id
        return _serre_even(eps, i, j, gk, vec, xs, zmode) == {}
    if kind == "serre-odd":
        _, i, gk = rel_id
        return _serre_odd(eps, i, gk, vec, xs, zmode) == {}
    raise ValueError(f"unknown relation id {rel_id!r}")


def relation_ids(eps: Eps, include_k=True):
    """Deterministic enumeration of the defining-relation instances."""
    n = eps.n
    out = []
    if include_k:
        mus = [Lambda_w(n)] + [delta_w(n, i) for i in range(1, n + 1)]
        out.append(("k-law", mus[0] + mus[1], mus[min(2, n)]))
        out.append(("k-law", mus[1], mus[1]))
        for i in range(n):
            for mu in mus:
                out.append(("k-e", i, mu))
                out.append(("k-f", i, mu))
    for i in range(n):
        for j in range(n):
            out.append(("ef", i, j))
    for i in range(n):
        if eps.parity(i) == 1:
            out.append(("odd-sq", i, "e"))
            out.append(("odd-sq", i, "f"))
    for i in range(n):
        for j in range(i + 1, n):
            d = (i - j) % n
            if d not in (1, n - 1):
                out.append(("distant", i, j, "e"))
                out.append(("distant", i, j, "f"))
    for i in range(n):
        if eps.parity(i) == 0:
            for j in ((i - 1) % n, (i + 1) % n):
                out.append(("serre-even", i, j, "e"))
                out.append(("serre-even", i, j, "f"))
        else:
            out.append(("serre-odd", i, "e"))
            out.append(("serre-odd", i, "f"))
    return out


# ---------------------------------------------------------------------------
# state enumeration
# ---------------------------------------------------------------------------

def enumerate_states(eps: Eps, max_occ: int):
    """All admissible occupancy vectors with |m| <= max_occ, lex sorted."""
    n = eps.n
    out = []

    def rec(i, rem, acc):
        if i == n:
            out.append(State(eps, tuple(acc)))
            return
        cap = rem if eps.entries[i] == 0 else min(1, rem)
        for v in range(cap + 1):
            acc.append(v)
            rec(i + 1, rem - v, acc)
            acc.pop()

    rec(0, max_occ, [])
    out.sort(key=lambda s: s.m)
    return out


def states_of_charge(eps: Eps, l: int, max_occ: int):
    return [s for s in enumerate_states(eps, max_occ) if s.charge() == l]


def highest_state(eps: Eps, l: int) -> State:
    """The highest-weight state of the charge-l module: fill a single row
    (positive charge, letters r+1..n) or column rule on the other side."""
    n, r = eps.n, eps.r
    m = [0] * n
    if l >= 0:
        remaining = l
        slot = r + 1
        while remaining > 0:
            if slot > n:
                raise ValueError(f"charge {l} not representable under {eps}")
            if eps.is_bosonic(slot):
                m[slot - 1] += remaining
                remaining = 0
            else:
                m[slot - 1] = 1
                remaining -= 1
                slot += 1
    else:
        remaining = -l
        slot = r
        while remaining > 0:
            if slot < 1:
                raise ValueError(f"charge {l} not representable under {eps}")
            if eps.is_bosonic(slot):
                m[slot - 1] += remaining
                remaining = 0
            else:
                m[slot - 1] = 1
                remaining -= 1
                slot -= 1
    return State(eps, tuple(m))


def coproduct_act_right(eps: Eps, gen: GenLabel, t: TensorState):
    """Right-nested coproduct expansion (head factor split off recursively).

    Must agree with the left-iterated coproduct_act by coassociativity;
    used as an independent witness in tests, in symbolic-z mode.
    """
    kind, a = gen
    nf = t.nfactors()
    if nf == 1:
        loc = act(eps, gen, State(eps, t.factors[0]), ONE_S)
        out = {}
        for s1, c in loc.items():
            dz = 0
            if kind == "e" and a % eps.n == 0:
                dz = 1
            elif kind == "f" and a % eps.n == 0:
                dz = -1
            _add_term(out, TensorState(eps, (s1.m,), (t.zexps[0] + dz,)), c)
        return out
    head = TensorState(eps, t.factors[:1], t.zexps[:1])
    tail = TensorState(eps, t.factors[1:], t.zexps[1:])

    def glue(hvec, tvec):
        out2 = {}
        for hk, hc in hvec.items():
            for tk, tc in tvec.items():
                key = TensorState(eps, hk.factors + tk.factors, hk.zexps + tk.zexps)
                _add_term(out2, key, hc * tc)
        return out2

    if kind == "k":
        return glue(coproduct_act_right(eps, gen, head),
                    coproduct_act_right(eps, gen, tail))
    ai = alpha_w(eps.n, a)
    out = {}
    if kind == "e":
        # 1 (x) e  +  e (x) k^-1
        out = vadd(out, glue({head: ONE_S}, coproduct_act_right(eps, gen, tail)))
        kt = ONE_S
        for f in tail.factors:
            kt = kt * qhat(eps, weight_of(State(eps, f)), ai).inverse()
        out = vadd(out, glue(vscale(coproduct_act_right(eps, gen, head), kt),
                             {tail: ONE_S}))
    else:
        # f (x) 1  +  k (x) f
        out = vadd(out, glue(coproduct_act_right(eps, gen, head), {tail: ONE_S}))
        kh = qhat(eps, weight_of(State(eps, head.factors[0])), ai)
        out = vadd(out, glue({head: kh}, coproduct_act_right(eps, gen, tail)))
    return out
