"""Weight spaces of tensor products, singular vectors, irreducible
components and normalized projectors.

All linear algebra is exact over Q(q) or Q(q)(z); row reduction pivots on
the lexicographically smallest basis key, so bases and reports are
reproducible.
"""

from __future__ import annotations

from .chars import eps_highest_weight
from .engine import (
    E, F, K, State, TensorState, act, apply_gen, coproduct_act,
    highest_state, state, tensor_state, vadd, vscale, vsub, weight_of,
)
from .lattice import Eps, Weight, alpha_w
from .scalars import ONE_S, Q, ZERO_S, Scalar, qfact, qint


# ---------------------------------------------------------------------------
# exact row reduction over a field (Scalar or ZScalar coefficients)
# ---------------------------------------------------------------------------

class Span:
    """Row space in echelon form; rows are dicts key -> coefficient with the
    pivot on the lex-smallest key."""

    def __init__(self):
        self.rows = {}  # pivot key -> row (pivot coefficient 1)

    def reduce(self, vec):
        vec = dict(vec)
        while vec:
            p = min(vec)
            row = self.rows.get(p)
            if row is None:
                return vec, p
            c = vec[p]
            for k, v in row.items():
                s = vec.get(k)
                s = -c * v if s is None else s - c * v
                if (hasattr(s, "is_zero") and s.is_zero()):
                    vec.pop(k, None)
                else:
                    vec[k] = s
        return vec, None

    def add(self, vec) -> bool:
        """Insert if independent; returns True when the span grew."""
        red, p = self.reduce(vec)
        if p is None:
            return False
        inv = red[p].inverse()
        self.rows[p] = {k: v * inv for k, v in red.items()}
        return True

    def contains(self, vec) -> bool:
        red, p = self.reduce(vec)
        return p is None

    def rank(self):
        return len(self.rows)


def solve_in_span(columns, target):
    """Coordinates of target in the span of the given column vectors, or None.

    Deterministic elimination with lex-smallest pivots; exact over the
    coefficient field of the inputs.
    """
    rows = []  # list of (reduced_vec, pivot, coords)
    for idx, col in enumerate(columns):
        vec = dict(col)
        coords = {idx: ONE_S}
        vec, coords = _reduce_tracked(rows, vec, coords)
        if vec:
            p = min(vec)
            inv = vec[p].inverse()
            vec = {k: v * inv for k, v in vec.items()}
            coords = {k: v * inv for k, v in coords.items()}
            rows.append((vec, p, coords))
    tvec = dict(target)
    tcoords = {}
    tvec, tcoords = _reduce_tracked(rows, tvec, tcoords, negate=True)
    if tvec:
        return None
    return tcoords


def _reduce_tracked(rows, vec, coords, negate=False):
    changed = True
    while changed and vec:
        changed = False
        p = min(vec)
        for rvec, rp, rcoords in rows:
            if rp == p:
                c = vec[p]
                for k, v in rvec.items():
                    s = vec.get(k)
                    s = -c * v if s is None else s - c * v
                    if hasattr(s, "is_zero") and s.is_zero():
                        vec.pop(k, None)
                    else:
                        vec[k] = s
                cc = c if negate else -c
                for k, v in rcoords.items():
                    s = coords.get(k)
                    s = cc * v if s is None else s + cc * v
                    if hasattr(s, "is_zero") and s.is_zero():
                        coords.pop(k, None)
                    else:
                        coords[k] = s
                changed = bool(vec)
                break
    return vec, coords


def nullspace(vectors_images, basis_keys):
    """Basis of the kernel of the linear map sending basis_keys[i] to
    vectors_images[i]; deterministic, pivot order lexicographic."""
    rows = []
    kernel = []
    for idx, img in enumerate(vectors_images):
        vec = dict(img)
        coords = {idx: ONE_S}
        vec, coords = _reduce_tracked(rows, vec, coords)
        if vec:
            p = min(vec)
            inv = vec[p].inverse()
            vec = {k: v * inv for k, v in vec.items()}
            coords = {k: v * inv for k, v in coords.items()}
            rows.append((vec, p, coords))
        else:
            kernel.append({basis_keys[k]: v for k, v in coords.items()})
    return kernel


def rank_of(vectors) -> int:
    sp = Span()
    n = 0
    for v in vectors:
        if sp.add(v):
            n += 1
    return n


class WeightMatrix:
    """Exact matrix of a linear map between ordered weight-space bases."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self.entries = dict(entries)  # (i, j) -> coefficient

    @classmethod
    def from_columns(cls, rows, cols, column_vecs):
        ri = {k: i for i, k in enumerate(rows)}
        entries = {}
        for j, vec in enumerate(column_vecs):
            for k, c in vec.items():
                entries[(ri[k], j)] = c
        return cls(rows, cols, entries)

    def column(self, j):
        return {self.rows[i]: c for (i, jj), c in self.entries.items() if jj == j}

    def columns(self):
        return [self.column(j) for j in range(len(self.cols))]

    def rank(self):
        return rank_of(self.columns())

    def __eq__(self, other):
        return (self.rows == other.rows and self.cols == other.cols
                and _entries_equal(self.entries, other.entries))

    def scaled(self, c):
        return WeightMatrix(self.rows, self.cols,
                            {k: v * c for k, v in self.entries.items()})


def _entries_equal(a, b):
    for k in set(a) | set(b):
        va, vb = a.get(k), b.get(k)
        if va is None:
            if not vb.is_zero():
                return False
        elif vb is None:
            if not va.is_zero():
                return False
        elif not (va - vb).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# weight-space state bases of tensor products
# ---------------------------------------------------------------------------

def tensor_top_weight(eps: Eps, charges) -> Weight:
    w = None
    for l in charges:
        wl = weight_of(highest_state(eps, l))
        w = wl if w is None else w + wl
    return w


def depth_offset(eps: Eps, top: Weight, mu: Weight):
    """Simple-root coordinates c with mu = top - sum c_i alpha_i (i = 1..n-1),
    or None when mu is not below top in the classical cone."""
    n = eps.n
    diff = top - mu
    c = []
    acc = 0
    for i in range(n - 1):
        acc += diff.d[i]
        if acc < 0:
            return None
        c.append(acc)
    if acc + diff.d[n - 1] != 0 or diff.level != 0:
        return None
    return tuple(c)


def weight_at_offset(eps: Eps, top: Weight, c) -> Weight:
    mu = top
    for i, ci in enumerate(c, start=1):
        if ci:
            mu = mu - alpha_w(eps.n, i).smul(ci)
    return mu


def tensor_weight_states(eps: Eps, charges, mu: Weight):
    """All tensor states of the given factor charges and classical weight mu,
    lex sorted."""
    n, r = eps.n, eps.r
    k = len(charges)
    if mu.level != k:
        return []
    bounds = []
    for i in range(n):
        b = -mu.d[i] if i < r else mu.d[i]
        if b < 0:
            return []
        bounds.append(b)
    out = []
    factors = [[0] * n for _ in range(k)]

    def rec_slot(i):
        if i == n:
            if all(State(eps, tuple(f)).charge() == charges[j]
                   for j, f in enumerate(factors)):
                out.append(TensorState(eps, tuple(tuple(f) for f in factors),
                                       (0,) * k))
            return
        cap = 1 if eps.entries[i] == 1 else None

        def rec_factor(j, rem):
            if j == k - 1:
                if cap is not None and rem > cap:
                    return
                factors[j][i] = rem
                rec_slot(i + 1)
                factors[j][i] = 0
                return
            top = rem if cap is None else min(rem, cap)
            for v in range(top + 1):
                factors[j][i] = v
                rec_factor(j + 1, rem - v)
                factors[j][i] = 0

        rec_factor(0, bounds[i])

    rec_slot(0)
    out.sort(key=lambda t: t.factors)
    return out


# ---------------------------------------------------------------------------
# singular vectors
# ---------------------------------------------------------------------------

def N_of(l, m) -> int:
    """Smallest N >= 0 with max(l,m)+N >= 0 >= min(l,m)-N."""
    l1, l2 = max(l, m), min(l, m)
    return max(-l1, l2, 0)


def two_row(l, m, t):
    """The level-two component label (max+t, min-t)."""
    return (max(l, m) + t, min(l, m) - t)


def vab_plus(eps: Eps, l, m, a, b):
    vl, vm = highest_state(eps, l).m, highest_state(eps, m).m
    r = eps.r
    fl = list(vl)
    fm = list(vm)
    fl[r - 1] += a
    fl[r] += a
    fm[r - 1] += b
    fm[r] += b
    for f in (fl, fm):
        for i, x in enumerate(f):
            if eps.entries[i] == 1 and x > 1:
                return None
    return TensorState(eps, (tuple(fl), tuple(fm)), (0, 0))


def vab_minus(eps: Eps, l, m, a, b):
    l1, l2 = max(l, m), min(l, m)
    vl, vm = highest_state(eps, l).m, highest_state(eps, m).m
    r = eps.r
    fl, fm = list(vl), list(vm)
    if l2 >= 0:
        deltas = ((r, -1), (r + 1, 1))    # slots r+1, r+2 (0-based r, r+1)
    elif l1 <= 0:
        deltas = ((r - 2, 1), (r - 1, -1))  # slots r-1, r (0-based r-2, r-1)
    else:
        raise ValueError("minus-type vectors need min >= 0 or max <= 0")
    for f, count in ((fl, a), (fm, b)):
        for idx, sgn in deltas:
            f[idx] += sgn * count
            if f[idx] < 0 or (eps.entries[idx] == 1 and f[idx] > 1):
                return None
    return TensorState(eps, (tuple(fl), tuple(fm)), (0, 0))


def singular_formula(eps: Eps, l, m, i):
    """Closed-form singular vector u_i of the two-factor tensor product;
    leading coefficient (on the a = 0 state) is 1.  Needs the all-bosonic
    shape of the participating states; raises when not representable."""
    N = N_of(l, m)
    if i < -N:
        raise ValueError(f"index {i} below -N = {-N}")
    out = {}
    if i >= 0:
        for j in range(0, i + 1):
            c = ONE_S
            for k in range(1, j + 1):
                c = c * (-Q ** (-(abs(m) + 2 * i - 2 * k + 1))
                         * qint(abs(m) + i + 1 - k) * qint(i + 1 - k)
                         / (qint(abs(l) + k) * qint(k)))
            v = vab_plus(eps, l, m, j, i - j)
            if v is None:
                if c.is_zero():
                    continue
                raise ValueError(f"state for (a,b)=({j},{i - j}) not "
                                 f"representable under {eps}")
            if not c.is_zero():
                out[v] = c
    else:
        for j in range(0, -i + 1):
            c = ONE_S
            for k in range(1, j + 1):
                c = c * (-Q ** (abs(m) + 2 * i + 2 * k)
                         * qint(-i + 1 - k) / qint(k))
            v = vab_minus(eps, l, m, j, -i - j)
            if v is None:
                if c.is_zero():
                    continue
                raise ValueError(f"state for (a,b)=({j},{-i - j}) not "
                                 f"representable under {eps}")
            if not c.is_zero():
                out[v] = c
    return out


def singular_weight(eps: Eps, l, m, t):
    """Weight of the component-t singular vector, or None if absent."""
    return eps_highest_weight(two_row(l, m, t), eps)


def singular_kernel(eps: Eps, charges, mu: Weight):
    """Basis of the joint kernel of all raising operators e_i (i != 0)
    restricted to the weight-mu slice of the tensor product."""
    basis = tensor_weight_states(eps, charges, mu)
    if not basis:
        return []
    images = []
    for s in basis:
        stacked = {}
        for i in range(1, eps.n):
            img = coproduct_act(eps, E(i), s)
            for k, c in img.items():
                stacked[(i, k)] = c
        images.append(stacked)
    return nullspace(images, basis)


def _anchor_state(eps, l, m, i):
    v = vab_plus(eps, l, m, 0, i) if i >= 0 else vab_minus(eps, l, m, 0, -i)
    return v


def singular_vector(eps: Eps, l, m, t):
    """Component-t singular vector of W_l (x) W_m, or None when the component
    is absent.  All-bosonic sequences use the closed formula; otherwise the
    kernel oracle.  Normalization: coefficient 1 on the distinguished product
    state when representable, else on the lex-smallest support state."""
    mu = singular_weight(eps, l, m, t)
    if mu is None:
        return None
    i = t - N_of(l, m)
    if not any(eps.entries):
        return singular_formula(eps, l, m, i)
    vecs = singular_kernel(eps, (l, m), mu)
    if len(vecs) != 1:
        raise ArithmeticError(
            f"expected a one-dimensional singular space at t={t}, got "
            f"{len(vecs)} (eps={eps.bits()}, charges=({l},{m}))")
    vec = vecs[0]
    anchor = _anchor_state(eps, l, m, i)
    if anchor is None or anchor not in vec:
        anchor = min(vec)
    return vscale(vec, vec[anchor].inverse())


# ---------------------------------------------------------------------------
# component bases and projectors
# ---------------------------------------------------------------------------

class ComponentPair:
    """Irreducible components of W_l (x) W_m paired with their mirrors in
    W_m (x) W_l.

    Bases come from f-monomials applied to the paired singular vectors;
    the same accepted words are applied on both sides, so the coordinate
    maps intertwine the two orders.
    """

    def __init__(self, eps: Eps, l, m):
        self.eps = eps
        self.l, self.m = l, m
        self.top = tensor_top_weight(eps, (l, m))
        self._u = {}       # t -> (vec, mirror) or None
        self._boxes = {}   # (t, offset) -> list of (vec, mirror)
        self._spans = {}   # (t, offset) -> Span

    def singular(self, t):
        if t not in self._u:
            u = singular_vector(self.eps, self.l, self.m, t)
            if u is None:
                self._u[t] = None
            else:
                up = singular_vector(self.eps, self.m, self.l, t)
                self._u[t] = (u, up)
        return self._u[t]

    def offset_of_component(self, t):
        mu = singular_weight(self.eps, self.l, self.m, t)
        if mu is None:
            return None
        return depth_offset(self.eps, self.top, mu)

    def basis(self, t, offset):
        """Paired basis of component t at the given offset from the
        component's own singular weight."""
        key = (t, tuple(offset))
        got = self._boxes.get(key)
        if got is not None:
            return got
        pair = self.singular(t)
        if pair is None:
            self._boxes[key] = []
            return []
        if not any(offset):
            out = [pair]
            self._boxes[key] = out
            return out
        span = Span()
        out = []
        for i in range(1, self.eps.n):
            ci = offset[i - 1]
            if ci <= 0:
                continue
            prev = offset[:i - 1] + (ci - 1,) + offset[i:]
            for vec, mirror in self.basis(t, prev):
                w = apply_gen(self.eps, F(i), vec)
                if not w:
                    continue
                if span.add(w):
                    mw = apply_gen(self.eps, F(i), mirror)
                    if not mw:
                        raise ArithmeticError("component mirror degenerated")
                    out.append((w, mw))
        self._boxes[key] = out
        return out

    def components_at(self, mu: Weight):
        """(t, offset) pairs of components meeting the weight-mu slice.

        The component-t singular weight sits at depth >= |t - N| below the
        tensor top, so t is bounded by N + depth(mu)."""
        rel_top = depth_offset(self.eps, self.top, mu)
        if rel_top is None:
            return []
        tmax = N_of(self.l, self.m) + sum(rel_top)
        out = []
        for t in range(tmax + 1):
            mu_t = singular_weight(self.eps, self.l, self.m, t)
            if mu_t is None:
                continue
            rel = depth_offset(self.eps, mu_t, mu)
            if rel is not None and self.singular(t) is not None:
                out.append((t, rel))
        return out

    def decompose(self, vec):
        """Split a weight vector into component parts; returns dict
        t -> (part, mirror_part)."""
        if not vec:
            return {}
        mu = weight_of(next(iter(vec)))
        mu = Weight(mu.level, mu.d, 0)
        comps = self.components_at(mu)
        columns = []
        labels = []
        for t, rel in comps:
            for bi, (bvec, bmir) in enumerate(self.basis(t, rel)):
                columns.append(bvec)
                labels.append((t, rel, bi))
        coords = solve_in_span(columns, vec)
        if coords is None:
            raise ArithmeticError("vector not resolved by the computed "
                                  "component bases (depth too small?)")
        parts = {}
        for idx, c in coords.items():
            t, rel, bi = labels[idx]
            bvec, bmir = self.basis(t, rel)[bi]
            cur = parts.get(t)
            add_v = vscale(bvec, c)
            add_m = vscale(bmir, c)
            if cur is None:
                parts[t] = (add_v, add_m)
            else:
                parts[t] = (vadd(cur[0], add_v), vadd(cur[1], add_m))
        return {t: pm for t, pm in parts.items() if pm[0] or pm[1]}


def projector_apply(eps: Eps, l, m, t, vec, depth=None, cache=None):
    """Image of vec under the component-t projector onto the mirrored order.

    Kills every component t' != t and maps the chosen singular vector of
    component t to its mirror.
    """
    cache = cache or ComponentPair(eps, l, m)
    parts = cache.decompose(vec)
    got = parts.get(t)
    return got[1] if got else {}


# ---------------------------------------------------------------------------
# ladder operators between neighbouring singular vectors
# ---------------------------------------------------------------------------

def ladder_words(eps: Eps, l, m):
    """Words for the raising/lowering ladders E+, F+, E-, F- acting on the
    two-factor product states; the minus pair depends on the sign pattern."""
    n, r = eps.n, eps.r
    l1, l2 = max(l, m), min(l, m)
    Ep = tuple(E(i) for i in range(r + 1, n)) \
        + tuple(E(i) for i in range(r - 1, 0, -1)) + (E(0),)
    Fp = (F(0),) + tuple(F(i) for i in range(1, r)) \
        + tuple(F(i) for i in range(n - 1, r, -1))
    if l2 >= 0:
        Em = (E(r),) + tuple(E(i) for i in range(r + 2, n)) \
            + tuple(E(i) for i in range(r - 1, 0, -1)) + (E(0),)
        Fm = (F(0),) + tuple(F(i) for i in range(n - 1, r + 1, -1)) \
            + tuple(F(i) for i in range(1, r)) + (F(r),)
    elif l1 <= 0:
        Em = (E(r),) + tuple(E(i) for i in range(r + 1, n)) \
            + tuple(E(i) for i in range(r - 2, 0, -1)) + (E(0),)
        Fm = (F(0),) + tuple(F(i) for i in range(1, r - 1)) \
            + tuple(F(i) for i in range(n - 1, r, -1)) + (F(r),)
    else:
        Em = Fm = None
    return {"E+": Ep, "F+": Fp, "E-": Em, "F-": Fm}


def _term(eps, builder, l, m, a, b, coeff):
    """coeff * v_{a,b}; None states must come with vanishing coefficients."""
    if a < 0 or b < 0 or coeff.is_zero():
        return {}
    v = builder(eps, l, m, a, b)
    if v is None:
        if coeff.is_zero():
            return {}
        raise AssertionError(f"nonzero coefficient on a missing state "
                             f"(a,b)=({a},{b})")
    return {v: coeff}


def check_ladders(eps: Eps, l, m, amax, bmax):
    """Exact check of the nine ladder identities on v+_{ a,b } / v-_{a,b};
    returns a list of failure witnesses (empty when all hold)."""
    from .engine import apply_word
    words = ladder_words(eps, l, m)
    l1, l2 = max(l, m), min(l, m)
    N = N_of(l, m)
    fails = []

    def expect_eq(tag, a, b, lhs, rhs):
        if vsub(lhs, rhs) != {}:
            fails.append((tag, a, b))

    for a in range(amax + 1):
        for b in range(bmax + 1):
            vp = vab_plus(eps, l, m, a, b)
            if vp is not None:
                vec = {vp: ONE_S}
                lhs = apply_word(eps, words["E+"], vec)
                rhs = vadd(_term(eps, vab_plus, l, m, a, b + 1, ONE_S),
                           _term(eps, vab_plus, l, m, a + 1, b,
                                 Q ** (-abs(m) - 2 * b - 1)))
                expect_eq("E+", a, b, lhs, rhs)
                lhs = apply_word(eps, (F(eps.r),), vec)
                rhs = vadd(_term(eps, vab_plus, l, m, a, b + 1,
                                 Q ** (-abs(l) - 2 * a - 1)),
                           _term(eps, vab_plus, l, m, a + 1, b, ONE_S))
                expect_eq("f_r", a, b, lhs, rhs)
                lhs = apply_word(eps, words["F+"], vec)
                rhs = vadd(
                    _term(eps, vab_plus, l, m, a - 1, b,
                          -qint(a + abs(l)) * qint(a)),
                    _term(eps, vab_plus, l, m, a, b - 1,
                          -(Q ** (2 * a + abs(l) + 1))
                          * qint(b + abs(m)) * qint(b)))
                expect_eq("F+", a, b, lhs, rhs)
            if words["E-"] is None or a + b > N:
                continue
            vm_ = vab_minus(eps, l, m, a, b)
            if vm_ is None:
                continue
            vec = {vm_: ONE_S}
            if l2 >= 0:
                coeffs = {
                    "E-": ((-qint(m - b), a, b + 1),
                           (-(Q ** (m - 2 * b)) * qint(l - a), a + 1, b)),
                    "f": ((Q ** (l - 2 * a) * qint(m - b), a, b + 1),
                          (qint(l - a), a + 1, b)),
                    "F-": ((-qint(a), a - 1, b),
                           (-(Q ** (-l + 2 * a)) * qint(b), a, b - 1)),
                }
                fmid = F(eps.r + 1)
            else:
                coeffs = {
                    "E-": ((-qint(-m - b), a, b + 1),
                           (-(Q ** (-m - 2 * b)) * qint(-l - a), a + 1, b)),
                    "f": ((Q ** (-l - 2 * a) * qint(-m - b), a, b + 1),
                          (qint(-l - a), a + 1, b)),
                    "F-": ((-qint(a), a - 1, b),
                           (-(Q ** (l + 2 * a)) * qint(b), a, b - 1)),
                }
                fmid = F(eps.r - 1)
            for tag, word in (("E-", words["E-"]), ("f", (fmid,)),
                              ("F-", words["F-"])):
                lhs = apply_word(eps, word, vec)
                rhs = {}
                for c, aa, bb in coeffs[tag]:
                    rhs = vadd(rhs, _term(eps, vab_minus, l, m, aa, bb, c))
                expect_eq(tag + "-minus", a, b, lhs, rhs)
    return fails


# ---------------------------------------------------------------------------
# bilinear form and polarization
# ---------------------------------------------------------------------------

def form_norm(s: State) -> Scalar:
    """(|m>, |m>) = q^(-sum m_i(m_i-1)/2) prod [m_i]!."""
    e = -sum(x * (x - 1) // 2 for x in s.m)
    out = Q ** e
    for x in s.m:
        out = out * qfact(x)
    return out


def form_value(v, w) -> Scalar:
    """Bilinear form of two sparse vectors over single states (diagonal)."""
    out = ZERO_S
    for s, c in v.items():
        cw = w.get(s)
        if cw is not None:
            out = out + c * cw * form_norm(s)
    return out


def eta_expr(eps: Eps, gen):
    """Anti-involution on the finite-type generators, as an operator word."""
    from .engine import GenLabel, OperatorExpr
    kind, i = gen
    if kind == "k":
        return OperatorExpr.gen(gen)
    r, n = eps.r, eps.n
    if not (1 <= i <= n - 1):
        raise ValueError("eta is defined on the finite-type generators")
    ai = alpha_w(n, i)
    qi = eps.q_i(i)
    mq2 = -(Q ** 2)
    if kind == "e":
        if i < r:
            c = mq2 ** (eps.entries[i - 1] - eps.entries[i]) * qi
        elif i == r:
            c = mq2 ** (eps.entries[r - 1] - 1) * qi
        else:
            c = qi
        return c * (OperatorExpr.gen(F(i)) * OperatorExpr.gen(K(-ai)))
    if kind == "f":
        if i < r:
            c = mq2 ** (eps.entries[i] - eps.entries[i - 1]) * qi.inverse()
        elif i == r:
            c = mq2 ** (1 - eps.entries[r - 1]) * qi.inverse()
        else:
            c = qi.inverse()
        return c * (OperatorExpr.gen(K(ai)) * OperatorExpr.gen(E(i)))
    raise ValueError(f"unknown generator {gen!r}")


def polarization_check(eps: Eps, gen, v: State, w: State) -> bool:
    """(x v, w) == (v, eta(x) w), exactly."""
    lhs = form_value(act(eps, gen, v), {w: ONE_S})
    ew = eta_expr(eps, gen).apply(eps, {w: ONE_S})
    rhs = form_value({v: ONE_S}, ew)
    return lhs == rhs
