"""Partition combinatorics and truncated character polynomials.

Characters live in Z[t, x_1..x_{n-r}, y_1..y_r] truncated at a total
(x,y)-degree; Schur and skew Schur polynomials come from semistandard
tableau enumeration with a Jacobi-Trudi cross-check; rational multiplicity
coefficients for GL_l use the alternant (Laurent-Schur) expansion.
"""

from __future__ import annotations

from itertools import permutations

from .engine import states_of_charge
from .lattice import Eps, Weight


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

def is_gen_partition(lam):
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def split_parts(lam):
    """lam+ and lam- of a generalized partition (both ordinary partitions)."""
    plus = tuple(x for x in lam if x > 0)
    minus = tuple(sorted((-x for x in lam if x < 0), reverse=True))
    return plus, minus


def partitions_upto(max_size, max_len, max_part=None):
    """All partitions with |mu| <= max_size and length <= max_len, lex sorted."""
    out = [()]

    def rec(prefix, rem, cap):
        for p in range(min(rem, cap), 0, -1):
            if len(prefix) < max_len:
                nxt = prefix + (p,)
                out.append(nxt)
                rec(nxt, rem - p, p)

    rec((), max_size, max_part if max_part is not None else max_size)
    return sorted(set(out))


def hook_check(lam, M, N) -> bool:
    """(M|N)-hook condition: the (M+1)-th part is at most N."""
    lam = tuple(lam)
    part = lam[M] if M < len(lam) else 0
    return part <= N


# ---------------------------------------------------------------------------
# truncated character polynomials
# ---------------------------------------------------------------------------

class CharPoly:
    """Integer polynomial in t and x/y variables, exact up to total
    (x,y)-degree maxdeg; the t-degree is not truncated."""

    __slots__ = ("nx", "ny", "maxdeg", "terms")

    def __init__(self, nx, ny, maxdeg, terms=None):
        self.nx, self.ny, self.maxdeg = nx, ny, maxdeg
        self.terms = {}
        if terms:
            for key, c in terms.items():
                if c and sum(key[1]) + sum(key[2]) <= maxdeg:
                    self.terms[key] = c

    @classmethod
    def zero(cls, nx, ny, maxdeg):
        return cls(nx, ny, maxdeg)

    @classmethod
    def monomial(cls, nx, ny, maxdeg, tdeg, xe, ye, c=1):
        return cls(nx, ny, maxdeg, {(tdeg, tuple(xe), tuple(ye)): c})

    def _check(self, other):
        if self.nx != other.nx or self.ny != other.ny:
            raise ValueError("mixing character rings")
        return min(self.maxdeg, other.maxdeg)

    def __add__(self, other):
        d = self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return CharPoly(self.nx, self.ny, d, out)

    def __neg__(self):
        return CharPoly(self.nx, self.ny, self.maxdeg,
                        {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CharPoly(self.nx, self.ny, self.maxdeg,
                            {k: c * other for k, c in self.terms.items()})
        d = self._check(other)
        out = {}
        for (t1, x1, y1), c1 in self.terms.items():
            d1 = sum(x1) + sum(y1)
            for (t2, x2, y2), c2 in other.terms.items():
                if d1 + sum(x2) + sum(y2) > d:
                    continue
                key = (t1 + t2,
                       tuple(a + b for a, b in zip(x1, x2)),
                       tuple(a + b for a, b in zip(y1, y2)))
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return CharPoly(self.nx, self.ny, d, out)

    __rmul__ = __mul__

    def shift_t(self, k):
        return CharPoly(self.nx, self.ny, self.maxdeg,
                        {(t + k, x, y): c for (t, x, y), c in self.terms.items()})

    def truncated(self, d):
        return CharPoly(self.nx, self.ny, min(d, self.maxdeg), self.terms)

    def eq_to_degree(self, other, d):
        return self.truncated(d).terms == other.truncated(d).terms

    def __eq__(self, other):
        return (isinstance(other, CharPoly) and self.nx == other.nx
                and self.ny == other.ny and self.maxdeg == other.maxdeg
                and self.terms == other.terms)

    def is_zero(self):
        return not self.terms

    def sorted_monomials(self):
        return sorted(self.terms.items())

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for (t, xe, ye), c in self.sorted_monomials():
            body = []
            if t:
                body.append("t" if t == 1 else f"t^{t}")
            for i, e in enumerate(xe, start=1):
                if e:
                    body.append(f"x{i}" if e == 1 else f"x{i}^{e}")
            for j, e in enumerate(ye, start=1):
                if e:
                    body.append(f"y{j}" if e == 1 else f"y{j}^{e}")
            mono = "*".join(body) if body else "1"
            parts.append(f"{c}*{mono}" if c != 1 else mono)
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# semistandard tableaux and Schur polynomials
# ---------------------------------------------------------------------------

def _ssyt_contents(outer, inner, nv):
    """Yield content vectors of semistandard fillings of outer/inner with
    entries in 1..nv."""
    outer = [x for x in outer]
    rows = len(outer)
    if inner is None:
        inner = [0] * rows
    else:
        inner = list(inner) + [0] * (rows - len(inner))
    if any(inner[i] > outer[i] for i in range(rows)):
        raise ValueError("inner shape not contained in outer")
    # fill row by row; row entries weakly increase, columns strictly increase
    contents = []

    def rec_row(i, prev_row, acc):
        if i == rows:
            contents.append(tuple(acc))
            return
        lo, hi = inner[i], outer[i]
        row = [0] * hi

        def rec_cell(j, minval):
            if j == hi:
                rec_row(i + 1, row, acc)
                return
            above = prev_row[j] if (prev_row is not None and j < len(prev_row)
                                    and prev_row[j] > 0) else 0
            start = max(minval, above + 1)
            for v in range(start, nv + 1):
                row[j] = v
                acc[v - 1] += 1
                rec_cell(j + 1, v)
                acc[v - 1] -= 1
                row[j] = 0

        if lo == hi:
            # empty row segment: pass through (cells absent)
            rec_row(i + 1, row, acc)
        else:
            rec_cell(lo, 1)

    rec_row(0, None, [0] * nv)
    return contents


def _schur_terms(outer, inner, nv):
    out = {}
    for c in _ssyt_contents(outer, inner, nv):
        out[c] = out.get(c, 0) + 1
    return out


def schur(mu, which, nx, ny, maxdeg):
    """Schur polynomial s_mu in the x- or y-variables as a CharPoly."""
    mu = tuple(x for x in mu if x)
    nv = nx if which == "x" else ny
    if len(mu) > nv:
        return CharPoly.zero(nx, ny, maxdeg)
    if sum(mu) > maxdeg:
        return CharPoly.zero(nx, ny, maxdeg)
    out = {}
    for c, mult in _schur_terms(mu, None, nv).items():
        xe = c if which == "x" else (0,) * nx
        ye = c if which == "y" else (0,) * ny
        out[(0, xe, ye)] = mult
    return CharPoly(nx, ny, maxdeg, out)


def skew_schur(outer, inner, which, nx, ny, maxdeg):
    """Skew Schur polynomial s_{outer/inner} as a CharPoly."""
    outer = tuple(outer)
    inner = tuple(inner)
    size = sum(outer) - sum(inner)
    if size < 0 or any((inner[i] if i < len(inner) else 0) > outer[i]
                       for i in range(len(outer))):
        return CharPoly.zero(nx, ny, maxdeg)
    if size > maxdeg:
        return CharPoly.zero(nx, ny, maxdeg)
    nv = nx if which == "x" else ny
    out = {}
    for c, mult in _schur_terms(outer, inner, nv).items():
        xe = c if which == "x" else (0,) * nx
        ye = c if which == "y" else (0,) * ny
        key = (0, xe, ye)
        out[key] = out.get(key, 0) + mult
    return CharPoly(nx, ny, maxdeg, out)


def _complete_h(k, nv, nx, ny, which, maxdeg):
    """Complete homogeneous polynomial h_k."""
    if k < 0:
        return CharPoly.zero(nx, ny, maxdeg)
    return schur((k,) if k else (), which, nx, ny, maxdeg)


def schur_jacobi_trudi(outer, inner, which, nx, ny, maxdeg):
    """Skew Schur polynomial via the Jacobi-Trudi determinant."""
    outer = tuple(outer)
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    ell = len(outer)
    if ell == 0:
        return CharPoly.monomial(nx, ny, maxdeg, 0, (0,) * nx, (0,) * ny)
    out = CharPoly.zero(nx, ny, maxdeg)
    for perm in permutations(range(ell)):
        sign = 1
        seen = list(perm)
        for i in range(ell):
            for j in range(i + 1, ell):
                if seen[i] > seen[j]:
                    sign = -sign
        term = CharPoly.monomial(nx, ny, maxdeg, 0, (0,) * nx, (0,) * ny, sign)
        ok = True
        for i in range(ell):
            k = outer[i] - inner[perm[i]] - i + perm[i]
            h = _complete_h(k, nx if which == "x" else ny, nx, ny, which, maxdeg)
            if h.is_zero() and k != 0:
                ok = False
                break
            term = term * h
        if ok:
            out = out + term
    return out


# ---------------------------------------------------------------------------
# Laurent-Schur expansion for GL_l (alternant method)
# ---------------------------------------------------------------------------

def _lp_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def laurent_schur(lam, ell):
    """Character of the GL_ell irreducible with generalized h.w. lam, as a
    Laurent-monomial dict; computed by shifting to a partition and tableau
    enumeration."""
    lam = tuple(lam)
    if len(lam) != ell or not is_gen_partition(lam):
        raise ValueError("need a weakly decreasing integer vector of length ell")
    shift = -lam[-1] if lam[-1] < 0 else 0
    mu = tuple(x + shift for x in lam)
    out = {}
    for c in _ssyt_contents([x for x in mu if x], None, ell):
        e = tuple(x - shift for x in c)
        out[e] = out.get(e, 0) + 1
    if not out:  # mu empty: trivial rep (possibly shifted determinant power)
        out = {(-shift,) * ell: 1}
    return out


def star(xi):
    """xi* = (-xi_l, ..., -xi_1)."""
    return tuple(-x for x in reversed(xi))


def schur_expand(p, ell):
    """Expand a symmetric Laurent polynomial in Laurent-Schur characters."""
    p = dict(p)
    out = {}
    guard = 0
    while p:
        guard += 1
        if guard > 100000:
            raise RuntimeError("schur expansion did not terminate")
        beta = max(p)
        if not is_gen_partition(beta):
            raise ArithmeticError("input not symmetric: stray monomial "
                                  f"{beta}")
        c = p[beta]
        out[beta] = c
        s = laurent_schur(beta, ell)
        for e, m in s.items():
            v = p.get(e, 0) - c * m
            if v:
                p[e] = v
            else:
                p.pop(e, None)
    return out


def lr_star(lam, eta, xi, ell) -> int:
    """Multiplicity of V(lam) inside V(eta) (x) V(xi*), all GL_ell weights."""
    lam, eta, xi = tuple(lam), tuple(eta), tuple(xi)
    for v in (lam, eta, xi):
        if len(v) != ell or not is_gen_partition(v):
            raise ValueError(f"{v} is not a length-{ell} generalized partition")
    prod = _lp_mul(laurent_schur(eta, ell), laurent_schur(star(xi), ell))
    return schur_expand(prod, ell).get(lam, 0)


def lr_rule(lam, mu, nu) -> int:
    """Textbook Littlewood-Richardson rule: count column-strict skew tableaux
    of shape lam/mu, content nu, whose reverse reading word is a lattice word
    (independent oracle for lr_star)."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    mu = mu + (0,) * (len(lam) - len(mu))
    if any(mu[i] > lam[i] for i in range(len(lam))):
        return 0
    rows = len(lam)
    nletters = max(1, len(nu))
    count = 0
    grid = [[0] * lam[i] for i in range(rows)]

    def lattice_ok():
        seen = [0] * (nletters + 1)
        for i in range(rows):
            for j in range(lam[i] - 1, mu[i] - 1, -1):
                v = grid[i][j]
                seen[v] += 1
                if v > 1 and seen[v] > seen[v - 1]:
                    return False
        return True

    def rec(i, j, content):
        nonlocal count
        if i == rows:
            if lattice_ok():
                count += 1
            return
        if j == lam[i]:
            rec(i + 1, mu[i + 1] if i + 1 < rows else 0, content)
            return
        above = grid[i - 1][j] if i > 0 and j < lam[i - 1] and grid[i - 1][j] else 0
        left = grid[i][j - 1] if j > mu[i] else 0
        for v in range(max(1, left), len(nu) + 1):
            if above and v <= above:
                continue
            if content[v - 1] + 1 > nu[v - 1]:
                continue
            grid[i][j] = v
            content[v - 1] += 1
            rec(i, j + 1, content)
            content[v - 1] -= 1
            grid[i][j] = 0

    rec(0, mu[0], [0] * nletters)
    return count


# ---------------------------------------------------------------------------
# highest weights from sign sequences (diagram filling)
# ---------------------------------------------------------------------------

def _fill_counts(shape, bits):
    """Fill a partition with letters 0,1,2,... by the row/column rule given
    by bits[k] (0: fill first free row, 1: fill first free column); returns
    cells filled per letter, or None when letters run out."""
    shape = [x for x in shape if x]
    inner = [0] * len(shape)
    counts = []
    for b in bits:
        if all(inner[i] == shape[i] for i in range(len(shape))):
            counts.append(0)
            continue
        if b == 0:
            i = next(k for k in range(len(shape)) if inner[k] < shape[k])
            counts.append(shape[i] - inner[i])
            inner[i] = shape[i]
        else:
            free = [k for k in range(len(shape)) if inner[k] < shape[k]]
            c = min(inner[k] for k in free)
            block = [k for k in free if inner[k] == c]
            counts.append(len(block))
            for k in block:
                inner[k] += 1
    if any(inner[i] < shape[i] for i in range(len(shape))):
        return None
    return counts


def eps_highest_weight(lam, eps: Eps):
    """Highest weight attached to a generalized partition under the sign
    sequence, or None when the diagram does not fit."""
    lam = tuple(lam)
    if not is_gen_partition(lam):
        raise ValueError("not weakly decreasing")
    ell = len(lam)
    plus, minus = split_parts(lam)
    n, r = eps.n, eps.r
    plus_bits = [eps.entries[j - 1] for j in range(r + 1, n + 1)]
    minus_bits = [eps.entries[j - 1] for j in range(r, 0, -1)]
    cp = _fill_counts(plus, plus_bits)
    cm = _fill_counts(minus, minus_bits)
    if cp is None or cm is None:
        return None
    d = [0] * n
    for k, cnt in enumerate(cp):
        d[r + k] = cnt
    for k, cnt in enumerate(cm):
        d[r - 1 - k] = -cnt
    return Weight(ell, tuple(d), 0)


def in_gl_range(lam, eps: Eps) -> bool:
    return eps_highest_weight(lam, eps) is not None


def gl_range_classical(lam, r, n) -> bool:
    """Membership for the all-bosonic sequence: length bounds on both sides."""
    plus, minus = split_parts(lam)
    return len(minus) <= r and len(plus) <= n - r


# ---------------------------------------------------------------------------
# oscillator characters
# ---------------------------------------------------------------------------

def _pad(mu, ell):
    return tuple(mu) + (0,) * (ell - len(mu))


def osc_character(lam, r, n, maxdeg) -> CharPoly:
    """Truncated character of the level-l(lam) oscillator irreducible,
    computed by both closed formulas, which are compared exactly."""
    lam = tuple(lam)
    ell = len(lam)
    if not gl_range_classical(lam, r, n):
        raise ValueError(f"{lam} outside the admissible range for (r, n-r)")
    nx, ny = n - r, r
    # formula 1: sum of multiplicity-weighted products of Schur polynomials
    out1 = CharPoly.zero(nx, ny, maxdeg)
    for mu in partitions_upto(maxdeg, min(nx, ell)):
        for nu in partitions_upto(maxdeg - sum(mu), min(ny, ell)):
            if sum(mu) - sum(nu) != sum(lam):
                continue
            c = lr_star(lam, _pad(mu, ell), _pad(nu, ell), ell)
            if c:
                out1 = out1 + c * (schur(mu, "x", nx, ny, maxdeg)
                                   * schur(nu, "y", nx, ny, maxdeg))
    # formula 2: skew pairs over shifted diagrams, minimal representatives
    out2 = CharPoly.zero(nx, ny, maxdeg)
    d0 = max(0, -lam[-1])
    d = d0
    while True:
        shifted = tuple(x + d for x in lam)
        ydeg_min = d * ell - _max_eta_size(shifted, d, ell)
        if d > d0 and ydeg_min > maxdeg:
            break
        for eta in _etas_inside(shifted, d, ell):
            xdeg = sum(shifted) - sum(eta)
            ydeg = d * ell - sum(eta)
            if xdeg + ydeg > maxdeg or xdeg < 0:
                continue
            sx = skew_schur(shifted, eta, "x", nx, ny, maxdeg)
            if sx.is_zero():
                continue
            sy = skew_schur((d,) * ell, eta, "y", nx, ny, maxdeg)
            if sy.is_zero():
                continue
            out2 = out2 + sx * sy
        d += 1
    if out1.terms != out2.terms:
        raise AssertionError("internal error: the two character formulas "
                             f"disagree for {lam}")
    return out1.shift_t(ell)


def _max_eta_size(shifted, d, ell):
    return sum(min(shifted[i] if i < len(shifted) else 0, d)
               for i in range(ell - 1))


def _etas_inside(shifted, d, ell):
    """Partitions eta with length <= ell-1, eta_i <= min(shifted_i, d)."""
    caps = [min(shifted[i] if i < len(shifted) else 0, d)
            for i in range(ell - 1)]
    out = []

    def rec(i, prev, acc):
        if i == len(caps):
            out.append(tuple(x for x in acc if x))
            return
        for v in range(min(prev, caps[i]), -1, -1):
            acc.append(v)
            rec(i + 1, v, acc)
            acc.pop()

    rec(0, d, [])
    return out


def cauchy_kernel(nx, ny, maxdeg) -> CharPoly:
    """prod_{i,j} 1/(1 - x_i y_j), truncated."""
    out = CharPoly.monomial(nx, ny, maxdeg, 0, (0,) * nx, (0,) * ny)
    for i in range(nx):
        for j in range(ny):
            geom = CharPoly.zero(nx, ny, maxdeg)
            for k in range(0, maxdeg // 2 + 1):
                xe = [0] * nx
                ye = [0] * ny
                xe[i] = k
                ye[j] = k
                geom = geom + CharPoly.monomial(nx, ny, maxdeg, 0, xe, ye)
            out = out * geom
    return out


def module_character(eps: Eps, l, maxdeg) -> CharPoly:
    """Census character of the charge-l module: one monomial per admissible
    occupancy state with |m| <= maxdeg (independent oracle)."""
    n, r = eps.n, eps.r
    nx, ny = n - r, r
    out = {}
    for s in states_of_charge(eps, l, maxdeg):
        xe = tuple(s.m[r:])
        ye = tuple(s.m[:r])
        key = (1, xe, ye)
        out[key] = out.get(key, 0) + 1
    return CharPoly(nx, ny, maxdeg, out)
