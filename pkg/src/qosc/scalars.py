"""Exact arithmetic over Z[q,q^-1], Q(q) and Q(q)(z).

Scalar is a ratio of integer Laurent polynomials in q kept in a unique
canonical form, so equality is structural.  ZScalar is a ratio of
z-polynomials with Scalar coefficients, denominator monic in z.  All
coefficients are arbitrary-precision Python ints / Scalars; there is no
floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd


# ---------------------------------------------------------------------------
# dense integer polynomial helpers (index = exponent, no leading zeros)
# ---------------------------------------------------------------------------

def _strip(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return c[:n]


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _strip(out)


def _pneg(a):
    return [-x for x in a]


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _strip(out)


def _pcontent(a):
    g = 0
    for x in a:
        g = _igcd(g, abs(x))
        if g == 1:
            return 1
    return g


def _pprim(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return []
    g = _pcontent(a)
    if a[-1] < 0:
        g = -g
    if g != 1:
        a = [x // g for x in a]
    return a


def _pdivexact(a, b):
    """Exact division of integer polynomials; a must be divisible by b."""
    if not a:
        return []
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    out = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        if c % lb != 0:
            raise ArithmeticError("inexact polynomial division")
        t = c // lb
        out[i - db] = t
        for j, y in enumerate(b):
            a[i - db + j] -= t * y
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return _strip(out)


def _pgcd(a, b):
    """Primitive gcd of integer polynomials (subresultant-free primitive PRS)."""
    a, b = _pprim(list(a)), _pprim(list(b))
    if not a:
        return b
    if not b:
        return a
    if len(b) > len(a):
        a, b = b, a
    while b:
        # pseudo-remainder of a by b
        r = list(a)
        lb = b[-1]
        db = len(b) - 1
        while len(r) - 1 >= db and r:
            lr = r[-1]
            g = _igcd(lr, lb)
            mul_r, mul_b = lb // g, lr // g
            r = [mul_r * x for x in r]
            shift = len(r) - 1 - db
            for j, y in enumerate(b):
                r[shift + j] -= mul_b * y
            r = _strip(r)
        a, b = b, _pprim(r)
    return _pprim(a)


def _peval(a, v: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * v + c
    return acc


_ONE = (1,)


# ---------------------------------------------------------------------------
# LaurentInt: element of Z[q, q^-1]
# ---------------------------------------------------------------------------

class LaurentInt:
    """Integer Laurent polynomial in q; coeffs maps exponent -> int, no zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        elif isinstance(coeffs, int):
            coeffs = {0: coeffs} if coeffs else {}
        self.coeffs = {e: c for e, c in coeffs.items() if c}

    @classmethod
    def term(cls, c, e=0):
        return cls({e: c})

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentInt(other)
        return isinstance(other, LaurentInt) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentInt(out)

    def __neg__(self):
        return LaurentInt({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return LaurentInt(out)

    def shifted(self, k):
        return LaurentInt({e + k: c for e, c in self.coeffs.items()})

    def split(self):
        """Return (v, dense tuple) with self = q^v * poly, poly[0] != 0."""
        if not self.coeffs:
            return 0, ()
        lo = min(self.coeffs)
        hi = max(self.coeffs)
        dense = [0] * (hi - lo + 1)
        for e, c in self.coeffs.items():
            dense[e - lo] = c
        return lo, tuple(dense)

    @classmethod
    def from_split(cls, v, dense):
        return cls({v + i: c for i, c in enumerate(dense) if c})

    def __repr__(self):
        return f"LaurentInt({self.coeffs!r})"


# ---------------------------------------------------------------------------
# Scalar: element of Q(q)
# ---------------------------------------------------------------------------

class Scalar:
    """Element of Q(q) as q^shift * n(q) / d(q), canonical form.

    Invariants: n, d dense int tuples with nonzero constant and leading
    terms; gcd(n, d) = 1 over Q[q]; gcd(content n, content d) = 1; leading
    coefficient of d positive; zero is (0, (), (1,)).
    """

    __slots__ = ("shift", "n", "d", "_h")

    def __init__(self, shift, n, d, _canonical=False):
        if _canonical:
            self.shift, self.n, self.d = shift, n, d
            self._h = None
            return
        self.shift, self.n, self.d = _canon(shift, n, d)
        self._h = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_int(cls, k):
        if k == 0:
            return ZERO_S
        return cls(0, (k,), _ONE, _canonical=True)

    @classmethod
    def from_fraction(cls, f: Fraction):
        f = Fraction(f)
        if f == 0:
            return ZERO_S
        return cls(0, (f.numerator,), (f.denominator,), _canonical=True)

    @classmethod
    def monomial(cls, c, e):
        """c * q^e."""
        if c == 0:
            return ZERO_S
        return cls(e, (c,), _ONE, _canonical=True)

    @classmethod
    def from_laurent(cls, num: LaurentInt, den: LaurentInt | None = None):
        v, n = num.split()
        if den is None:
            return cls(v, n, _ONE)
        w, d = den.split()
        return cls(v - w, n, d)

    # -- views ---------------------------------------------------------------

    @property
    def num(self) -> LaurentInt:
        return LaurentInt.from_split(self.shift, self.n)

    @property
    def den(self) -> LaurentInt:
        return LaurentInt.from_split(0, self.d)

    def is_zero(self):
        return not self.n

    def is_one(self):
        return self.shift == 0 and self.n == _ONE and self.d == _ONE

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = Scalar.from_int(other)
        elif isinstance(other, ZScalar):
            return other + self
        elif not isinstance(other, Scalar):
            return NotImplemented
        if not self.n:
            return other
        if not other.n:
            return self
        a, b = self, other
        lo = min(a.shift, b.shift)
        na = _shift_dense(a.n, a.shift - lo)
        nb = _shift_dense(b.n, b.shift - lo)
        if a.d == b.d:
            return Scalar(lo, _padd(na, nb), a.d)
        return Scalar(lo, _padd(_pmul(na, b.d), _pmul(nb, a.d)), _pmul(a.d, b.d))

    __radd__ = __add__

    def __neg__(self):
        if not self.n:
            return self
        return Scalar(self.shift, tuple(-x for x in self.n), self.d, _canonical=True)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Scalar.from_int(other)
        return self + (-other)

    def __rsub__(self, other):
        return Scalar.from_int(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            other = Scalar.from_int(other)
        elif isinstance(other, ZScalar):
            return other * self
        elif not isinstance(other, Scalar):
            return NotImplemented
        if not self.n or not other.n:
            return ZERO_S
        if self.d == _ONE and other.d == _ONE:
            return Scalar(self.shift + other.shift, _pmul(self.n, other.n), _ONE,
                          _canonical=False) if len(self.n) > 1 or len(other.n) > 1 \
                else Scalar.monomial(self.n[0] * other.n[0], self.shift + other.shift)
        return Scalar(self.shift + other.shift,
                      _pmul(self.n, other.n), _pmul(self.d, other.d))

    __rmul__ = __mul__

    def inverse(self):
        if not self.n:
            raise ZeroDivisionError("inverse of zero Scalar")
        return Scalar(-self.shift, self.d, self.n)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Scalar.from_int(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.from_int(other) * self.inverse()

    def __pow__(self, k):
        if k == 0:
            return ONE_S
        if k < 0:
            return self.inverse() ** (-k)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = Scalar.from_int(other)
        elif isinstance(other, ZScalar):
            return other == ZScalar.from_scalar(self)
        return (isinstance(other, Scalar) and self.shift == other.shift
                and self.n == other.n and self.d == other.d)

    def __hash__(self):
        if self._h is None:
            self._h = hash((self.shift, self.n, self.d))
        return self._h

    # -- evaluation / rendering ----------------------------------------------

    def substitute_q(self, value) -> Fraction:
        """Exact evaluation at q = value; error at poles."""
        v = Fraction(value)
        if v == 0 and self.shift < 0:
            raise ValueError("evaluation at pole: q = 0")
        den = _peval(self.d, v)
        if den == 0:
            raise ValueError(f"evaluation at pole: q = {v}")
        if not self.n:
            return Fraction(0)
        return (v ** self.shift) * _peval(self.n, v) / den

    def bar(self):
        """q -> q^-1."""
        n = tuple(reversed(self.n))
        d = tuple(reversed(self.d))
        return Scalar(-self.shift - (len(self.n) - 1) + (len(self.d) - 1), n, d)

    def __repr__(self):
        return f"Scalar({self.render()!r})"

    def __str__(self):
        return self.render()

    def render(self):
        num = _render_qpoly(self.shift, self.n)
        if self.d == _ONE:
            return num
        den = _render_qpoly(0, self.d)
        if len(self.n) > 1 or True:
            num = f"({num})" if (" " in num) else num
        den = f"({den})" if (" " in den) else den
        return f"{num}/{den}"


def _shift_dense(n, k):
    if k == 0:
        return n
    return tuple([0] * k + list(n))


def _canon(shift, n, d):
    n = _strip(list(n))
    d = _strip(list(d))
    if not d:
        raise ZeroDivisionError("zero denominator in Scalar")
    if not n:
        return 0, (), _ONE
    # factor q powers out of both parts
    i = 0
    while n[i] == 0:
        i += 1
    if i:
        shift += i
        n = n[i:]
    j = 0
    while d[j] == 0:
        j += 1
    if j:
        shift -= j
        d = d[j:]
    if d != [1]:
        g = _pgcd(n, d)
        if len(g) > 1:
            n = _pdivexact(n, g)
            d = _pdivexact(d, g)
        cn, cd = _pcontent(n), _pcontent(d)
        cg = _igcd(cn, cd)
        if cg > 1:
            n = [x // cg for x in n]
            d = [x // cg for x in d]
        if d[-1] < 0:
            n = [-x for x in n]
            d = [-x for x in d]
    return shift, tuple(n), tuple(d)


def _join_signed(parts):
    """parts: list of (negative: bool, term: str); prefer a positive leader."""
    if not parts:
        return "0"
    if parts[0][0]:
        for k, (neg, _) in enumerate(parts):
            if not neg:
                parts.insert(0, parts.pop(k))
                break
    out = [("-" + parts[0][1]) if parts[0][0] else parts[0][1]]
    for neg, term in parts[1:]:
        out.append(("- " if neg else "+ ") + term)
    return " ".join(out)


def _render_qpoly(shift, n):
    if not n:
        return "0"
    parts = []
    for i in range(len(n) - 1, -1, -1):
        c = n[i]
        if c == 0:
            continue
        e = shift + i
        if e == 0:
            term = str(abs(c))
        else:
            qq = "q" if e == 1 else f"q^{e}"
            term = qq if abs(c) == 1 else f"{abs(c)}*{qq}"
        parts.append((c < 0, term))
    return _join_signed(parts)


ZERO_S = Scalar(0, (), _ONE, _canonical=True)
ONE_S = Scalar(0, _ONE, _ONE, _canonical=True)
Q = Scalar(1, _ONE, _ONE, _canonical=True)
QINV = Scalar(-1, _ONE, _ONE, _canonical=True)


# ---------------------------------------------------------------------------
# quantum integers
# ---------------------------------------------------------------------------

_qint_cache: dict[int, Scalar] = {}
_qfact_cache: dict[int, Scalar] = {}


def qint(m: int) -> Scalar:
    """[m] = (q^m - q^-m)/(q - q^-1), for any integer m."""
    s = _qint_cache.get(m)
    if s is not None:
        return s
    if m == 0:
        s = ZERO_S
    elif m < 0:
        s = -qint(-m)
    else:
        # geometric form: q^(m-1) + q^(m-3) + ... + q^(1-m)
        s = Scalar(1 - m, tuple(1 if i % 2 == 0 else 0 for i in range(2 * m - 1)),
                   _ONE, _canonical=True)
    _qint_cache[m] = s
    return s


def qfact(m: int) -> Scalar:
    """[m]! = [1][2]...[m]; empty product for m = 0."""
    if m < 0:
        raise ValueError("quantum factorial needs m >= 0")
    s = _qfact_cache.get(m)
    if s is not None:
        return s
    s = ONE_S if m == 0 else qfact(m - 1) * qint(m)
    _qfact_cache[m] = s
    return s


def substitute_q(s: Scalar, value) -> Fraction:
    return s.substitute_q(value)


# ---------------------------------------------------------------------------
# ZScalar: element of Q(q)(z)
# ---------------------------------------------------------------------------

def _zstrip(c):
    n = len(c)
    while n and c[n - 1].is_zero():
        n -= 1
    return list(c[:n])


def _zadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return _zstrip(out)


def _zmul(a, b):
    if not a or not b:
        return []
    out = [ZERO_S] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x.is_zero():
            for j, y in enumerate(b):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
    return _zstrip(out)


def _zscale(a, s: Scalar):
    if s.is_zero():
        return []
    return _zstrip([x * s for x in a])


def _zdivmod(a, b):
    """Division with remainder in z over Q(q); b nonzero."""
    a = list(a)
    db = len(b) - 1
    inv = b[-1].inverse()
    quo = [ZERO_S] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        t = a[-1] * inv
        quo[len(a) - 1 - db] = t
        shift = len(a) - 1 - db
        for j, y in enumerate(b):
            a[shift + j] = a[shift + j] - t * y
        a = _zstrip(a)
    return quo, a


def _zgcd(a, b):
    a, b = _zstrip(a), _zstrip(b)
    while b:
        _, r = _zdivmod(a, b)
        a, b = b, r
    if a:
        a = _zscale(a, a[-1].inverse())  # monic
    return a


class ZScalar:
    """Element of Q(q)(z): n(z)/d(z), d monic in z, gcd(n, d) = 1."""

    __slots__ = ("n", "d")

    def __init__(self, n, d=None, _canonical=False):
        if d is None:
            d = [ONE_S]
        if _canonical:
            self.n, self.d = tuple(n), tuple(d)
            return
        n, d = _zstrip(n), _zstrip(d)
        if not d:
            raise ZeroDivisionError("zero denominator in ZScalar")
        if not n:
            self.n, self.d = (), (ONE_S,)
            return
        if len(d) > 1 or not d[0].is_one():
            g = _zgcd(n, d)
            if len(g) > 1:
                n, _ = _zdivmod(n, g)
                d, _ = _zdivmod(d, g)
            lc = d[-1]
            if not lc.is_one():
                inv = lc.inverse()
                n = _zscale(n, inv)
                d = _zscale(d, inv)
        self.n, self.d = tuple(n), tuple(d)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def from_scalar(cls, s: Scalar):
        if s.is_zero():
            return ZERO_Z
        return cls((s,), (ONE_S,), _canonical=True)

    @classmethod
    def from_int(cls, k):
        return cls.from_scalar(Scalar.from_int(k))

    @classmethod
    def zpow(cls, k: int):
        """z^k for any integer k."""
        if k >= 0:
            return cls(tuple([ZERO_S] * k + [ONE_S]), (ONE_S,), _canonical=True)
        return cls((ONE_S,), tuple([ZERO_S] * (-k) + [ONE_S]), _canonical=True)

    # -- predicates -----------------------------------------------------------

    def is_zero(self):
        return not self.n

    def is_one(self):
        return len(self.n) == 1 and self.n[0].is_one() and len(self.d) == 1

    def is_z_free(self):
        return len(self.n) <= 1 and len(self.d) == 1

    def scalar_part(self) -> Scalar:
        if not self.is_z_free():
            raise ValueError("ZScalar depends on z")
        return self.n[0] if self.n else ZERO_S

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ZScalar):
            return other
        if isinstance(other, Scalar):
            return ZScalar.from_scalar(other)
        if isinstance(other, int):
            return ZScalar.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.n:
            return other
        if not other.n:
            return self
        if self.d == other.d:
            return ZScalar(_zadd(self.n, other.n), self.d)
        return ZScalar(_zadd(_zmul(self.n, other.d), _zmul(other.n, self.d)),
                       _zmul(self.d, other.d))

    __radd__ = __add__

    def __neg__(self):
        return ZScalar(tuple(-x for x in self.n), self.d, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.n or not other.n:
            return ZERO_Z
        return ZScalar(_zmul(self.n, other.n), _zmul(self.d, other.d))

    __rmul__ = __mul__

    def inverse(self):
        if not self.n:
            raise ZeroDivisionError("inverse of zero ZScalar")
        return ZScalar(self.d, self.n)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k):
        if k == 0:
            return ONE_Z
        if k < 0:
            return self.inverse() ** (-k)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.n == other.n and self.d == other.d

    def __hash__(self):
        return hash((self.n, self.d))

    # -- substitution ----------------------------------------------------------

    def specialize(self, c: Scalar) -> Scalar:
        """Evaluate at z = c (nonzero Scalar); error on pole."""
        den = _seval(self.d, c)
        if den.is_zero():
            raise PoleError(f"spectral-parameter collision: z = {c.render()}")
        if not self.n:
            return ZERO_S
        return _seval(self.n, c) / den

    def subs_z(self, g: "ZScalar") -> "ZScalar":
        """Rational substitution z -> g(z)."""
        return _zpolyeval(self.n, g) / _zpolyeval(self.d, g)

    # -- rendering ---------------------------------------------------------------

    def render(self):
        num = _render_zpoly(self.n)
        if len(self.d) == 1 and self.d[0].is_one():
            return num
        return f"({num})/({_render_zpoly(self.d)})"

    def __repr__(self):
        return f"ZScalar({self.render()!r})"

    def __str__(self):
        return self.render()


def _seval(c, v: Scalar) -> Scalar:
    acc = ZERO_S
    for x in reversed(c):
        acc = acc * v + x
    return acc


def _zpolyeval(c, g: ZScalar) -> ZScalar:
    acc = ZERO_Z
    for x in reversed(c):
        acc = acc * g + ZScalar.from_scalar(x)
    return acc


def _render_zpoly(n):
    if not n:
        return "0"
    parts = []
    for i in range(len(n) - 1, -1, -1):
        c = n[i]
        if c.is_zero():
            continue
        cs = c.render()
        simple = " " not in cs and "/" not in cs
        neg = simple and cs.startswith("-")
        mag = cs[1:] if neg else cs
        if i == 0:
            term = mag if simple else f"({cs})"
        else:
            zz = "z" if i == 1 else f"z^{i}"
            if not simple:
                term = f"({cs})*{zz}"
            elif mag == "1":
                term = zz
            else:
                term = f"{mag}*{zz}"
        parts.append((neg, term))
    return _join_signed(parts)


ZERO_Z = ZScalar((), (ONE_S,), _canonical=True)
ONE_Z = ZScalar((ONE_S,), (ONE_S,), _canonical=True)
Z = ZScalar.zpow(1)


class PoleError(ValueError):
    """Raised when a spectral parameter hits a pole."""


# ---------------------------------------------------------------------------
# parsing (same grammar as render: ints, q, z, ^, *, /, +, -, parentheses)
# ---------------------------------------------------------------------------

def _tokenize(text):
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j])))
            i = j
        elif ch in "qz":
            toks.append(("var", ch))
            i += 1
        elif ch in "+-*/^()":
            toks.append((ch, ch))
            i += 1
        else:
            raise ValueError(f"bad character {ch!r} in scalar expression")
    return toks


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.pos = 0

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def take(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op, _ = self.take()
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self):
        node = self.factor()
        while self.peek() in ("*", "/"):
            op, _ = self.take()
            rhs = self.factor()
            node = node * rhs if op == "*" else node / rhs
        return node

    def factor(self):
        sign = 1
        while self.peek() in ("+", "-"):
            op, _ = self.take()
            if op == "-":
                sign = -sign
        node = self.atom()
        if self.peek() == "^":
            self.take()
            esign = 1
            while self.peek() in ("+", "-"):
                op, _ = self.take()
                if op == "-":
                    esign = -esign
            kind, val = self.take()
            if kind != "int":
                raise ValueError("exponent must be an integer")
            node = node ** (esign * val)
        return node if sign == 1 else -node

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return ZScalar.from_int(val)
        if kind == "var":
            return Z if val == "z" else ZScalar.from_scalar(Q)
        if kind == "(":
            node = self.expr()
            if self.peek() != ")":
                raise ValueError("unbalanced parentheses")
            self.take()
            return node
        raise ValueError(f"unexpected token {val!r}")


def parse_zscalar(text: str) -> ZScalar:
    toks = _tokenize(text)
    if not toks:
        raise ValueError("empty scalar expression")
    p = _Parser(toks)
    out = p.expr()
    if p.pos != len(toks):
        raise ValueError("trailing input in scalar expression")
    return out


def parse_scalar(text: str) -> Scalar:
    out = parse_zscalar(text)
    if not out.is_z_free():
        raise ValueError("expression involves z where a Scalar was expected")
    return out.scalar_part()
