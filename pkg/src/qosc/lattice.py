"""Sign sequences, weight lattices and the bilinear/biadditive data.

Weights live in Z*Lambda + Z*delta_1 + ... + Z*delta_n (+ Z*delta in
affinized contexts, tracked by the k coordinate).  All forms are exact.
"""

from __future__ import annotations

from typing import NamedTuple

from .scalars import ONE_S, Q, QINV, Scalar


class Eps(NamedTuple):
    """A 0/1 sequence with a split point r (1-based slots 1..n)."""

    entries: tuple
    r: int

    @classmethod
    def make(cls, entries, r):
        entries = tuple(int(b) for b in entries)
        n = len(entries)
        if n < 4:
            raise ValueError("need at least 4 slots")
        if not (2 <= r <= n - 2):
            raise ValueError("split point must satisfy 2 <= r <= n-2")
        if any(b not in (0, 1) for b in entries):
            raise ValueError("entries must be 0 or 1")
        return cls(entries, r)

    @classmethod
    def parse(cls, bits: str, r: int):
        return cls.make([int(ch) for ch in bits], r)

    @property
    def n(self):
        return len(self.entries)

    @property
    def minus(self):
        return self.entries[: self.r]

    @property
    def plus(self):
        return self.entries[self.r:]

    def zeros(self):
        return sum(1 for b in self.entries if b == 0)

    def ones(self):
        return sum(1 for b in self.entries if b == 1)

    def has_universal_r_normalization(self):
        """Whether the counts of 0s and 1s differ (needed for a universal R)."""
        return self.zeros() != self.ones()

    def is_bosonic(self, i):
        """Slot i in 1..n."""
        return self.entries[i - 1] == 0

    def q_i(self, i) -> Scalar:
        """q if slot i is bosonic, -q^-1 if fermionic (i in 1..n)."""
        return Q if self.entries[i - 1] == 0 else -QINV

    def parity(self, i):
        """Node parity: odd iff the two slot signs at node i differ (i mod n)."""
        n = self.n
        i = i % n
        a = self.entries[n - 1] if i == 0 else self.entries[i - 1]
        b = self.entries[0] if i == 0 else self.entries[i]
        return (a + b) % 2

    def bits(self):
        return "".join(str(b) for b in self.entries)

    def __str__(self):
        return f"eps={self.bits()},r={self.r}"


class Weight(NamedTuple):
    """level * Lambda + sum d[i] * delta_{i+1} + k * delta."""

    level: int
    d: tuple
    k: int = 0

    @property
    def n(self):
        return len(self.d)

    def __add__(self, other):
        return Weight(self.level + other.level,
                      tuple(a + b for a, b in zip(self.d, other.d, strict=True)),
                      self.k + other.k)

    def __sub__(self, other):
        return Weight(self.level - other.level,
                      tuple(a - b for a, b in zip(self.d, other.d, strict=True)),
                      self.k - other.k)

    def __neg__(self):
        return Weight(-self.level, tuple(-a for a in self.d), -self.k)

    def smul(self, c: int):
        return Weight(c * self.level, tuple(c * a for a in self.d), c * self.k)

    def is_zero(self):
        return self.level == 0 and self.k == 0 and not any(self.d)

    def di(self, i):
        """Coefficient of delta_i, i in 1..n."""
        return self.d[i - 1]

    def to_json(self):
        return {"level": self.level, "d": list(self.d), "k": self.k}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["level"], tuple(obj["d"]), obj.get("k", 0))

    def render(self):
        parts = []
        if self.level:
            parts.append(f"{self.level}*L" if self.level != 1 else "L")
        for i, c in enumerate(self.d, start=1):
            if c:
                parts.append(f"{c}*d{i}" if c != 1 else f"d{i}")
        if self.k:
            parts.append(f"{self.k}*delta" if self.k != 1 else "delta")
        return " + ".join(parts) if parts else "0"


def zero_weight(n):
    return Weight(0, (0,) * n, 0)


def Lambda_w(n):
    return Weight(1, (0,) * n, 0)


def delta_w(n, i):
    """delta_i, i in 1..n."""
    d = [0] * n
    d[i - 1] = 1
    return Weight(0, tuple(d), 0)


def delta_af(n):
    """The null weight delta."""
    return Weight(0, (0,) * n, 1)


def alpha_w(n, i, affine=False):
    """alpha_i = delta_i - delta_{i+1} (indices mod n), plus delta at i = 0."""
    i = i % n
    d = [0] * n
    if i == 0:
        d[n - 1] += 1
        d[0] -= 1
    else:
        d[i - 1] += 1
        d[i] -= 1
    return Weight(0, tuple(d), 1 if (affine and i == 0) else 0)


# ---------------------------------------------------------------------------
# forms on the sign-sequence lattice
# ---------------------------------------------------------------------------

def bilinear(eps: Eps, mu: Weight, nu: Weight) -> int:
    """Symmetric form: (delta_i|delta_j) = (-1)^eps_i delta_ij, (L|L) = 0,
    (delta_i|L) = 0 on the minus side, 1 on the plus side."""
    if mu.k or nu.k:
        raise ValueError("bilinear form is defined on classical weights")
    r = eps.r
    total = 0
    for i in range(eps.n):
        s = -1 if eps.entries[i] else 1
        total += s * mu.d[i] * nu.d[i]
    plus_mu = sum(mu.d[r:])
    plus_nu = sum(nu.d[r:])
    total += mu.level * plus_nu + nu.level * plus_mu
    return total


def qform(eps: Eps, mu: Weight, nu: Weight) -> Scalar:
    """q(mu, nu) = prod_i q_i^(mu_i nu_i)."""
    out = ONE_S
    for i in range(eps.n):
        e = mu.d[i] * nu.d[i]
        if e:
            out = out * eps.q_i(i + 1) ** e
    return out


def qhat(eps: Eps, mu: Weight, nu: Weight) -> Scalar:
    """q-hat(mu, nu) = q^(sum_{j plus side} (level(nu) mu_j + level(mu) nu_j)) q(mu, nu)."""
    r = eps.r
    e = nu.level * sum(mu.d[r:]) + mu.level * sum(nu.d[r:])
    return Q ** e * qform(eps, mu, nu)


# ---------------------------------------------------------------------------
# canonical pairing for the all-bosonic convention (verification adapter)
# ---------------------------------------------------------------------------

def pairing(mu: Weight, h) -> int:
    """<mu, h> for h in {"c", "d", ("dv", j), ("av", i, r)}.

    Uses the convention with the central extension at the split node:
    alpha_i^vee = dv_i - dv_{i+1} + (delta_{ir} - delta_{i0}) c, indices mod n,
    <Lambda, c> = 1, <delta, d> = 1, everything else zero off-diagonal.
    """
    n = mu.n
    if h == "c":
        return mu.level
    if h == "d":
        return mu.k
    kind = h[0]
    if kind == "dv":
        j = h[1]
        return mu.d[(j - 1) % n]
    if kind == "av":
        i, r = h[1] % n, h[2]
        ip1 = (i + 1 - 1) % n  # slot index of delta_{i+1}, 0-based
        lo = (i - 1) % n
        val = mu.d[lo] - mu.d[ip1]
        if i == r:
            val += mu.level
        if i == 0:
            val -= mu.level
        return val
    raise ValueError(f"unknown coweight label {h!r}")


def cl(mu: Weight) -> Weight:
    """Kill the delta coordinate."""
    return Weight(mu.level, mu.d, 0)


def iota(mu: Weight) -> Weight:
    """Section of cl: classical weight viewed affinely with k = 0."""
    return Weight(mu.level, mu.d, 0)


def psi_to_standard(mu: Weight) -> Weight:
    """For the all-bosonic sequence: Lambda -> -Lambda_std, delta_i fixed."""
    return Weight(-mu.level, mu.d, mu.k)


def pairing_via_phi(eps: Eps, lam: Weight, mu: Weight) -> int:
    """<psi(lam), phi(mu)> where phi(Lambda) = sum of plus-side dv's and
    phi(delta_i) = dv_i - sigma(i) c; defined for the all-bosonic sequence."""
    if any(eps.entries):
        raise ValueError("identification only holds for the all-bosonic sequence")
    lam_std = psi_to_standard(lam)
    r = eps.r
    n = eps.n
    total = 0
    # phi(mu) = mu.level * sum_{j>r} dv_j + sum_i mu.d[i] (dv_i - sigma(i) c)
    for j in range(r, n):
        total += mu.level * lam_std.d[j]
    for i in range(n):
        total += mu.d[i] * lam_std.d[i]
        if i >= r:
            total -= mu.d[i] * pairing(lam_std, "c")
    return total
