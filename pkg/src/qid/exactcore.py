"""Exact scalars, q-series building blocks, symmetric functions and seeded sampling.

Every scalar is a :class:`fractions.Fraction`. Nothing in the package ever
touches a float.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegenerateQError

ExactScalar = Fraction
VariableSet = Sequence[Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact scalars")
    return Fraction(x)


def to_str(x: Fraction) -> str:
    """Canonical "p/q" form; the denominator is always written."""
    x = as_scalar(x)
    return f"{x.numerator}/{x.denominator}"


def from_str(s: str) -> Fraction:
    return Fraction(s.strip())


# q-series ------------------------------------------------------------------


def qpochhammer(a, q, n: int) -> Fraction:
    """(a;q)_n = (1-a)(1-aq)...(1-aq^{n-1})."""
    if n < 0:
        raise ValueError("qpochhammer needs n >= 0")
    a, q = as_scalar(a), as_scalar(q)
    out = ONE
    term = a
    for _ in range(n):
        out *= 1 - term
        term *= q
    return out


def qpoch_multi(args: Iterable, q, n: int) -> Fraction:
    """(a1, a2, ...;q)_n as a product of single symbols."""
    out = ONE
    for a in args:
        out *= qpochhammer(a, q, n)
    return out


def cauchy_poly(a, b, q, n: int) -> Fraction:
    """P_n(a, b) = prod_{i<n} (a - b q^i).

    Agrees with a^n (b/a;q)_n whenever a != 0 and stays defined at a == 0.
    """
    if n < 0:
        raise ValueError("cauchy_poly needs n >= 0")
    a, b, q = as_scalar(a), as_scalar(b), as_scalar(q)
    out = ONE
    term = b
    for _ in range(n):
        out *= a - term
        term *= q
    return out


def check_q(q, n: int) -> None:
    """Raise DegenerateQError when q^i == 1 for some 1 <= i <= n."""
    q = as_scalar(q)
    p = ONE
    for i in range(1, n + 1):
        p *= q
        if p == 1:
            raise DegenerateQError(f"q^{i} == 1")


def gauss_binomial(n: int, k: int, q) -> Fraction:
    """Gaussian binomial [n, k]_q; zero outside 0 <= k <= n."""
    q = as_scalar(q)
    check_q(q, n)
    if k < 0 or k > n:
        return ZERO
    return qpochhammer(q, q, n) / (qpochhammer(q, q, k) * qpochhammer(q, q, n - k))


def exact_div(num: int, den: int) -> int:
    """Integer division that insists on divisibility (for q-exponents)."""
    quo, rem = divmod(num, den)
    assert rem == 0, f"{num} is not divisible by {den}"
    return quo


def binom2(n: int) -> int:
    return n * (n - 1) // 2


def binom3(n: int) -> int:
    return n * (n - 1) * (n - 2) // 6


# symmetric functions ---------------------------------------------------------


def elem_sym_all(X: VariableSet, top: int) -> list[Fraction]:
    """[e_0(X), ..., e_top(X)] by the usual one-pass DP."""
    e = [ONE] + [ZERO] * max(top, 0)
    for m, x in enumerate(X, start=1):
        x = as_scalar(x)
        for i in range(min(m, top), 0, -1):
            e[i] += x * e[i - 1]
    return e


def complete_sym_all(X: VariableSet, top: int) -> list[Fraction]:
    """[h_0(X), ..., h_top(X)]; h_i(X u {x}) = h_i(X) + x h_{i-1}(X u {x})."""
    h = [ONE] + [ZERO] * max(top, 0)
    for x in X:
        x = as_scalar(x)
        for i in range(1, top + 1):
            h[i] += x * h[i - 1]
    return h


def elem_sym(X: VariableSet, i: int) -> Fraction:
    if i < 0 or i > len(X):
        return ZERO
    return elem_sym_all(X, i)[i]


def complete_sym(X: VariableSet, i: int) -> Fraction:
    if i < 0:
        return ZERO
    return complete_sym_all(X, i)[i]


def supersym_complete(X: VariableSet, Y: VariableSet, i: int) -> Fraction:
    """h_i(X - Y): coefficient of t^i in prod_Y (1 - yt) / prod_X (1 - xt)."""
    if i < 0:
        return ZERO
    h = complete_sym_all(X, i)
    e = elem_sym_all(Y, min(i, len(Y)))
    return sum(((-1) ** j * e[j] * h[i - j] for j in range(len(e))), ZERO)


# dense polynomials (coefficient lists, constant term first) ------------------


def poly_trim(p: Sequence[Fraction]) -> list[Fraction]:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(p: Sequence[Fraction], r: Sequence[Fraction]) -> list[Fraction]:
    out = [ZERO] * max(len(p), len(r))
    for i, v in enumerate(p):
        out[i] += v
    for i, v in enumerate(r):
        out[i] += v
    return out


def poly_scale(p: Sequence[Fraction], s) -> list[Fraction]:
    return [s * v for v in p]


def poly_mul(p: Sequence[Fraction], r: Sequence[Fraction]) -> list[Fraction]:
    if not p or not r:
        return []
    out = [ZERO] * (len(p) + len(r) - 1)
    for i, u in enumerate(p):
        if u == 0:
            continue
        for j, v in enumerate(r):
            out[i + j] += u * v
    return out


def poly_prod(factors: Iterable[Sequence[Fraction]]) -> list[Fraction]:
    out: list[Fraction] = [ONE]
    for f in factors:
        out = poly_mul(out, f)
    return out


def poly_eval(p: Sequence[Fraction], y) -> Fraction:
    acc = ZERO
    for v in reversed(p):
        acc = acc * y + v
    return acc


def poly_equal(p: Sequence[Fraction], r: Sequence[Fraction]) -> bool:
    return poly_trim(p) == poly_trim(r)


# seeded sampling -------------------------------------------------------------

_MASK64 = (1 << 64) - 1


def derive_seed(seed: int, *key) -> int:
    """seed XOR a stable 64-bit hash of ``key`` (independent of PYTHONHASHSEED)."""
    digest = hashlib.blake2b(repr(key).encode(), digest_size=8).digest()
    return (seed ^ int.from_bytes(digest, "little")) & _MASK64


@dataclass
class SeededSampler:
    """Counter-based generator: draw ``k`` is a hash of (seed, k).

    Identical seeds give identical streams on every platform; ``spawn`` gives
    independent child streams keyed by arbitrary hashable data.
    """

    seed: int
    position: int = field(default=0)

    def __post_init__(self):
        self.seed &= _MASK64

    def _next_u64(self) -> int:
        msg = self.seed.to_bytes(8, "little") + self.position.to_bytes(8, "little")
        self.position += 1
        return int.from_bytes(hashlib.blake2b(msg, digest_size=8).digest(), "little")

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] by rejection (no modulo bias)."""
        if hi < lo:
            raise ValueError("empty range")
        span = hi - lo + 1
        limit = (1 << 64) - (1 << 64) % span
        while True:
            r = self._next_u64()
            if r < limit:
                return lo + r % span

    def spawn(self, *key) -> "SeededSampler":
        return SeededSampler(derive_seed(self.seed, *key))


def sample_scalar(
    s: SeededSampler,
    num: tuple[int, int] = (-9, 9),
    den: tuple[int, int] = (1, 9),
    nonzero: bool = False,
) -> Fraction:
    """Rational p/d with p in ``num`` and d in ``den`` (inclusive bounds)."""
    if den[0] < 1:
        raise ValueError("denominator bounds must be positive")
    while True:
        x = Fraction(s.randint(*num), s.randint(*den))
        if not (nonzero and x == 0):
            return x
