"""4n-point interpolation of BC-symmetric polynomials and Jackson's summation.

A BC-symmetric polynomial of degree 2n satisfies y^{-n} f(y) = (c/y)^{-n} f(c/y),
i.e. its coefficients obey ``f[n - m] == c**m * f[n + m]``. Given nodes
``a_1..a_n`` and ``b_1..b_n`` it expands uniquely as

    f(y) = sum_j C_j * prod_{k<=j} (y - b_k)(y - c/b_k) * prod_{i<=n-j} (y - a_i)(y - c/a_i)

and the C_j come from c-divided differences of f at the b-nodes.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .divop import eval_table
from .errors import (
    DegenerateNodesError,
    DegenerateParametersError,
    WrongPathError,
)
from .exactcore import (
    ONE,
    ZERO,
    as_scalar,
    binom2,
    cauchy_poly,
    check_q,
    gauss_binomial,
    poly_add,
    poly_eval,
    poly_prod,
    poly_scale,
    poly_trim,
    qpoch_multi,
    qpochhammer,
)

THEOREM = "theorem"
PROOF = "proof"


@dataclass(frozen=True)
class BcSymmetricPoly:
    n: int
    c: Fraction
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", as_scalar(self.c))
        coeffs = tuple(as_scalar(v) for v in self.coeffs)
        coeffs += (ZERO,) * (2 * self.n + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != 2 * self.n + 1:
            raise ValueError(f"degree exceeds 2n = {2 * self.n}")
        if self.c == 0:
            raise WrongPathError("c == 0: use newton_reconstruct_c0")
        if not self.is_symmetric():
            raise ValueError("coefficients violate f[n-m] == c^m f[n+m]")

    def is_symmetric(self) -> bool:
        n, f = self.n, self.coeffs
        return all(f[n - m] == self.c**m * f[n + m] for m in range(n + 1))

    def __call__(self, y) -> Fraction:
        return poly_eval(self.coeffs, as_scalar(y))


def bc_pair(x, c) -> list[Fraction]:
    """Coefficients of (y - x)(y - c/x)."""
    return [c, -(x + c / x), ONE]


def bc_poly_from_roots(roots: Sequence, c) -> BcSymmetricPoly:
    """prod_i (y - x_i)(c - x_i y)."""
    c = as_scalar(c)
    if c == 0:
        raise WrongPathError("c == 0: use newton_reconstruct_c0")
    roots = [as_scalar(x) for x in roots]
    coeffs = poly_prod([[-x, ONE] for x in roots] + [[c, -x] for x in roots])
    return BcSymmetricPoly(len(roots), c, tuple(coeffs))


@dataclass(frozen=True)
class NodeSystem:
    c: Fraction
    a: tuple[Fraction, ...]
    b: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", as_scalar(self.c))
        object.__setattr__(self, "a", tuple(as_scalar(x) for x in self.a))
        object.__setattr__(self, "b", tuple(as_scalar(x) for x in self.b))
        if len(self.a) != len(self.b):
            raise ValueError("a and b must have the same length")

    @property
    def n(self) -> int:
        return len(self.a)

    def nonzero_ok(self) -> bool:
        return self.c != 0 and all(x != 0 for x in self.a + self.b)

    def distinct_ok(self) -> bool:
        if not self.nonzero_ok():
            return False
        vals = [v for x in self.a + self.b for v in (x, self.c / x)]
        return len(set(vals)) == len(vals)

    def b_pairs_ok(self) -> bool:
        return all(x * y != self.c for x, y in combinations(self.b, 2))

    def is_admissible(self) -> bool:
        return self.n >= 1 and self.nonzero_ok() and self.distinct_ok() and self.b_pairs_ok()

    def validate(self) -> None:
        if self.n < 1:
            raise DegenerateNodesError("need n >= 1")
        if not self.nonzero_ok():
            raise DegenerateNodesError("c and every node must be nonzero")
        if not self.distinct_ok():
            raise DegenerateNodesError("the 4n values a_i, c/a_i, b_i, c/b_i collide")
        if not self.b_pairs_ok():
            raise DegenerateNodesError("b_i * b_k == c for some i != k")


def basis_poly(j: int, nodes: NodeSystem, convention: str = THEOREM) -> list[Fraction]:
    """The j-th expansion basis element as a coefficient list.

    ``theorem``: b_1..b_j times a_1..a_{n-j}; ``proof``: b_1..b_j times a_{j+1}..a_n.
    """
    n, c = nodes.n, nodes.c
    a_side = nodes.a[: n - j] if convention == THEOREM else nodes.a[j:]
    return poly_prod([bc_pair(x, c) for x in nodes.b[:j]] + [bc_pair(x, c) for x in a_side])


def _bc_value(y, xs, c) -> Fraction:
    out = ONE
    for x in xs:
        out *= (y - x) * (y - c / x)
    return out


def coeff_C(j: int, f: BcSymmetricPoly, nodes: NodeSystem, convention: str = THEOREM) -> Fraction:
    """Expansion coefficient C_j of ``f`` over ``basis_poly(j, nodes, convention)``."""
    nodes.validate()
    n, c = nodes.n, nodes.c
    if f.n != n or f.c != c:
        raise ValueError("polynomial and node system disagree on (n, c)")
    if not 0 <= j <= n:
        raise IndexError(j)
    a, b = nodes.a, nodes.b
    if convention == THEOREM:
        # C_n uses a_1, C_j divides by a_1..a_{n-j+1} and pivots on a_{n-j+1}
        last, a_h, pivot = a[0], a[: n - j + 1], a[n - j] if j else None
    elif convention == PROOF:
        # C_n uses a_n, C_j divides by a_j..a_n and pivots on a_j
        last, a_h, pivot = a[n - 1], a[j - 1 :] if j else a, a[j - 1] if j else None
    else:
        raise ValueError(convention)
    if j == 0:
        return f(b[0]) / _bc_value(b[0], a, c)
    if j == n:
        return f(last) / _bc_value(last, b, c)

    def h(y):
        return f(y) * y ** (1 - j) / _bc_value(y, a_h, c)

    return eval_table(h, c, b[: j + 1]) * (b[j] - pivot) * (1 - c / (pivot * b[j]))


def interpolation_coefficients(
    f: BcSymmetricPoly, nodes: NodeSystem, convention: str = THEOREM
) -> list[Fraction]:
    return [coeff_C(j, f, nodes, convention) for j in range(nodes.n + 1)]


def reconstruct(f: BcSymmetricPoly, nodes: NodeSystem, convention: str = THEOREM) -> BcSymmetricPoly:
    """Reassemble ``f`` from its expansion coefficients."""
    acc: list[Fraction] = []
    for j, C in enumerate(interpolation_coefficients(f, nodes, convention)):
        acc = poly_add(acc, poly_scale(basis_poly(j, nodes, convention), C))
    return BcSymmetricPoly(nodes.n, nodes.c, tuple(poly_trim(acc)))


# c = 0 ---------------------------------------------------------------------


def _prod_minus(y, xs) -> Fraction:
    out = ONE
    for x in xs:
        out *= y - x
    return out


def newton_coefficients_c0(f: Sequence, a: Sequence, b: Sequence) -> list[Fraction]:
    """Coefficients of the classical 2n-point expansion of a degree-n ``f``."""
    f = [as_scalar(v) for v in f]
    a = [as_scalar(x) for x in a]
    b = [as_scalar(x) for x in b]
    n = len(a)
    if len(b) != n:
        raise ValueError("a and b must have the same length")
    if n == 0:
        if len(poly_trim(f)) > 1:
            raise ValueError("degree of f exceeds n")
        return [f[0] if f else ZERO]
    if len(set(a + b)) != 2 * n:
        raise DegenerateNodesError("the 2n nodes must be pairwise distinct")
    if len(poly_trim(f)) > n + 1:
        raise ValueError("degree of f exceeds n")

    def fv(y):
        return poly_eval(f, y)

    out = [fv(b[0]) / _prod_minus(b[0], a)]
    for j in range(1, n):
        a_h = a[: n - j + 1]
        D = eval_table(lambda y: fv(y) / _prod_minus(y, a_h), 0, b[: j + 1])
        out.append(D * (b[j] - a[n - j]))
    out.append(fv(a[0]) / _prod_minus(a[0], b))
    return out


def newton_reconstruct_c0(f: Sequence, a: Sequence, b: Sequence) -> list[Fraction]:
    n = len(a)
    acc: list[Fraction] = []
    for j, C in enumerate(newton_coefficients_c0(f, a, b)):
        basis = poly_prod([[-x, ONE] for x in b[:j]] + [[-x, ONE] for x in a[: n - j]])
        acc = poly_add(acc, poly_scale(basis, C))
    return poly_trim(acc)


# Jackson's summation -------------------------------------------------------


@dataclass(frozen=True)
class GeometricSpec:
    """Geometric node data: A = {a q^{1-i}, c q^{i-1}/a}, B likewise for b."""

    a: Fraction
    b: Fraction
    c: Fraction
    q: Fraction
    u: Fraction
    n: int

    def __post_init__(self):
        for name in "abcqu":
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    def nodes(self) -> NodeSystem:
        """a_i = a q^{1-i}; b-nodes listed b q^{1-n}, ..., b (increasing exponent).

        This ordering makes the k-th corollary summand the C_k term of the
        interpolation expansion.
        """
        a = tuple(self.a * self.q ** (1 - i) for i in range(1, self.n + 1))
        b = tuple(self.b * self.q ** (i - self.n) for i in range(1, self.n + 1))
        return NodeSystem(self.c, a, b)

    def u_roots(self) -> list[Fraction]:
        return [self.u * self.q**i for i in range(self.n)]


def corollary_lhs(spec: GeometricSpec, y) -> Fraction:
    y = as_scalar(y)
    out = ONE
    for x in spec.u_roots():
        out *= (x - y) * (spec.c - x * y)
    return out


def corollary_coefficients(spec: GeometricSpec) -> list[Fraction]:
    """The y-independent factor of each summand k = 0..n (including q^{C(n,2)})."""
    a, b, c, q, u, n = spec.a, spec.b, spec.c, spec.q, spec.u, spec.n
    check_q(q, n)
    P = cauchy_poly
    out = []
    for k in range(n + 1):
        num = (
            gauss_binomial(n, k, q)
            * P(b, u * q ** (n - 1), q, n - k)
            * P(a, u * q ** (n - k), q, k)
            * P(u, c / b, q, n - k)
            * P(c / a, u, q, k)
        )
        den = (
            P(b, a, q, n)
            * qpochhammer(c * q ** (n - k - 1) / (a * b), q, n - k)
            * qpochhammer(c * q ** (2 * n - 2 * k) / (a * b), q, k)
        )
        if den == 0:
            raise DegenerateParametersError(f"vanishing denominator in summand k={k}")
        out.append(q ** binom2(n) * num / den)
    return out


def corollary_basis(spec: GeometricSpec, k: int, y) -> Fraction:
    a, b, c, q, n = spec.a, spec.b, spec.c, spec.q, spec.n
    P = cauchy_poly
    return (
        P(y, a * q ** (k + 1 - n), q, n - k)
        * P(y, c / a, q, n - k)
        * P(y, b * q ** (1 - n), q, k)
        * P(y, c * q ** (n - k) / b, q, k)
    )


def jackson_corollary_sides(spec: GeometricSpec, y) -> tuple[Fraction, Fraction]:
    """Both sides of the product expansion behind Jackson's summation."""
    if spec.a == 0 or spec.b == 0 or spec.q == 0:
        raise DegenerateParametersError("a, b and q must be nonzero")
    y = as_scalar(y)
    coeffs = corollary_coefficients(spec)
    rhs = sum((C * corollary_basis(spec, k, y) for k, C in enumerate(coeffs)), ZERO)
    return corollary_lhs(spec, y), rhs


def jackson_substitution(spec: GeometricSpec, y) -> tuple[Fraction, ...]:
    """Map corollary data to classical 8phi7 parameters (a, b, c, d, e)."""
    a, b, c, q, u, n = spec.a, spec.b, spec.c, spec.q, spec.u, spec.n
    y = as_scalar(y)
    if y == 0 or u == 0:
        raise DegenerateParametersError("y and u must be nonzero")
    return (c / (q * a * b), y / a, c / (b * u), c / (a * y), u * q ** (n - 1) / b)


def is_balanced(a, b, c, d, e, n: int, q) -> bool:
    return a * a * q ** (n + 1) == b * c * d * e


def jackson_8phi7_sides(a, b, c, d, e, n: int, q) -> tuple[Fraction, Fraction]:
    """Terminating very-well-poised 8phi7 sum and its product evaluation.

    The identity needs the balancing condition a^2 q^{n+1} = b c d e, which
    this function does not enforce (see :func:`is_balanced`).
    """
    a, b, c, d, e, q = (as_scalar(v) for v in (a, b, c, d, e, q))
    if 0 in (b, c, d, e, q) or a == 1:
        raise DegenerateParametersError("b, c, d, e, q must be nonzero and a != 1")
    check_q(q, n)
    lhs_num = qpoch_multi([a * q, a * q / (b * c), a * q / (b * d), a * q / (c * d)], q, n)
    lhs_den = qpoch_multi([a * q / b, a * q / c, a * q / d, a * q / (b * c * d)], q, n)
    if lhs_den == 0:
        raise DegenerateParametersError("vanishing product denominator")
    rhs = ZERO
    for k in range(n + 1):
        num = (1 - a * q ** (2 * k)) * qpoch_multi([a, b, c, d, e, q**-n], q, k) * q**k
        den = (1 - a) * qpoch_multi(
            [q, a * q / b, a * q / c, a * q / d, a * q / e, a * q ** (n + 1)], q, k
        )
        if den == 0:
            raise DegenerateParametersError(f"vanishing denominator in term k={k}")
        rhs += num / den
    return lhs_num / lhs_den, rhs
