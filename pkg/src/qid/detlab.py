"""Exact determinants and the determinant evaluations built on Cauchy polynomials.

Contents:

* ``det_exact``: rational Gaussian elimination, or fraction-free (Bareiss)
  elimination on a row-scaled integer copy.
* ``kara_sides`` / ``kratt_sides``: the (n+1)x(n+1) Cauchy-polynomial
  determinant and Krattenthaler's determinant, each against its product.
* ``fnk_det`` / ``fnk_closed`` / ``lemma33_sides`` / ``cofactor_expansion_check``:
  the cofactors of the last row of the Cauchy-polynomial matrix on the
  geometric grid x_i = u q^{i-1}, their supersymmetric determinant form
  and closed evaluation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import DegenerateParametersError, ShapeError
from .exactcore import (
    ONE,
    ZERO,
    as_scalar,
    binom2,
    binom3,
    cauchy_poly,
    elem_sym,
    exact_div,
    gauss_binomial,
    qpochhammer,
    supersym_complete,
)
from .interp import GeometricSpec, corollary_coefficients

RATIONAL = "rational"
FRACTION_FREE = "fraction-free"


@dataclass(frozen=True)
class ExactMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        rows = tuple(tuple(as_scalar(v) for v in r) for r in rows)
        if not rows or not rows[0]:
            raise ShapeError("empty matrix")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ShapeError("ragged rows")
        return cls(rows)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def minor(self, r: int, c: int) -> "ExactMatrix":
        """Delete row ``r`` and column ``c`` (0-based)."""
        return ExactMatrix(
            tuple(row[:c] + row[c + 1 :] for i, row in enumerate(self.entries) if i != r)
        )

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


def _det_rational(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    det = ONE
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        p = m[col][col]
        det *= p
        for r in range(col + 1, n):
            factor = m[r][col] / p
            if factor:
                row, prow = m[r], m[col]
                for k in range(col + 1, n):
                    row[k] -= factor * prow[k]
    return det


def _det_bareiss(m: list[list[Fraction]]) -> Fraction:
    scale = ONE
    rows = []
    for r in m:
        s = lcm(*(v.denominator for v in r))
        scale *= s
        rows.append([int(v * s) for v in r])
    n = len(rows)
    sign, prev = 1, 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if rows[r][k] != 0), None)
            if swap is None:
                return ZERO
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pk = rows[k][k]
        for i in range(k + 1, n):
            ri = rows[i]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - ri[k] * rows[k][j]) // prev
            ri[k] = 0
        prev = pk
    return Fraction(sign * rows[n - 1][n - 1]) / scale


def det_exact(M, backend: str = RATIONAL) -> Fraction:
    if not isinstance(M, ExactMatrix):
        M = ExactMatrix.of(M)
    if M.rows != M.cols:
        raise ShapeError(f"{M.rows}x{M.cols} is not square")
    if backend == RATIONAL:
        return _det_rational(M.tolist())
    if backend == FRACTION_FREE:
        return _det_bareiss(M.tolist())
    raise ValueError(f"unknown backend {backend!r}")


def cofactor(M: ExactMatrix, r: int, c: int, backend: str = RATIONAL) -> Fraction:
    sign = -1 if (r + c) % 2 else 1
    return sign * det_exact(M.minor(r, c), backend)


# Cauchy-polynomial determinant ------------------------------------------------


def _require_nonzero(**kw):
    for name, v in kw.items():
        if v == 0:
            raise DegenerateParametersError(f"{name} must be nonzero")


def kara_entry(x, col: int, n: int, a, b, c, q) -> Fraction:
    """Entry in column ``col`` (1-based) of the (n+1)x(n+1) matrix, row variable x."""
    P = cauchy_poly
    j = col
    return (
        P(x, a * q ** (j - n), q, n - j + 1)
        * P(x, c / a, q, n - j + 1)
        * P(x, b * q ** (1 - n), q, j - 1)
        * P(x, c * q ** (n - j + 1) / b, q, j - 1)
    )


def kara_matrix(n: int, a, b, c, q, x: Sequence) -> ExactMatrix:
    a, b, c, q = (as_scalar(v) for v in (a, b, c, q))
    _require_nonzero(a=a, b=b, q=q)
    if len(x) != n + 1:
        raise ShapeError(f"need {n + 1} row variables")
    return ExactMatrix.of(
        [[kara_entry(as_scalar(xi), j, n, a, b, c, q) for j in range(1, n + 2)] for xi in x]
    )


def kara_product(n: int, a, b, c, q, x: Sequence) -> Fraction:
    a, b, c, q = (as_scalar(v) for v in (a, b, c, q))
    x = [as_scalar(v) for v in x]
    out = ONE
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            out *= (x[i] - x[j]) * (c - x[i] * x[j])
    out *= b ** binom2(n + 1) * q ** -exact_div((n + 1) * n * (n - 1), 3)
    for i in range(1, n + 2):
        out *= qpochhammer(a / b, q, i - 1) * qpochhammer(c * q ** (2 * n + 2 - 2 * i) / (a * b), q, i - 1)
    return out


def kara_sides(n: int, a, b, c, q, x: Sequence, backend: str = RATIONAL) -> tuple[Fraction, Fraction]:
    return det_exact(kara_matrix(n, a, b, c, q, x), backend), kara_product(n, a, b, c, q, x)


# Krattenthaler ----------------------------------------------------------------


def kratt_sides(n: int, a, b, c, q, x: Sequence, backend: str = RATIONAL) -> tuple[Fraction, Fraction]:
    a, b, c, q = (as_scalar(v) for v in (a, b, c, q))
    x = [as_scalar(v) for v in x]
    if len(x) != n:
        raise ShapeError(f"need {n} row variables")
    _require_nonzero(a=a, q=q)
    if any(v == 0 for v in x):
        raise DegenerateParametersError("row variables must be nonzero")
    den_full = [qpochhammer(b * xi, q, n - 1) * qpochhammer(b * c / xi, q, n - 1) for xi in x]
    if any(d == 0 for d in den_full):
        raise DegenerateParametersError("(b x_i, b c/x_i; q)_{n-1} vanishes")

    def entry(xi, j):
        num = qpochhammer(a * xi, q, n - j) * qpochhammer(a * c / xi, q, n - j)
        return num / (qpochhammer(b * xi, q, n - j) * qpochhammer(b * c / xi, q, n - j))

    lhs = det_exact([[entry(xi, j) for j in range(1, n + 1)] for xi in x], backend)
    rhs = a ** binom2(n) * q ** binom3(n)
    for i in range(n):
        for j in range(i + 1, n):
            rhs *= (x[j] - x[i]) * (1 - c / (x[i] * x[j]))
    for i in range(1, n + 1):
        rhs *= qpochhammer(b / a, q, i - 1) * qpochhammer(a * b * c * q ** (2 * n - 2 * i), q, i - 1)
        rhs /= den_full[i - 1]
    return lhs, rhs


# supersymmetric cofactor determinants -------------------------------------------


@dataclass(frozen=True)
class YjkSet:
    n: int
    k: int
    j: int
    a_pairs: int
    b_pairs: int
    values: tuple[Fraction, ...] = field(repr=False)


def build_yjk(n: int, k: int, j: int, a, b, c, q) -> YjkSet:
    """Y_{j,k}: a-pairs (a q^{-m}, c q^m / a) for m = 0, 1, ... and b-pairs
    (b q^{1-n+m}, c q^{n-1-m} / b) for m = 0, 1, ...

    For j < k there are n-j+1 a-pairs and j-1 b-pairs, otherwise n-j and j.
    """
    if not (1 <= k <= n + 1 and 1 <= j <= n):
        raise IndexError((n, k, j))
    a, b, c, q = (as_scalar(v) for v in (a, b, c, q))
    na, nb = (n - j + 1, j - 1) if j < k else (n - j, j)
    vals: list[Fraction] = []
    for m in range(na):
        vals += [a * q**-m, c * q**m / a]
    for m in range(nb):
        vals += [b * q ** (1 - n + m), c * q ** (n - 1 - m) / b]
    return YjkSet(n, k, j, na, nb, tuple(vals))


def supersym_matrix(n: int, k: int, u, a, b, c, q) -> ExactMatrix:
    """(i, j) entry h_{2n-i+1}(U - Y_{j,k}) with U = {u, uq, ..., uq^{n-1}}."""
    u, q = as_scalar(u), as_scalar(q)
    U = [u * q**i for i in range(n)]
    Ys = [build_yjk(n, k, j, a, b, c, q).values for j in range(1, n + 1)]
    return ExactMatrix.of(
        [[supersym_complete(U, Ys[j], 2 * n - i + 1) for j in range(n)] for i in range(1, n + 1)]
    )


def fnk_sign(n: int, k: int) -> int:
    """Sign relating the literal h-determinant to the normalized F_{n,k}.

    Row order h_{2n}, ..., h_{n+1} contributes (-1)^{C(n,2)} against the
    last-row minor; the cofactor sign contributes (-1)^{n+1+k}.
    """
    return -1 if (binom2(n + 1) + k + 1) % 2 else 1


def fnk_det_literal(n: int, k: int, u, a, b, c, q, backend: str = RATIONAL) -> Fraction:
    return det_exact(supersym_matrix(n, k, u, a, b, c, q), backend)


def fnk_det(n: int, k: int, u, a, b, c, q, backend: str = RATIONAL) -> Fraction:
    """F_{n,k} normalized so that cofactor_{n+1,k} = prod_{i<j}(x_i - x_j) * F_{n,k}."""
    return fnk_sign(n, k) * fnk_det_literal(n, k, u, a, b, c, q, backend)


def _restricted_double_product(n: int, k: int, a, b, c, q) -> Fraction:
    skip = n - k + 1
    out = ONE
    for j in range(n):
        if j == skip:
            continue
        for i in range(j + 1, n + 1):
            if i != skip:
                out *= 1 - c * q ** (i + j - 1) / (a * b)
    return out


def fnk_closed(n: int, k: int, u, a, b, c, q) -> Fraction:
    if not 1 <= k <= n + 1:
        raise IndexError(k)
    u, a, b, c, q = (as_scalar(v) for v in (u, a, b, c, q))
    _require_nonzero(a=a, b=b, q=q)
    P = cauchy_poly
    out = gauss_binomial(n, k - 1, q) * q ** -exact_div(n * (n - 1) * (2 * n - 1), 6) * b ** binom2(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out *= c - u * u * q ** (i + j - 2)
    out *= (
        P(b, u * q ** (n - 1), q, n - k + 1)
        * P(a, u * q ** (n - k + 1), q, k - 1)
        * P(u, c / b, q, n - k + 1)
        * P(c / a, u, q, k - 1)
    )
    for i in range(1, n):
        out *= (1 - a * q ** (i - 1) / b) ** (n - i)
    return out * _restricted_double_product(n, k, a, b, c, q)


def fnk_roots(n: int, k: int, a, b, c, q) -> list[Fraction]:
    """The 2n values of u at which F_{n,k} vanishes."""
    a, b, c, q = (as_scalar(v) for v in (a, b, c, q))
    roots = [a * q ** (i - n) for i in range(1, k)]
    roots += [c * q ** (1 - i) / a for i in range(1, k)]
    roots += [b * q ** (2 - n - i) for i in range(1, n - k + 2)]
    roots += [c * q ** (i - 1) / b for i in range(1, n - k + 2)]
    return roots


def lemma33_sides(n: int, k: int, a, b, c, q, backend: str = RATIONAL) -> tuple[Fraction, Fraction]:
    """det(e_{2n-i+1}(Y_{j,k})) against its closed form."""
    if not 1 <= k <= n + 1:
        raise IndexError(k)
    a, b, c, q = (as_scalar(v) for v in (a, b, c, q))
    _require_nonzero(a=a, b=b, q=q)
    Ys = [build_yjk(n, k, j, a, b, c, q).values for j in range(1, n + 1)]
    lhs = det_exact([[elem_sym(Ys[j], 2 * n - i + 1) for j in range(n)] for i in range(1, n + 1)], backend)
    rhs = (
        gauss_binomial(n, k - 1, q)
        * c ** binom2(n + 1)
        * q ** (binom2(n - k + 1) - exact_div(n * (n - 1) * (2 * n - 1), 6))
    )
    for i in range(1, n):
        rhs *= (b - a * q ** (i - 1)) ** (n - i)
    return lhs, rhs * _restricted_double_product(n, k, a, b, c, q)


# last-row cofactor expansion ---------------------------------------------------


def grid_vandermonde(n: int, u, q) -> Fraction:
    x = [as_scalar(u) * as_scalar(q) ** i for i in range(n)]
    out = ONE
    for i in range(n):
        for j in range(i + 1, n):
            out *= x[i] - x[j]
    return out


def cofactor_prefactor(n: int, u, a, b, c, q) -> Fraction:
    """Everything on the product side except prod_i (u q^{i-1} - y)(c - u q^{i-1} y)."""
    u, a, b, c, q = (as_scalar(v) for v in (u, a, b, c, q))
    out = grid_vandermonde(n, u, q)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out *= c - u * u * q ** (i + j - 2)
    out *= b ** binom2(n + 1) * q ** -exact_div((n + 1) * n * (n - 1), 3)
    for i in range(1, n + 2):
        out *= qpochhammer(a / b, q, i - 1) * qpochhammer(c * q ** (2 * n + 2 - 2 * i) / (a * b), q, i - 1)
    return out


@dataclass
class CofactorCheck:
    lhs: Fraction
    rhs: Fraction
    cofactors_direct: list[Fraction]
    cofactors_formula: list[Fraction]

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs and self.cofactors_direct == self.cofactors_formula


def cofactor_expansion_check(n: int, u, a, b, c, q, y, backend: str = RATIONAL) -> CofactorCheck:
    """Expand the Cauchy-polynomial determinant at x = (u, uq, ..., uq^{n-1}, y) along its last row.

    ``lhs`` is the product side, ``rhs`` the sum over k of
    vandermonde * F_{n,k} * (last-row entry k); the cofactors are also
    computed directly from minors.
    """
    u, a, b, c, q, y = (as_scalar(v) for v in (u, a, b, c, q, y))
    if u == 0 or q == 0 or grid_vandermonde(n, u, q) == 0:
        raise DegenerateParametersError("grid points u q^{i-1} must be distinct and nonzero")
    x = [u * q**i for i in range(n)] + [y]
    M = kara_matrix(n, a, b, c, q, x)
    lhs = cofactor_prefactor(n, u, a, b, c, q)
    for xi in x[:n]:
        lhs *= (xi - y) * (c - xi * y)
    vd = grid_vandermonde(n, u, q)
    formula = [vd * fnk_det(n, k, u, a, b, c, q, backend) for k in range(1, n + 2)]
    direct = [cofactor(M, n, k - 1, backend) for k in range(1, n + 2)]
    rhs = sum((C * M.entries[n][k] for k, C in enumerate(formula)), ZERO)
    return CofactorCheck(lhs, rhs, direct, formula)


def normalized_cofactors(n: int, u, a, b, c, q, closed: bool = True) -> list[Fraction]:
    """Cofactors divided by the product-side prefactor, k = 1..n+1.

    These are the summand coefficients of the Jackson corollary for
    summation index k - 1.
    """
    D = cofactor_prefactor(n, u, a, b, c, q)
    if D == 0:
        raise DegenerateParametersError("vanishing normalization")
    vd = grid_vandermonde(n, u, q)
    F = fnk_closed if closed else fnk_det
    return [vd * F(n, k, u, a, b, c, q) / D for k in range(1, n + 2)]


def corollary_from_cofactors(spec: GeometricSpec) -> tuple[list[Fraction], list[Fraction]]:
    """(normalized cofactors, corollary summand coefficients) for the same data."""
    got = normalized_cofactors(spec.n, spec.u, spec.a, spec.b, spec.c, spec.q)
    return got, corollary_coefficients(spec)
