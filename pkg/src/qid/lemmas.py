"""Executable forms of the operator lemmas.

Each function returns the computed value(s) so callers can compare exactly;
nothing here asserts.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .divop import MultiFunction, OperatorChain, apply_cdd, apply_chain, eval_table
from .exactcore import ONE, ZERO, as_scalar, poly_eval


def leibniz_sides(fc: Sequence, gc: Sequence, c, xs: Sequence) -> tuple[Fraction, Fraction]:
    """(f g) d_1...d_m against sum_k (f d_1...d_k)(x_1..x_{k+1}) * (g d_{k+1}...d_m)(x_{k+1}..x_{m+1}).

    ``fc``/``gc`` are coefficient lists; m = len(xs) - 1.
    """
    c = as_scalar(c)
    xs = tuple(as_scalar(x) for x in xs)
    m = len(xs) - 1

    def f(y):
        return poly_eval(fc, y)

    def g(y):
        return poly_eval(gc, y)

    lhs = apply_chain(MultiFunction.of_one(lambda y: f(y) * g(y)), OperatorChain.standard(c, m))(xs)
    rhs = ZERO
    for k in range(m + 1):
        left = apply_chain(MultiFunction.of_one(f), OperatorChain.standard(c, k))(xs)
        g_k = MultiFunction(k + 1, lambda t, k=k: g(t[k]))
        right = apply_chain(g_k, OperatorChain(c, tuple(range(k + 1, m + 1))))(xs)
        rhs += left * right
    return lhs, rhs


def annihilation_value(
    sym: Callable[[Fraction, Fraction, tuple], Fraction], i: int, c, xs: Sequence
) -> Fraction:
    """d_i applied to F(x) = sym(x_i, x_{i+1}, rest) where sym is symmetric in its first two slots."""
    arity = max(len(xs), i + 1)

    def F(t):
        return sym(t[i - 1], t[i], t[: i - 1] + t[i + 1 :])

    return apply_cdd(MultiFunction(arity, F), i, c)(tuple(xs))


def bc_laurent(roots: Sequence, c, monic: bool = True) -> Callable[[Fraction], Fraction]:
    """y^{-n} p(y) for p(y) = prod (y - x)(y - c/x) (monic) or prod (y - x)(c - x y)."""
    roots = [as_scalar(x) for x in roots]
    c = as_scalar(c)
    n = len(roots)

    def h(y):
        out = ONE
        for x in roots:
            out *= (y - x) * ((y - c / x) if monic else (c - x * y))
        return out / y**n

    return h


def bc_chain_value(roots: Sequence, c, pts: Sequence, monic: bool = True, black_box: bool = False) -> Fraction:
    """(y^{-n} p(y)) d_1...d_m at ``pts`` with m = len(pts) - 1."""
    h = bc_laurent(roots, c, monic)
    if black_box:
        return apply_chain(MultiFunction.of_one(h), OperatorChain.standard(c, len(pts) - 1))(tuple(pts))
    return eval_table(h, c, pts)


def _pair_product(y, xs, c) -> Fraction:
    out = ONE
    for x in xs:
        out *= (y - x) * (1 - c / (y * x))
    return out


def pair_chain_value(b: Sequence, c, i: int, j: int) -> Fraction:
    """prod_{k<=j}(y-b_k)(1-c/(y b_k)) d_1...d_i at y_k = b_k; 1 if j == i else 0."""
    b = [as_scalar(x) for x in b]
    c = as_scalar(c)
    bj = b[:j]
    return eval_table(lambda y: _pair_product(y, bj, c), c, b[: i + 1])


def ratio_chain_sides(a: Sequence, b: Sequence, c, i: int, j: int) -> tuple[Fraction, Fraction]:
    """Computed value and closed value of the two-branch operator evaluation.

    The function is prod_{k<=j} B_k(y) / prod_{k<=j} A_k(y) * prod_{k<=i-1} A_k(y)
    with B_k(y) = (y-b_k)(1-c/(y b_k)), A_k likewise; it is hit by d_1...d_i at
    y_k = b_k. Expected: 0 for j != i, 1/((b_{j+1}-a_j)(1-c/(a_j b_{j+1}))) for j == i.
    """
    a = [as_scalar(x) for x in a]
    b = [as_scalar(x) for x in b]
    c = as_scalar(c)

    def h(y):
        return _pair_product(y, b[:j], c) * _pair_product(y, a[: i - 1], c) / _pair_product(y, a[:j], c)

    value = eval_table(h, c, b[: i + 1])
    if j != i:
        return value, ZERO
    return value, 1 / ((b[j] - a[j - 1]) * (1 - c / (a[j - 1] * b[j])))
