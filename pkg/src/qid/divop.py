"""c-divided difference operators on exactly evaluable functions.

The operator acting on slots ``i, i+1`` (1-based) is

    (f d_i)(..., x_i, x_{i+1}, ...) =
        (f(..., x_i, x_{i+1}, ...) - f(..., x_{i+1}, x_i, ...))
        / ((x_i - x_{i+1}) (1 - c / (x_i x_{i+1})))

and with ``c == 0`` it is the classical divided difference. Operators are
conventionally written postfix, ``f d_1 d_2 ... d_j``, meaning d_1 acts first;
here that is ``apply_chain(f, OperatorChain(c, [1, 2, ..., j]))``.

Two evaluation routes exist. The black-box route applies the definition
literally and costs 2^j evaluations of ``f``. :func:`eval_table` computes the
same number for a one-variable ``f`` at ``(b_1, ..., b_{j+1})`` with an
O(j^2) triangular table and is what the interpolation code uses.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import CoincidentPointsError, CSingularPairError, ZeroCoordinateError
from .exactcore import as_scalar


def cdd_denominator(x, y, c) -> Fraction:
    """(x - y)(1 - c/(x y)) with the guard checks of the operator."""
    if x == y:
        raise CoincidentPointsError(f"coincident points {x}")
    if c == 0:
        return x - y
    if x == 0 or y == 0:
        raise ZeroCoordinateError("zero coordinate with c != 0")
    if x * y == c:
        raise CSingularPairError(f"{x} * {y} == c")
    return (x - y) * (1 - c / (x * y))


class MultiFunction:
    """An exact function of the first ``arity`` coordinates of a tuple.

    ``evaluator`` receives a tuple of Fractions of length ``arity``.
    Calling the object memoizes sub-evaluations for the duration of that
    single call only.
    """

    def __init__(self, arity: int, evaluator: Callable[[tuple], Fraction]):
        if arity < 1:
            raise ValueError("arity must be positive")
        self.arity = arity
        self._evaluator = evaluator

    @classmethod
    def of_one(cls, f: Callable[[Fraction], Fraction]) -> "MultiFunction":
        return cls(1, lambda xs: f(xs[0]))

    def _eval(self, point: tuple, cache: dict) -> Fraction:
        key = (id(self), point[: self.arity])
        if key not in cache:
            cache[key] = self._evaluator(key[1])
        return cache[key]

    def __call__(self, *point) -> Fraction:
        if len(point) == 1 and isinstance(point[0], (tuple, list)):
            point = tuple(point[0])
        point = tuple(as_scalar(x) for x in point)
        if len(point) < self.arity:
            raise ValueError(f"need {self.arity} coordinates, got {len(point)}")
        return self._eval(point, {})


class _CDD(MultiFunction):
    def __init__(self, base: MultiFunction, i: int, c: Fraction):
        self.base = base
        self.i = i
        self.c = c
        self.arity = max(base.arity, i + 1)

    def _eval(self, point: tuple, cache: dict) -> Fraction:
        point = point[: self.arity]
        key = (id(self), point)
        if key in cache:
            return cache[key]
        i = self.i - 1
        x, y = point[i], point[i + 1]
        denom = cdd_denominator(x, y, self.c)
        swapped = point[:i] + (y, x) + point[i + 2 :]
        value = (self.base._eval(point, cache) - self.base._eval(swapped, cache)) / denom
        cache[key] = value
        return value


@dataclass(frozen=True)
class OperatorChain:
    c: Fraction
    indices: tuple[int, ...]

    @classmethod
    def standard(cls, c, j: int) -> "OperatorChain":
        """d_1 d_2 ... d_j."""
        return cls(as_scalar(c), tuple(range(1, j + 1)))


def apply_cdd(f: MultiFunction, i: int, c) -> MultiFunction:
    if i < 1:
        raise ValueError("operator index is 1-based")
    return _CDD(f, i, as_scalar(c))


def apply_chain(f: MultiFunction, chain: OperatorChain) -> MultiFunction:
    for i in chain.indices:
        f = apply_cdd(f, i, chain.c)
    return f


def divided_diff_table(
    f: Callable[[Fraction], Fraction], c, points: Sequence
) -> list[list[Fraction]]:
    """Triangular table; ``table[m][i]`` is (f d_1...d_m)(b_1..b_m, b_i) for i >= m.

    Indices are 0-based here: ``table[0][i] = f(points[i])`` and the chain
    value ``(f d_1 ... d_j)(b_1, ..., b_{j+1})`` sits at ``table[j][j]``.
    """
    c = as_scalar(c)
    pts = [as_scalar(p) for p in points]
    if c != 0 and any(p == 0 for p in pts):
        raise ZeroCoordinateError("zero node with c != 0")
    row = [as_scalar(f(p)) for p in pts]
    table = [row]
    for m in range(len(pts) - 1):
        prev = table[-1]
        row = [None] * len(pts)
        for i in range(m + 1, len(pts)):
            row[i] = (prev[m] - prev[i]) / cdd_denominator(pts[m], pts[i], c)
        table.append(row)
    return table


def eval_table(f: Callable[[Fraction], Fraction], c, points: Sequence) -> Fraction:
    """(f d_1 ... d_j)(b_1, ..., b_{j+1}) for a one-variable ``f``, j = len(points) - 1."""
    if not points:
        raise ValueError("need at least one point")
    table = divided_diff_table(f, c, points)
    return table[-1][len(points) - 1]
