"""Per-identity trial cells used by the verification harness.

A cell draws parameters from a :class:`SeededSampler`, evaluates both sides
of one identity and compares them exactly. Sides may be single scalars or
lists of scalars (coefficient vectors, one value per k, ...).

Library modules are referenced through their module objects so a test can
swap in a mutated copy of a module and watch the harness catch it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import detlab, divop, interp, lemmas
from .errors import QidError
from .exactcore import SeededSampler, poly_trim, sample_scalar

MAX_REJECTIONS = 1000


class Rejected(Exception):
    """Raised by a draw whose parameters are inadmissible."""


def scalar(s: SeededSampler) -> Fraction:
    return sample_scalar(s, (-12, 12), (1, 9), nonzero=True)


def qscalar(s: SeededSampler) -> Fraction:
    while True:
        q = scalar(s)
        if q not in (1, -1):
            return q


def scalars(s: SeededSampler, k: int) -> list[Fraction]:
    return [scalar(s) for _ in range(k)]


@dataclass
class CellResult:
    params: dict
    lhs: object
    rhs: object

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


# cells ------------------------------------------------------------------------


def cell_theorem1(n, s, backend):
    c = scalar(s)
    nodes = interp.NodeSystem(c, scalars(s, n), scalars(s, n))
    if not nodes.is_admissible():
        raise Rejected
    f = interp.bc_poly_from_roots(scalars(s, n), c)
    params = {"c": c, "a": list(nodes.a), "b": list(nodes.b), "f": list(f.coeffs)}
    return CellResult(params, list(f.coeffs), list(interp.reconstruct(f, nodes).coeffs))


def cell_newton_c0(n, s, backend):
    f = scalars(s, n + 1)
    a, b = scalars(s, n), scalars(s, n)
    if len(set(a + b)) != 2 * n:
        raise Rejected
    params = {"f": f, "a": a, "b": b}
    return CellResult(params, poly_trim(f), interp.newton_reconstruct_c0(f, a, b))


def _geometric(n, s):
    a, b, c, u = scalars(s, 4)
    q = qscalar(s)
    return interp.GeometricSpec(a, b, c, q, u, n), scalar(s)


def cell_jackson_corollary(n, s, backend):
    spec, y = _geometric(n, s)
    lhs, rhs = interp.jackson_corollary_sides(spec, y)
    params = {"a": spec.a, "b": spec.b, "c": spec.c, "q": spec.q, "u": spec.u, "y": y}
    return CellResult(params, lhs, rhs)


def cell_jackson_8phi7(n, s, backend):
    spec, y = _geometric(n, s)
    A, B, C, D, E = interp.jackson_substitution(spec, y)
    params = {"a": A, "b": B, "c": C, "d": D, "e": E, "q": spec.q}
    lhs, rhs = interp.jackson_8phi7_sides(A, B, C, D, E, n, spec.q)
    balanced = interp.is_balanced(A, B, C, D, E, n, spec.q)
    return CellResult(params, [lhs, balanced], [rhs, True])


def cell_kara(n, s, backend):
    a, b, c = scalars(s, 3)
    q = qscalar(s)
    x = scalars(s, n + 1)
    lhs, rhs = detlab.kara_sides(n, a, b, c, q, x, backend)
    return CellResult({"a": a, "b": b, "c": c, "q": q, "x": x}, lhs, rhs)


def cell_krattenthaler(n, s, backend):
    a, b, c = scalars(s, 3)
    q = qscalar(s)
    x = scalars(s, n)
    lhs, rhs = detlab.kratt_sides(n, a, b, c, q, x, backend)
    return CellResult({"a": a, "b": b, "c": c, "q": q, "x": x}, lhs, rhs)


def cell_fnk(n, s, backend):
    u, a, b, c = scalars(s, 4)
    q = qscalar(s)
    ks = range(1, n + 2)
    lhs = [detlab.fnk_det(n, k, u, a, b, c, q, backend) for k in ks]
    rhs = [detlab.fnk_closed(n, k, u, a, b, c, q) for k in ks]
    return CellResult({"u": u, "a": a, "b": b, "c": c, "q": q}, lhs, rhs)


def cell_lemma33(n, s, backend):
    a, b, c = scalars(s, 3)
    q = qscalar(s)
    pairs = [detlab.lemma33_sides(n, k, a, b, c, q, backend) for k in range(1, n + 2)]
    return CellResult({"a": a, "b": b, "c": c, "q": q}, [p[0] for p in pairs], [p[1] for p in pairs])


def cell_cofactor(n, s, backend):
    spec, y = _geometric(n, s)
    u, a, b, c, q = spec.u, spec.a, spec.b, spec.c, spec.q
    chk = detlab.cofactor_expansion_check(n, u, a, b, c, q, y, backend)
    normalized = detlab.normalized_cofactors(n, u, a, b, c, q)
    expected = interp.corollary_coefficients(spec)
    params = {"u": u, "a": a, "b": b, "c": c, "q": q, "y": y}
    lhs = [chk.lhs] + chk.cofactors_direct + normalized
    rhs = [chk.rhs] + chk.cofactors_formula + expected
    return CellResult(params, lhs, rhs)


def cell_lemmas2x(n, s, backend):
    c = scalar(s)
    a, b = scalars(s, n + 2), scalars(s, n + 2)
    nodes = interp.NodeSystem(c, a, b)
    if not nodes.is_admissible():
        raise Rejected
    roots = scalars(s, n)
    fc, gc = scalars(s, 4), scalars(s, 4)
    xs = scalars(s, min(n, 3) + 1)
    got, want = [], []

    lhs, rhs = lemmas.leibniz_sides(fc, gc, c, xs)
    got.append(lhs)
    want.append(rhs)

    sc = scalars(s, 3)
    sym = lambda x, y, rest: sc[0] * (x + y) ** 2 + sc[1] * x * y * (1 + sum(rest)) + sc[2]  # noqa: E731
    got.append(lemmas.annihilation_value(sym, 1, c, b[:3]))
    want.append(Fraction(0))

    for m in (n, n + 1):
        got.append(lemmas.bc_chain_value(roots, c, b[: m + 1]))
        want.append(Fraction(1 if m == n else 0))

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            got.append(lemmas.pair_chain_value(b, c, i, j))
            want.append(Fraction(1 if i == j else 0))
            v, e = lemmas.ratio_chain_sides(a, b, c, i, j)
            got.append(v)
            want.append(e)

    h = lemmas.bc_laurent(roots + scalars(s, 1), c, monic=False)
    pts = b[: min(n, 5) + 1]
    chain = divop.OperatorChain.standard(c, len(pts) - 1)
    got.append(divop.eval_table(h, c, pts))
    want.append(divop.apply_chain(divop.MultiFunction.of_one(h), chain)(tuple(pts)))

    params = {"c": c, "a": a, "b": b, "roots": roots, "f": fc, "g": gc, "x": xs, "sym": sc}
    return CellResult(params, got, want)


IDENTITIES: dict[str, tuple[int, Callable]] = {
    # name: (smallest meaningful n, cell)
    "theorem1": (1, cell_theorem1),
    "newton-c0": (1, cell_newton_c0),
    "jackson-corollary": (0, cell_jackson_corollary),
    "jackson-8phi7": (0, cell_jackson_8phi7),
    "kara": (1, cell_kara),
    "krattenthaler": (1, cell_krattenthaler),
    "fnk": (1, cell_fnk),
    "lemma33": (1, cell_lemma33),
    "cofactor": (1, cell_cofactor),
    "lemmas2x": (1, cell_lemmas2x),
}


def run_cell(identity: str, n: int, sampler: SeededSampler, backend: str = "rational"):
    """Draw until admissible, then evaluate once.

    Guard errors (inadmissible nodes, vanishing denominators) count as
    rejections. Returns ``None`` when every draw was rejected.
    """
    cell = IDENTITIES[identity][1]
    for _ in range(MAX_REJECTIONS):
        try:
            return cell(n, sampler, backend)
        except (Rejected, QidError, ZeroDivisionError):
            continue
    return None
