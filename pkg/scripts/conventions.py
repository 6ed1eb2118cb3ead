"""Print the small facts behind the conventions the library adopts.

1. The literal h-determinant differs from the last-row cofactor by a sign
   depending on (n, k); fnk_det absorbs it.
2. The two index readings of the interpolation coefficients give different
   numbers, each correct for its own basis.
3. With b-nodes ordered b q^{1-n}, ..., b the corollary summands are the
   interpolation coefficients of prod (u q^i - y)(c - u q^i y), up to (-1)^n.
"""
from fractions import Fraction as F

from qid.detlab import cofactor, fnk_closed, fnk_det_literal, grid_vandermonde, kara_matrix
from qid.interp import (
    PROOF,
    THEOREM,
    GeometricSpec,
    NodeSystem,
    bc_poly_from_roots,
    corollary_coefficients,
    interpolation_coefficients,
    reconstruct,
)


def signs():
    u, a, b, c, q, y = F(3, 2), F(2), F(-5, 3), F(7), F(2, 3), F(11, 4)
    print("n k  literal/closed  cofactor/(vandermonde*closed)")
    for n in range(1, 5):
        x = [u * q**i for i in range(n)] + [y]
        M = kara_matrix(n, a, b, c, q, x)
        vd = grid_vandermonde(n, u, q)
        for k in range(1, n + 2):
            closed = fnk_closed(n, k, u, a, b, c, q)
            print(n, k, fnk_det_literal(n, k, u, a, b, c, q) / closed, cofactor(M, n, k - 1) / (vd * closed))


def readings():
    nodes = NodeSystem(F(6), [F(1), F(5), F(-2)], [F(3), F(7), F(1, 2)])
    f = bc_poly_from_roots([F(5, 2), F(-3), F(4, 5)], F(6))
    for conv in (THEOREM, PROOF):
        C = interpolation_coefficients(f, nodes, conv)
        print(conv, [str(v) for v in C], "round trip:", reconstruct(f, nodes, conv) == f)


def summands():
    for n in range(1, 5):
        spec = GeometricSpec(F(2), F(-3, 5), F(7), F(3, 2), F(5, 3), n)
        f = bc_poly_from_roots(spec.u_roots(), spec.c)
        C = interpolation_coefficients(f, spec.nodes())
        K = corollary_coefficients(spec)
        print(n, "summand == (-1)^n C_k:", [(-1) ** n * v for v in K] == C)


if __name__ == "__main__":
    signs()
    readings()
    summands()
