"""Compare the rational and fraction-free determinant backends on Cauchy-polynomial matrices."""
import time
from fractions import Fraction as F

from qid.detlab import FRACTION_FREE, RATIONAL, det_exact, kara_matrix
from qid.exactcore import SeededSampler, sample_scalar


def main():
    s = SeededSampler(1)
    print(f"{'n':>3}{'rational ms':>14}{'bareiss ms':>14}  agree")
    for n in range(1, 9):
        a, b, c, q = (sample_scalar(s, nonzero=True) for _ in range(4))
        if q in (1, -1):
            q = F(2, 3)
        x = [sample_scalar(s, nonzero=True) for _ in range(n + 1)]
        M = kara_matrix(n, a, b, c, q, x)
        out = {}
        for backend in (RATIONAL, FRACTION_FREE):
            t = time.perf_counter()
            out[backend] = det_exact(M, backend)
            out[backend + "_ms"] = (time.perf_counter() - t) * 1e3
        print(f"{n:>3}{out[RATIONAL + '_ms']:>14.2f}{out[FRACTION_FREE + '_ms']:>14.2f}  {out[RATIONAL] == out[FRACTION_FREE]}")


if __name__ == "__main__":
    main()
