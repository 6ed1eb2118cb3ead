"""Run every identity over a range of n and write the JSON report.

    python3 scripts/run_all.py --n-max 6 --trials 25 --out report.json
"""
import argparse
import json
import time
from pathlib import Path

from qid.cli import SuiteConfig, emit_report, report_dict, run_suite


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--det-backend", default="rational")
    p.add_argument("--out", type=Path, default=None)
    args = p.parse_args()

    cfg = SuiteConfig("all", args.n_min, args.n_max, args.trials, args.seed, "text", args.det_backend)
    start = time.perf_counter()
    report = run_suite(cfg)
    print(emit_report(report))
    print(f"wall time {time.perf_counter() - start:.1f}s")
    if args.out:
        args.out.write_text(json.dumps(report_dict(report), indent=2))
        print(f"wrote {args.out}")
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
