"""``qid verify``: seeded batch verification of every identity.

Exit codes: 0 when every cell passes, 1 when any cell fails or runs out of
admissible draws, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Sequence

from . import __version__, suites
from .exactcore import SeededSampler, derive_seed, to_str

SCHEMA = 1
IDENTITY_NAMES = list(suites.IDENTITIES)
STATUSES = ("pass", "fail", "rejected-sample")


@dataclass
class SuiteConfig:
    identity: str = "all"
    n_min: int = 1
    n_max: int = 3
    trials: int = 10
    seed: int = 0
    format: str = "text"
    det_backend: str = "rational"

    def identities(self) -> list[str]:
        return IDENTITY_NAMES if self.identity == "all" else [self.identity]


@dataclass
class TrialRecord:
    identity: str
    n: int
    trial: int
    seed: int
    status: str
    params: dict = field(default_factory=dict)
    lhs: object = None
    rhs: object = None
    error: str | None = None
    elapsed_us: int = 0


@dataclass
class Report:
    config: SuiteConfig
    records: list[TrialRecord]
    version: str = __version__

    def summary(self) -> dict:
        tally: dict[str, Counter] = {}
        for r in self.records:
            tally.setdefault(r.identity, Counter())[r.status] += 1
        per = {name: {s: t[s] for s in STATUSES} for name, t in sorted(tally.items())}
        total = {s: sum(t[s] for t in per.values()) for s in STATUSES}
        return {"by_identity": per, "total": total}

    @property
    def all_passed(self) -> bool:
        return all(r.status == "pass" for r in self.records)


def _serialize(v):
    if isinstance(v, bool):
        return v
    if isinstance(v, (Fraction, int)):
        return to_str(Fraction(v))
    if isinstance(v, (list, tuple)):
        return [_serialize(x) for x in v]
    if isinstance(v, dict):
        return {k: _serialize(x) for k, x in v.items()}
    return v


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _seed(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qid", description="Exact verification of q-series identities.")
    sub = parser.add_subparsers(dest="command")
    v = sub.add_parser("verify", help="run seeded identity trials")
    v.add_argument("--identity", choices=IDENTITY_NAMES + ["all"], default="all")
    v.add_argument("--n-min", type=_nonneg_int, default=1)
    v.add_argument("--n-max", type=_nonneg_int, default=3)
    v.add_argument("--trials", type=_positive_int, default=10)
    v.add_argument("--seed", type=_seed, default=0)
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.add_argument("--det-backend", choices=["rational", "fraction-free"], default="rational")
    return parser


def parse_args(argv: Sequence[str]) -> SuiteConfig:
    """Parse ``argv`` (without the program name); exits with status 2 on usage errors."""
    argv = list(argv)
    if not argv or argv[0].startswith("-") and argv[0] not in ("-h", "--help"):
        argv = ["verify"] + argv
    parser = build_parser()
    ns = parser.parse_args(argv)
    if ns.command is None:
        parser.error("missing command")
    if ns.n_min > ns.n_max:
        parser.error("--n-min must not exceed --n-max")
    return SuiteConfig(
        identity=ns.identity,
        n_min=ns.n_min,
        n_max=ns.n_max,
        trials=ns.trials,
        seed=ns.seed,
        format=ns.format,
        det_backend=ns.det_backend,
    )


def run_cell_record(identity: str, n: int, trial: int, cfg: SuiteConfig) -> TrialRecord:
    seed = derive_seed(cfg.seed, identity, n, trial)
    start = time.perf_counter()
    rec = TrialRecord(identity, n, trial, seed, "pass")
    try:
        res = suites.run_cell(identity, n, SeededSampler(seed), cfg.det_backend)
    except Exception as exc:  # a crash in one cell must not stop the suite
        rec.status, rec.error = "fail", f"{type(exc).__name__}: {exc}"
    else:
        if res is None:
            rec.status = "rejected-sample"
        else:
            rec.params = _serialize(res.params)
            if not res.ok:
                rec.status = "fail"
                rec.lhs, rec.rhs = _serialize(res.lhs), _serialize(res.rhs)
    rec.elapsed_us = int((time.perf_counter() - start) * 1e6)
    return rec


def run_suite(cfg: SuiteConfig) -> Report:
    records = []
    for identity in cfg.identities():
        n_lo = max(cfg.n_min, suites.IDENTITIES[identity][0])
        for n in range(n_lo, cfg.n_max + 1):
            for trial in range(cfg.trials):
                records.append(run_cell_record(identity, n, trial, cfg))
    records.sort(key=lambda r: (r.identity, r.n, r.trial))
    return Report(cfg, records)


def report_dict(r: Report, timings: bool = True) -> dict:
    records = []
    for rec in r.records:
        d = asdict(rec)
        if rec.status != "fail":
            d.pop("lhs")
            d.pop("rhs")
        if not timings:
            d.pop("elapsed_us")
        records.append(d)
    return {
        "schema": SCHEMA,
        "version": r.version,
        "config": asdict(r.config),
        "summary": r.summary(),
        "records": records,
    }


def emit_report(r: Report, format: str = "text") -> str:
    if format == "json":
        return json.dumps(report_dict(r), indent=2)
    summary = r.summary()
    lines = [f"qid {r.version}  seed={r.config.seed}  n={r.config.n_min}..{r.config.n_max}  trials={r.config.trials}"]
    lines.append(f"{'identity':<20}{'pass':>8}{'fail':>8}{'rejected':>10}")
    for name, t in summary["by_identity"].items():
        lines.append(f"{name:<20}{t['pass']:>8}{t['fail']:>8}{t['rejected-sample']:>10}")
    t = summary["total"]
    lines.append(f"{'total':<20}{t['pass']:>8}{t['fail']:>8}{t['rejected-sample']:>10}")
    for rec in r.records:
        if rec.status == "fail":
            detail = rec.error or f"lhs={rec.lhs} rhs={rec.rhs}"
            lines.append(f"FAIL {rec.identity} n={rec.n} trial={rec.trial}: {detail}")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    cfg = parse_args(sys.argv[1:] if argv is None else argv)
    report = run_suite(cfg)
    print(emit_report(report, cfg.format))
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
