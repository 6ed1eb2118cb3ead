"""Acceptance criteria 1-11. Each test records one PASS/FAIL line, printed in the terminal summary."""
import json
import time
from fractions import Fraction

import pytest

import mutants
from conftest import ACCEPTANCE, draw, draw_q
from oracles import chain_closed_form, lagrange, polyval
from qid import interp, lemmas
from qid.cli import SuiteConfig, main, report_dict, run_suite
from qid.detlab import cofactor_expansion_check, fnk_closed, fnk_det, fnk_roots, kara_sides
from qid.divop import MultiFunction, OperatorChain, apply_chain, eval_table
from qid.errors import DegenerateParametersError, QidError
from qid.exactcore import SeededSampler, poly_eval, poly_equal

F = Fraction
SEED = 20241016


def record(key, ok, detail):
    ACCEPTANCE[key] = (ok, detail)
    print(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {detail}")
    assert ok, detail


def suite(identity, n_min, n_max, trials, seed=SEED):
    start = time.perf_counter()
    report = run_suite(SuiteConfig(identity, n_min, n_max, trials, seed))
    elapsed = time.perf_counter() - start
    total = report.summary()["total"]
    return report.all_passed, total, elapsed


def tally(total):
    return f"{total['pass']} pass / {total['fail']} fail / {total['rejected-sample']} rejected"


def sampler(name):
    return SeededSampler(SEED).spawn("acceptance", name)


def test_criterion_01_theorem_round_trip():
    ok, total, dt = suite("theorem1", 1, 6, 25)
    ok = ok and total["pass"] == 150 and dt < 30
    record("1 theorem round-trip", ok, f"n=1..6 x 25: {tally(total)}, {dt:.1f}s (limit 30s)")


def test_criterion_02_c_zero():
    ok, total, _ = suite("newton-c0", 1, 6, 25)
    s = sampler("c0")
    agree = 0
    for n in range(1, 7):
        done = 0
        while done < 25:
            f, a, b = draw(s, n + 1), draw(s, n), draw(s, n)
            if len(set(a + b)) != 2 * n:
                continue
            rec = interp.newton_reconstruct_c0(f, a, b)
            nodes = a + b
            oracle = lagrange(nodes, [polyval(f, x) for x in nodes])
            agree += poly_equal(rec, f) and poly_equal(oracle, rec)
            done += 1
    ok = ok and total["pass"] == 150 and agree == 150
    record("2 c=0 degeneration", ok, f"harness {tally(total)}; Lagrange oracle agrees {agree}/150")


def _admissible_nodes(s, size):
    while True:
        c = draw(s)
        nodes = interp.NodeSystem(c, draw(s, size), draw(s, size))
        if nodes.is_admissible():
            return nodes


def test_criterion_03_lemma_suite():
    s = sampler("lemmas")
    counts = dict.fromkeys(["leibniz", "annihilation", "bc-chain", "delta", "ratio-chain"], 0)
    bad = []
    for t in range(24):
        nodes = _admissible_nodes(s, 6)
        a, b, c = list(nodes.a), list(nodes.b), nodes.c
        m = 1 + t % 3
        lhs, rhs = lemmas.leibniz_sides(draw(s, 4), draw(s, 3), c, b[: m + 1])
        counts["leibniz"] += 1
        bad += ["leibniz"] * (lhs != rhs)

        k = draw(s, 3)
        sym = lambda x, y, rest: k[0] * (x * y) ** 2 + k[1] * (x + y) * rest[0] + k[2]  # noqa: E731
        i = 1 + t % 2
        counts["annihilation"] += 1
        bad += ["annihilation"] * (lemmas.annihilation_value(sym, i, c, b[:3]) != 0)

        n = t % 5
        roots = draw(s, n)
        counts["bc-chain"] += 1
        bad += ["bc-chain"] * (lemmas.bc_chain_value(roots, c, b[: n + 1]) != 1)
        bad += ["bc-chain"] * (lemmas.bc_chain_value(roots, c, b[: n + 2]) != 0)

        counts["delta"] += 1
        counts["ratio-chain"] += 1
        for i in range(1, 5):
            for j in range(0, 5):
                bad += ["delta"] * (lemmas.pair_chain_value(b, c, i, j) != (1 if i == j else 0))
                if j == 0:
                    continue
                got, want = lemmas.ratio_chain_sides(a, b, c, i, j)
                closed = 1 / ((b[j] - a[j - 1]) * (1 - c / (a[j - 1] * b[j]))) if i == j else 0
                bad += ["ratio-chain"] * (got != want or want != closed)
    ok = not bad and all(v >= 20 for v in counts.values())
    detail = ", ".join(f"{k} {v}" for k, v in counts.items()) + f" trials; mismatches {len(bad)}"
    record("3 lemma suite", ok, detail)


def test_criterion_04_table_vs_definition():
    s = sampler("table")
    trials = agree = 0
    while trials < 60:
        j = trials % 6
        c, pts = draw(s), draw(s, j + 1)
        if len(set(pts)) < len(pts) or any(
            pts[u] * pts[v] == c for u in range(j + 1) for v in range(u + 1, j + 1)
        ):
            continue
        coeffs = draw(s, 8)

        def f(y):
            return poly_eval(coeffs, y)

        table = eval_table(f, c, pts)
        box = apply_chain(MultiFunction.of_one(f), OperatorChain.standard(c, j))(tuple(pts))
        agree += table == box == chain_closed_form(f, c, pts)
        trials += 1
    record("4 table = definition", agree == trials, f"j=0..5, {agree}/{trials} trials agree")


def test_criterion_05_corollary():
    start = time.perf_counter()
    ok, total, _ = suite("jackson-corollary", 0, 10, 10)
    s = sampler("summand")
    matched = 0
    for n in range(1, 6):
        done = 0
        while done < 5:
            spec = interp.GeometricSpec(draw(s), draw(s), draw(s), draw_q(s), draw(s), n)
            nodes = spec.nodes()
            try:
                K = interp.corollary_coefficients(spec)
                if not nodes.is_admissible():
                    continue
            except QidError:
                continue
            f = interp.bc_poly_from_roots(spec.u_roots(), spec.c)
            C = interp.interpolation_coefficients(f, nodes)
            matched += C == [(-1) ** n * v for v in K]
            done += 1
    dt = time.perf_counter() - start
    ok = ok and total["pass"] == 110 and matched == 25 and dt < 60
    record(
        "5 corollary",
        ok,
        f"n=0..10 x 10: {tally(total)}; summand = C_k {matched}/25 (n=1..5); {dt:.1f}s (limit 60s)",
    )


def test_criterion_06_kara():
    ok, total, _ = suite("kara", 1, 5, 10)
    pinned = kara_sides(1, 5, 7, 11, 3, [2, 3])
    ok = ok and total["pass"] == 50 and pinned == (F(-48, 7), F(-48, 7))
    record("6 Cauchy-polynomial determinant", ok, f"n=1..5 x 10: {tally(total)}; pinned n=1 -> {pinned[0]}")


def test_criterion_07_krattenthaler():
    ok, total, _ = suite("krattenthaler", 1, 6, 10)
    record("7 Krattenthaler", ok and total["pass"] == 60, f"n=1..6 x 10: {tally(total)}")


def test_criterion_08_cofactor_chain():
    start = time.perf_counter()
    parts = {name: suite(name, 1, 4, 5) for name in ("fnk", "lemma33", "cofactor")}
    dt = time.perf_counter() - start
    ok = all(p[0] and p[1]["pass"] == 20 for p in parts.values()) and dt < 120
    detail = "; ".join(f"{name} {tally(p[1])}" for name, p in parts.items())
    record("8 cofactor chain", ok, f"n=1..4 x 5: {detail}; {dt:.1f}s (limit 120s)")


def test_criterion_09_jackson_8phi7():
    s = sampler("8phi7")
    trials = good = 0
    for n in range(0, 16):
        done = 0
        while done < 3:
            spec = interp.GeometricSpec(draw(s), draw(s), draw(s), draw_q(s), draw(s), n)
            y = draw(s)
            try:
                cl, cr = interp.jackson_corollary_sides(spec, y)
                params = interp.jackson_substitution(spec, y)
                lhs, rhs = interp.jackson_8phi7_sides(*params, n, spec.q)
            except (QidError, ZeroDivisionError):
                continue
            if cl != cr:  # only substitute from verified corollary instances
                continue
            good += interp.is_balanced(*params, n, spec.q) and lhs == rhs
            trials += 1
            done += 1
    harness_ok, total, _ = suite("jackson-8phi7", 0, 15, 3)
    ok = good == trials == 48 and harness_ok
    record("9 Jackson 8phi7", ok, f"n=0..15: {good}/{trials} direct; harness {tally(total)}")


def test_criterion_10_roots():
    s = sampler("roots")
    checks = fails = 0
    for n in range(1, 4):
        a, b, c, q = draw(s), draw(s), draw(s), draw_q(s)
        for k in range(1, n + 2):
            for r in fnk_roots(n, k, a, b, c, q):
                checks += 1
                fails += fnk_closed(n, k, r, a, b, c, q) != 0 or fnk_det(n, k, r, a, b, c, q) != 0
        u = draw(s)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                cc = u * u * q ** (i + j - 2)
                for k in range(1, n + 2):
                    checks += 1
                    fails += fnk_closed(n, k, u, a, b, cc, q) != 0 or fnk_det(n, k, u, a, b, cc, q) != 0
        # the cofactor expansion collapses when y hits a grid point
        for i in range(1, n + 1):
            try:
                chk = cofactor_expansion_check(n, u, a, b, c, q, u * q ** (i - 1))
            except DegenerateParametersError:
                continue
            checks += 1
            fails += not (chk.lhs == chk.rhs == 0)
    record("10 root/factor structure", fails == 0 and checks > 0, f"n<=3: {checks - fails}/{checks} vanish")


def test_criterion_11_harness(monkeypatch, capsys):
    cfg = SuiteConfig("all", 1, 3, 3, seed=7)
    one = json.dumps(report_dict(run_suite(cfg), timings=False), sort_keys=True)
    two = json.dumps(report_dict(run_suite(cfg), timings=False), sort_keys=True)
    deterministic = one == two
    caught = []
    for identity in sorted(mutants.MUTATIONS):
        with monkeypatch.context() as mp:
            mutants.install(identity, mp)
            code = main(["verify", "--identity", identity, "--n-min", "0", "--n-max", "3", "--trials", "3"])
        caught.append((identity, code))
    capsys.readouterr()
    missed = [name for name, code in caught if code != 1]
    ok = deterministic and not missed
    record(
        "11 harness",
        ok,
        f"identical JSON across runs: {deterministic}; mutations detected {len(caught) - len(missed)}/{len(caught)}",
    )


@pytest.mark.parametrize("identity", sorted(mutants.MUTATIONS))
def test_clean_harness_exits_zero(identity, capsys):
    assert main(["verify", "--identity", identity, "--n-min", "0", "--n-max", "3", "--trials", "3"]) == 0
