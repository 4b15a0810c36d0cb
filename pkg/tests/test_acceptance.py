"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``CRITERION k: PASS|FAIL ...`` line straight to the
terminal, then asserts.
"""

import io
import random
import time

import pytest

from paritybias.cli import main
from paritybias.core import DQ, P, P_D, Q, avoiding, from_parts
from paritybias.counting import count_by_dp, count_by_enumeration
from paritybias.maps import FAMILIES, audit_family, thm2_map, thm3_map, thm4_map
from paritybias.verify import (
    explore_problem1,
    explore_threshold,
    verify_bias,
    verify_cardinality,
    verify_lemma,
    verify_lemma_bound,
    violation_set,
)

from test_maps import THM2_EXAMPLES, THM3_EXAMPLES, THM4_EXAMPLES


@pytest.fixture
def report(capsys):
    def emit(k: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\nCRITERION {k}: {'PASS' if ok else 'FAIL'} {detail}")
    return emit


def _sweep(claim, ns):
    t0 = time.perf_counter()
    recs = verify_bias(claim, ns)
    return recs, time.perf_counter() - t0


def test_criterion_1_all_partitions(report):
    recs, dt = _sweep("T1", range(1, 121))
    cross = verify_bias("T1", range(1, 41), method="both")
    tie = next(r for r in recs if r.n == 2)
    ok = (all(r.holds for r in recs) and tie.lhs == tie.rhs and dt < 30
          and all(r.holds for r in cross))
    report(1, ok, f"n=1..120, p_o(2)=p_e(2)={tie.lhs}, enum cross-check to 40, {dt:.2f}s")
    assert ok


def test_criterion_2_distinct_parts(report):
    recs, dt = _sweep("T2", range(20, 121))
    small = violation_set(verify_bias("T2", range(1, 20), method="enum"))
    ok = all(r.holds for r in recs) and bool(small) and dt < 30
    report(2, ok, f"n=20..120 hold; violations below 20: {small}; {dt:.2f}s")
    assert ok


def test_criterion_3_min_part_two(report):
    recs, dt = _sweep("T3", range(8, 121))
    ok = all(r.holds for r in recs) and dt < 30
    report(3, ok, f"q_o < q_e for n=8..120, {dt:.2f}s")
    assert ok


def test_criterion_4_avoid_two(report):
    recs, dt = _sweep("T4", range(1, 121))
    ok = all(r.holds for r in recs) and dt < 30
    report(4, ok, f"n=1..120, {dt:.2f}s")
    assert ok


def test_criterion_5_avoid_one_two(report):
    recs, dt = _sweep("T5", range(9, 121))
    ok = all(r.holds for r in recs) and dt < 30
    report(5, ok, f"n=9..120, {dt:.2f}s")
    assert ok


def test_criterion_6_lemmas(report):
    t0 = time.perf_counter()
    l1 = [n for n in range(14, 2001, 2) if not verify_lemma("L1", n).holds]
    l2 = [n for n in range(9, 2002, 2) if not verify_lemma("L2", n).holds]
    lb = [m for m in range(26, 1001) if not verify_lemma_bound(m).holds]
    at25 = verify_lemma_bound(25).detail["quadratic"]
    dt = time.perf_counter() - t0
    ok = not l1 and not l2 and not lb and at25 is False and dt < 10
    report(6, ok, f"L1 fails {l1}, L2 fails {l2}, bound fails {lb[:5]}, m=25 quadratic={at25}, {dt:.2f}s")
    assert ok


def test_criterion_7_formulas(report):
    t0 = time.perf_counter()
    bad = [(r.claim, r.n, r.lhs, r.rhs)
           for n in range(1, 41) for r in verify_cardinality(n)
           if not r.skipped and r.claim in ("CARD1", "CARD2", "C1/eq2", "C2/eq4", "C3/eq5", "C4/eq8")
           and not r.holds]
    dt = time.perf_counter() - t0
    ok = not bad and dt < 60
    report(7, ok, f"{len(bad)} mismatches, first {bad[:3]}, {dt:.2f}s")
    assert ok, bad


def _fixtures_ok():
    cited = [
        (thm2_map, THM2_EXAMPLES), (thm3_map, THM3_EXAMPLES), (thm4_map, THM4_EXAMPLES),
    ]
    return [(src, img) for fn, table in cited for src, img in table
            if fn(from_parts(src)).image.parts != img]


def _residual_mismatches():
    """Residual classes whose size is stated in closed form."""
    bad = []
    for n in range(21, 36, 2):
        got = audit_family(n, "T2").residual_count
        if got != (n - 3) // 4:
            bad.append(("T2", n, got))
    for n in range(25, 36, 2):
        got = audit_family(n, "T4").residual_count
        if got != (n - 3) // 4 - 1:
            bad.append(("T4", n, got))
    return bad


def test_criterion_8_injection_audits(report):
    t0 = time.perf_counter()
    failing = {}
    for fam in FAMILIES:
        for n in range(0, 36):
            r = audit_family(n, fam)
            if not r.verified:
                failing.setdefault(fam, []).append(n)
    fixtures = _fixtures_ok()
    residual = _residual_mismatches()
    dt = time.perf_counter() - t0
    ok = not failing and not fixtures and not residual and dt < 600
    summary = "; ".join(f"{f} fails at n={ns[:4]}{'...' if len(ns) > 4 else ''}"
                        for f, ns in failing.items())
    report(8, ok, f"{summary or 'all audits clean'}; fixture mismatches {len(fixtures)}; "
                  f"residual mismatches {residual}; {dt:.2f}s")
    assert ok


STUDY_FAMILY = [P, P_D, Q, DQ, avoiding(2), avoiding(1, 2)] + [
    s for k in range(3, 7) for s in (avoiding(k), avoiding(1, k))
]


def test_criterion_9_oracle_equivalence(report):
    rng = random.Random(20260)
    pairs = [(rng.randint(0, 40), rng.choice(STUDY_FAMILY)) for _ in range(200)]
    tables = {s: count_by_dp(40, s) for s in STUDY_FAMILY}
    bad = [(n, s.key()) for n, s in pairs if count_by_enumeration(n, s) != tables[s][n]]
    ok = not bad
    report(9, ok, f"200 pairs, {len(bad)} disagreements")
    assert ok


def test_criterion_10_exploration(report):
    t0 = time.perf_counter()
    recs = explore_problem1(range(4, 41))
    p1_bad = [(r.claim, r.n, r.lhs, r.rhs) for r in recs if r.in_scope and not r.holds]
    candidates, unstable = {}, []
    for with_one in (False, True):
        for k in (3, 4, 5, 6):
            a = explore_threshold(k, with_one, 300)
            b = explore_threshold(k, with_one, 400)
            candidates[(k, with_one)] = a.candidate
            if (a.candidate, a.tail_holds) != (b.candidate, b.tail_holds) or not a.tail_holds:
                unstable.append((k, with_one))
    dt = time.perf_counter() - t0
    ok = not p1_bad and not unstable and dt < 300
    shown = ", ".join(f"N({'1,' if w else ''}{k})={c}" for (k, w), c in candidates.items())
    report(10, ok, f"problem 1 failures {len(p1_bad)} (first {p1_bad[:3]}); "
                   f"problem 2 candidates {shown}; unstable {unstable}; {dt:.2f}s")
    assert ok


DETERMINISM_COMMANDS = [
    ["count", "--class", "P", "--n-max", "120"],
    ["count", "--class", "avoid:1,5", "--n-max", "50", "--method", "both"],
    ["verify", "theorem", "T2", "--n-range", "1..60", "--method", "both"],
    ["verify", "lemma", "L2", "--n-range", "9..401"],
    ["verify", "formulas", "--n-range", "1..30"],
    ["verify", "maps", "--n-range", "0..20"],
    ["explore", "problem1", "--m-range", "1..20"],
    ["explore", "problem2", "--k", "5", "--with-one", "--trail"],
]


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def test_criterion_11_determinism(report):
    diff = [a[0] + " " + a[1] for a in DETERMINISM_COMMANDS
            if _run(a + ["--jobs", "1"]) != _run(a + ["--jobs", "8"])]
    ok = not diff
    report(11, ok, f"{len(DETERMINISM_COMMANDS)} commands, differing: {diff}")
    assert ok
