"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line."""

import subprocess
import sys
import time
from pathlib import Path

import pytest

from dirop.digraph import BlownCycle, complete_symmetric, host_w_star
from dirop.engine import assemble_w_factorization, check_hypotheses, validate_base_tuple
from dirop.haggkvist import BlockError, d_factorize_blowup_star
from dirop.hamdecomp import check_split, decompose_k_even, decompose_k_odd
from dirop.solver import normalize, solve
from dirop.store import CASES, SPECIALS, load_case, load_special
from dirop.verify import ExhaustedNone, Found, oracle_search, verify_factorization


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'} {title}: {detail}")
    return emit


def test_criterion_1_end_to_end(report):
    start = time.perf_counter()
    failures, slowest, count = [], (0.0, None), 0
    for t1 in (4, 6):
        for t2 in range(4, 65 - t1, 2):
            if t1 + t2 < 14:
                continue
            t0 = time.perf_counter()
            cert = solve(normalize(t1, t2))
            n = t1 + t2
            outcome = verify_factorization(cert.factors, complete_symmetric(n, True), [t1, t2])
            arcs = sum(len(f.arcs()) for f in cert.factors)
            dt = time.perf_counter() - t0
            slowest = max(slowest, (dt, (t1, t2)))
            count += 1
            if not (outcome.passed and len(cert.factors) == n - 1 and arcs == n * (n - 1)
                    and all(f.lengths() == [t1, t2] for f in cert.factors) and dt < 2.0):
                failures.append((t1, t2, outcome.summary(), round(dt, 2)))
    total = time.perf_counter() - start
    ok = not failures and total < 180
    report(1, "end-to-end solvability, 14 <= t1+t2 <= 64", ok,
           f"{count} pairs, slowest {slowest[1]} {slowest[0]:.2f}s, total {total:.1f}s"
           + (f", failures {failures[:3]}" if failures else ""))
    assert ok


def test_criterion_2_data_audit(report):
    start = time.perf_counter()
    passed = total = 0
    problems = []
    for case in sorted(CASES):
        tuples = load_case(*case)
        for bt in tuples:
            total += 1
            passed += validate_base_tuple(bt).passed
        problems += [f"{case}: {p}" for p in check_hypotheses(tuples)]
    dt = time.perf_counter() - start
    ok = passed == total == 64 and not problems and dt < 10
    report(2, "data audit B1-B6 and case hypotheses", ok,
           f"{passed}/{total} tuples, {len(problems)} hypothesis problems, {dt:.2f}s")
    assert ok


def test_criterion_3_special_cases(report):
    start = time.perf_counter()
    expected = {(4, 12): (16, 7), (6, 8): (14, 9), (6, 10): (16, 7), (6, 12): (18, 9)}
    results = []
    for pair, (order, count) in expected.items():
        sp = load_special(*pair)
        outcome = verify_factorization(sp.factors, host_w_star(order), list(pair))
        results.append(outcome.passed and len(sp.factors) == count == SPECIALS[pair])
    dt = time.perf_counter() - start
    ok = all(results) and dt < 1
    report(3, "special-case factorizations of W*_16, W*_14, W*_16, W*_18", ok,
           f"{sum(results)}/4 verify, {dt:.3f}s")
    assert ok


def test_criterion_4_assembly_census(report):
    start = time.perf_counter()
    bad = []
    for (t1, q), r in sorted(CASES.items()):
        tuples = load_case(t1, q)
        for k in range(7):
            m = (t1 + q) // 2 + 4 * k
            factors = assemble_w_factorization(tuples, k)
            host = host_w_star(2 * m)
            outcome = verify_factorization(factors, host, [t1, q + 8 * k])
            arcs = sum(len(f.arcs()) for f in factors)
            want = 18 * m if r == 9 else 14 * m
            if not (outcome.passed and arcs == want == host.arc_count):
                bad.append((t1, q, k))
    dt = time.perf_counter() - start
    ok = not bad and dt < 30
    report(4, "W*-assembly census for 8 cases, k = 0..6", ok,
           f"{56 - len(bad)}/56 exact partitions, {dt:.2f}s")
    assert ok


def test_criterion_5_haggkvist(report):
    start = time.perf_counter()
    bad, count = [], 0
    for m in range(4, 41):
        cols = list(range(m))
        for t1 in range(4, 2 * m - 3, 2):
            t2 = 2 * m - t1
            fs = d_factorize_blowup_star(cols, t1, t2)
            count += 1
            outcome = verify_factorization(fs, BlownCycle(cols), [t1, t2])
            if not (outcome.passed and len(fs) == 4
                    and sum(len(f.arcs()) for f in fs) == 8 * m):
                bad.append((m, t1, t2))
    try:
        d_factorize_blowup_star(list(range(6)), 2, 10)
        rejected = False
    except BlockError:
        rejected = True
    dt = time.perf_counter() - start
    ok = not bad and rejected and dt < 10
    report(5, "blown-cycle D-factorizations, m = 4..40", ok,
           f"{count - len(bad)}/{count} verified, length 2 rejected={rejected}, {dt:.2f}s")
    assert ok


def test_criterion_6_km_splits(report):
    start = time.perf_counter()
    bad = []
    for m in range(7, 50, 2):
        split = decompose_k_odd(m)
        if check_split(split) or len(split.ham_cycles) != (m - 5) // 2:
            bad.append(m)
    for m in range(8, 41, 2):
        for use_cache in (False, True):
            split = decompose_k_even(m, use_cache=use_cache)
            if check_split(split) or len(split.ham_cycles) != (m - 4) // 2:
                bad.append((m, use_cache))
    dt = time.perf_counter() - start
    ok = not bad and dt < 120
    report(6, "K_m splits, odd m = 7..49 and even m = 8..40 (search and cache)", ok,
           f"{len(bad)} failures, {dt:.1f}s")
    assert ok


def test_criterion_7_oracle(report):
    start = time.perf_counter()
    r33 = oracle_search(6, [3, 3])
    r24 = oracle_search(6, [2, 4])
    r22 = oracle_search(4, [2, 2])
    found_ok = all(isinstance(r, Found)
                   and verify_factorization(r.factors, complete_symmetric(n), L).passed
                   for r, n, L in ((r24, 6, [2, 4]), (r22, 4, [2, 2])))
    dt = time.perf_counter() - start
    ok = isinstance(r33, ExhaustedNone) and found_ok and dt < 600
    report(7, "oracle: (3,3) none, (2,4) and (2,2) found", ok,
           f"(3,3) -> {type(r33).__name__} after {r33.nodes} nodes, "
           f"(2,4) -> {type(r24).__name__}, (2,2) -> {type(r22).__name__}, {dt:.2f}s")
    assert ok


def test_criterion_8_property_suites(report):
    here = Path(__file__).parent
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider",
                           str(here / "test_properties.py")],
                          capture_output=True, text=True, cwd=here.parent)
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr[-200:]
    ok = proc.returncode == 0
    report(8, "property suites standalone", ok, tail)
    assert ok
