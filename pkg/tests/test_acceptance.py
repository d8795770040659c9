"""The thirteen acceptance criteria, one test each.

Every test records a single ``criterion N: PASS|FAIL ...`` line; the lines are
printed as they are produced and again in the terminal summary (see
conftest.py). Run this file as a script to get just the lines.
"""

import random
import sys

import pytest

from plumb import linalg
from plumb.coxeter import bicolored_coxeter, classify_spectrum
from plumb.decompose import case5_tree
from plumb.forms import example1_form, plumb_band, plumb_trefoil, symmetrized_form
from plumb.polynomials import Poly, circle_root_count
from plumb.sweeps import (
    optimal_family_check,
    random_theorem_A,
    spiral_theorem_A,
    sweep_slalom,
    sweep_spiral,
    sweep_trees,
)
from plumb.trees import canonical_code, enumerate_free_trees, forest_levels, random_tree

from oracles import (
    numeric_circle_count,
    prufer_classes,
    random_reciprocal,
    sign_count_inertia,
    sorted_degree_classes,
)

RESULTS: list[str] = []


def record(number: int, ok: bool, detail: str):
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def _fails(report) -> int:
    return len(report.failures)


def test_criterion_01_two_thirds_bound():
    report = sweep_trees(14, ["thm1"])
    record(1, report.passed,
           f"sigma >= 2n/3 for {len(report.records)} free trees n <= 14, "
           f"{_fails(report)} failures, min ratio {report.summary['min_sigma_over_b1']['ratio']}")


def test_criterion_02_decomposition_certificates():
    report = sweep_trees(12, ["cert"])
    record(2, report.passed,
           f"certified bound <= sigma and >= 2n/3 for {len(report.records)} trees n <= 12, "
           f"{_fails(report)} failures")


def test_criterion_03_small_trees():
    report = sweep_trees(5, ["small5"])
    fours = sum(1 for r in report.records if r["sigma"] == 4 and r["b1"] == 5)
    record(3, report.passed,
           f"sigma in {{n, 4}} for all {len(report.records)} trees n <= 5 ({fours} with sigma 4 < n)")


def test_criterion_04_optimal_family():
    t, _ = case5_tree()
    base = (symmetrized_form(t).signature, t.vertex_count)
    report = optimal_family_check(10, random_bases=50, seed=0)
    ok = base == (4, 6) and report.passed
    record(4, ok, f"case-5 tree (sigma, b1) = {base}; chains m <= 10 and 50 random gluings, "
                  f"{_fails(report)} failures")


def test_criterion_05_forest_spectra():
    total = bad = 0
    for level in forest_levels(12):
        for f in level:
            spec = classify_spectrum(bicolored_coxeter(f))
            total += 1
            n = f.vertex_count
            if spec.other_count != 0 or 3 * spec.circle_count < 2 * n:
                bad += 1
    record(5, bad == 0, f"{total} forests n <= 12: other_count = 0 and circle >= 2n/3, {bad} failures")


def test_criterion_06_monodromy():
    report = sweep_trees(12, ["monodromy"])
    record(6, report.passed,
           f"Coxeter char poly at -t equals Delta up to +-t^k for {len(report.records)} trees n <= 12, "
           f"{_fails(report)} failures")


def test_criterion_07_spiral_family():
    report = sweep_spiral(100, reduction_max_n=50)
    record(7, report.passed,
           f"sigma = 2 and det sign (-1)^(n+1) for n <= 100; reduction pattern and det < 0 for n <= 50, "
           f"{_fails(report)} failures")


def test_criterion_08_example_matrix():
    sigma = example1_form().signature
    record(8, sigma == 0, f"signature of the 4x4 example matrix = {sigma}")


def test_criterion_09_bordering():
    rng = random.Random(20240)
    band_bad = trefoil_bad = 0
    trials = 1000
    for _ in range(trials):
        s = symmetrized_form(random_tree(rng.randint(1, 9), rng))
        c = [rng.randint(-3, 3) for _ in range(s.dimension)]
        if abs(plumb_band(s, c).signature - s.signature) > 1:
            band_bad += 1
        c = [rng.randint(-3, 3) for _ in range(s.dimension)]
        if plumb_trefoil(s, c).signature < s.signature:
            trefoil_bad += 1
    record(9, band_bad == 0 and trefoil_bad == 0,
           f"{trials} band borderings ({band_bad} with |change| > 1), "
           f"{trials} trefoil borderings ({trefoil_bad} lowering sigma)")


def test_criterion_10_circle_zeros_bound():
    trees = sweep_trees(12, ["thmA"])
    spirals = spiral_theorem_A(30)
    randoms = random_theorem_A(200, seed=0)
    ok = trees.passed and spirals.passed and randoms.passed
    record(10, ok,
           f"|sigma| <= circle zeros of Delta: {len(trees.records)} trees, 30 spiral lifts, "
           f"200 random plumbings ({randoms.summary['vacuous']} with Delta = 0), "
           f"{_fails(trees) + _fails(spirals) + _fails(randoms)} failures")


def test_criterion_11_jumps_and_nullities():
    report = sweep_trees(10, ["propD", "lemmaB"])
    gap = report.summary["trees_with_order_above_nullity"]
    record(11, report.passed,
           f"jumps <= order, nullity <= order, SNF product = Delta with divisibility chain for "
           f"{len(report.records)} trees n <= 10, {_fails(report)} failures; "
           f"{gap} trees with order > nullity somewhere")


def test_criterion_12_slalom_bound():
    report = sweep_slalom(8)
    record(12, report.passed,
           f"sigma >= 3b1/4 for {len(report.records)} slalom trees (planted n <= 8, b1 <= "
           f"{report.summary['largest_b1']}), min ratio {report.summary['min_sigma_over_b1']['ratio']}, "
           f"{_fails(report)} failures")


def test_criterion_13_oracles():
    problems = []
    for n in range(1, 11):
        codes = {canonical_code(t) for t in enumerate_free_trees(n)}
        oracle = prufer_classes(n) if n <= 7 else sorted_degree_classes(n)
        if codes != oracle:
            problems.append(f"tree count n={n}")
    rng = random.Random(13)
    for _ in range(100):
        m = [[0] * 6 for _ in range(6)]
        for i in range(6):
            for j in range(i, 6):
                m[i][j] = m[j][i] = rng.randint(-5, 5)
        if linalg.inertia(m) != sign_count_inertia(m):
            problems.append(f"inertia {m}")
    checked = skipped = 0
    while checked < 100:
        cs = random_reciprocal(rng)
        expected = numeric_circle_count(cs)
        if expected is None:
            skipped += 1
            continue
        if circle_root_count(Poly(cs)) != expected:
            problems.append(f"circle count {cs}")
        checked += 1
    record(13, not problems,
           f"free tree classes n <= 10 match Pruefer oracle; 100 inertias match sign-count oracle; "
           f"100 circle counts match numeric oracle ({skipped} grey-zone draws skipped); "
           f"{len(problems)} mismatches")


if __name__ == "__main__":
    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)

