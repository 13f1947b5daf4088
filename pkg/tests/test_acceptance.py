"""Acceptance criteria, one test each, at their stated tolerances.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import io
import random
import time
from fractions import Fraction as F
from math import comb

import pytest

from hurwitz_tnn import (
    LaurentWindow,
    check_tnn,
    det_exact,
    evaluate_exact,
    find_negative_minor,
    partial_fractions,
    validate_interlacing,
)
from hurwitz_tnn.cli import run
from hurwitz_tnn.harness import (
    STRUCTURAL_SUITES,
    ScenarioConfig,
    gen_sfunction_spec,
    reverse_budget,
    verify_forward,
    verify_reverse,
)
from hurwitz_tnn.matrices import MatrixSection
from hurwitz_tnn.serialize import dumps
from hurwitz_tnn.tnn import MinorWitness, count_minors
from hurwitz_tnn.transforms import cauchy_binet_check

from oracles import cofactor_det

MASTER = 20240601


@pytest.mark.criterion(1, "forward suite: 50 interlaced pairs, 12x12 sections, order 4, all TNN, < 60 s")
def test_forward_suite():
    cfg = ScenarioConfig(seed=MASTER, n_zeros=3, section_size=12, max_minor_order=4, trials=50)
    start = time.perf_counter()
    report = verify_forward(cfg)
    elapsed = time.perf_counter() - start
    print(f"forward: {report.trials_passed}/{report.trials_run} in {elapsed:.1f} s")
    assert report.trials_run == 50
    assert report.trials_passed == 50, report.failures
    assert elapsed < 60


@pytest.mark.criterion(2, "reverse suite: >= 24/25 witnesses; canonical witness rows {1,2} cols {1,2} value -1/2")
def test_reverse_suite():
    cfg = ScenarioConfig(seed=MASTER, n_zeros=3, section_size=12, max_minor_order=4, trials=25)
    report = verify_reverse(cfg)
    print(f"reverse: {report.trials_passed}/{report.trials_run}")
    assert report.trials_passed >= 24
    p = LaurentWindow.polynomial([1, 1])
    q = LaurentWindow.polynomial([1, F(1, 2)])
    witness = find_negative_minor(p, q, reverse_budget(cfg))
    assert witness == MinorWitness((1, 2), (1, 2), F(-1, 2))


def _random_window(rng):
    coeffs = [F(rng.randint(0, 9), rng.randint(1, 5)) for _ in range(rng.randint(1, 6))]
    return LaurentWindow.polynomial(coeffs, rng.randint(-3, 3))


@pytest.mark.criterion(3, "Cauchy-Binet identity exact for (A,B) in {0..3}^2 x 10 window pairs at size 6")
def test_cauchy_binet_grid():
    rng = random.Random(MASTER)
    pairs = [(_random_window(rng), _random_window(rng)) for _ in range(10)]
    results = [cauchy_binet_check(A, B, p, q, 6)
               for A in range(4) for B in range(4) for p, q in pairs]
    assert len(results) == 160
    assert all(results)


@pytest.mark.criterion(4, "100 valid S-function specs: residues > 0, partial fractions = product at 20 points")
def test_residue_positivity():
    rng = random.Random(MASTER)
    for i in range(100):
        spec = gen_sfunction_spec(MASTER + i)
        assert validate_interlacing(spec) is None
        pf = partial_fractions(spec)
        assert all(A > 0 for _, A in pf.terms), (i, spec)
        for _ in range(20):
            z = F(rng.randint(1, 400), rng.randint(1, 40))
            assert pf.evaluate(z) == evaluate_exact(spec, z), (i, spec, z)


@pytest.mark.criterion(5, "structural suites: gap, degenerate, ratio chain, symmetry, pole removal, 25 each")
def test_structural_suites():
    required = {"gap_lemma", "degenerate", "ratio_chain", "reversal_shift", "pole_removal"}
    assert required <= set(STRUCTURAL_SUITES)
    for name, suite in sorted(STRUCTURAL_SUITES.items()):
        report = suite(MASTER, 25)
        print(f"{name}: {report.trials_passed}/{report.trials_run}")
        assert report.trials_run == 25
        assert report.failures == (), name


@pytest.mark.criterion(6, "det_exact = cofactor on 200 matrices up to 4x4; minor counts match closed form")
def test_oracle_cross_checks():
    rng = random.Random(MASTER)
    for _ in range(200):
        n = rng.randint(1, 4)
        rows = [[F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)] for _ in range(n)]
        assert det_exact(MatrixSection.from_rows(rows)) == cofactor_det(rows)
    for n in range(1, 7):
        for m in range(1, 7):
            M = MatrixSection.from_rows([[1] * m for _ in range(n)])  # every minor >= 0
            report = check_tnn(M, min(n, m))
            closed = sum(comb(n, k) * comb(m, k) for k in range(1, min(n, m) + 1))
            assert report.minors_evaluated == closed == count_minors(n, m, min(n, m))


def _cli_bytes(argv):
    out = io.StringIO()
    run(argv, out, io.StringIO())
    return out.getvalue().encode()


@pytest.mark.criterion(7, "same master seed gives byte-identical JSON reports")
def test_determinism():
    forward = ScenarioConfig(seed=MASTER, trials=8, section_size=8)
    assert dumps(verify_forward(forward)).encode() == dumps(verify_forward(forward)).encode()
    assert dumps(verify_forward(forward, workers=2)) == dumps(verify_forward(forward, workers=1))
    reverse = ScenarioConfig(seed=MASTER, trials=8)
    assert dumps(verify_reverse(reverse)) == dumps(verify_reverse(reverse, workers=2))
    for name, suite in STRUCTURAL_SUITES.items():
        assert dumps(suite(MASTER, 5)) == dumps(suite(MASTER, 5)), name
    argv = ["verify", "--suite", "all", "--seed", str(MASTER), "--trials", "4", "--section-size", "8"]
    assert _cli_bytes(argv) == _cli_bytes(argv)
    assert _cli_bytes(argv + ["--workers", "2"]) == _cli_bytes(argv)
