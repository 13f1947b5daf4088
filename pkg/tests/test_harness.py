from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hurwitz_tnn import (
    EdreiSpec,
    LaurentWindow,
    SFunctionSpec,
    ZeroCoefficient,
    check_tnn,
    hurwitz_section,
    ratio_classify,
    toeplitz_section,
)
from hurwitz_tnn.harness import (
    FORWARD,
    REVERSE,
    STRUCTURAL_SUITES,
    ScenarioConfig,
    VerificationReport,
    check_degenerate,
    check_gap_lemma,
    check_proportionality,
    check_ratio_chain,
    exponential_mismatch_probe,
    gen_interlaced_pair,
    gen_violating_pair,
    geometric_pair,
    interlaced_from_draws,
    pair_windows,
    polynomial_window,
    section_layout,
    termination_coupled,
    termination_witness,
    verify_forward,
    verify_reverse,
)
from hurwitz_tnn.sfunc import MEROMORPHIC, NotSForm
from hurwitz_tnn.tnn import ALL_NONNEGATIVE, det_exact

seeds = st.integers(0, 2**63)


def poly(*coeffs, lo=0):
    return LaurentWindow.polynomial(coeffs, lo)


class TestConfig:
    @pytest.mark.parametrize("kwargs", [
        {"trials": 0}, {"section_size": 6, "max_minor_order": 4}, {"n_zeros": 0},
        {"value_range": (2, 1)}, {"min_ratio": F(1, 2)},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            ScenarioConfig(**kwargs)

    def test_report_invariant(self):
        with pytest.raises(ValueError):
            VerificationReport(FORWARD, 2, 3)

    def test_for_trial_is_pure(self):
        cfg = ScenarioConfig(seed=11)
        assert cfg.for_trial(4) == cfg.for_trial(4)
        assert cfg.for_trial(4).seed != cfg.for_trial(5).seed


class TestGenerators:
    def test_smallest_case(self):
        p, q = interlaced_from_draws([1, 2])
        assert p.zeros_pos == (2,) and q.zeros_pos == (1,)

    def test_two_zeros(self):
        p, q = interlaced_from_draws([1, 2, 3, 4])
        assert q.zeros_pos == (1, 3) and p.zeros_pos == (2, 4)
        assert ratio_classify(p, q) == SFunctionSpec(MEROMORPHIC, betas_pos=[1, 3], alphas_pos=[2, 4])

    def test_shared_pole(self):
        g = EdreiSpec(poles_pos=[10])
        p, q = interlaced_from_draws([1, 2, 3, 4], g=g)
        assert ratio_classify(p, q) == ratio_classify(*interlaced_from_draws([1, 2, 3, 4]))
        rows, cols, (lo, hi) = section_layout(p, q, 8)
        pw, qw = pair_windows(p, q, lo, hi)
        assert check_tnn(hurwitz_section(pw, qw, rows, cols), 4).status == ALL_NONNEGATIVE

    @given(seeds, st.integers(1, 3))
    @settings(max_examples=100)
    def test_interlaced_ratio_is_s_function(self, seed, n):
        p, q = gen_interlaced_pair(ScenarioConfig(seed=seed, n_zeros=n))
        assert not isinstance(ratio_classify(p, q), NotSForm)

    @given(seeds, st.integers(1, 3))
    @settings(max_examples=100)
    def test_violating_ratio_is_not(self, seed, n):
        p, q, _ = gen_violating_pair(ScenarioConfig(seed=seed, n_zeros=n))
        assert isinstance(ratio_classify(p, q), NotSForm)

    def test_deterministic(self):
        cfg = ScenarioConfig(seed=99)
        assert gen_interlaced_pair(cfg) == gen_interlaced_pair(cfg)
        assert gen_violating_pair(cfg) == gen_violating_pair(cfg)

    def test_generators_non_degenerate(self):
        for i in range(30):
            p, q = gen_interlaced_pair(ScenarioConfig(seed=i, g_factor=False))
            pw = polynomial_window(p)
            assert any(pw[k] ** 2 != pw[k - 1] * pw[k + 1] for k in range(pw.lo, pw.hi + 1))

    def test_polynomial_window_rejects_poles(self):
        with pytest.raises(ValueError):
            polynomial_window(EdreiSpec(poles_pos=[2]))


class TestSuites:
    def test_forward_small(self):
        report = verify_forward(ScenarioConfig(seed=5, trials=6, section_size=8))
        assert report.direction == FORWARD and report.all_passed

    def test_reverse_small(self):
        report = verify_reverse(ScenarioConfig(seed=5, trials=6))
        assert report.direction == REVERSE and report.trials_passed == 6

    def test_workers_do_not_change_result(self):
        cfg = ScenarioConfig(seed=2, trials=4, section_size=8)
        assert verify_forward(cfg, workers=2) == verify_forward(cfg, workers=1)

    def test_degenerate_trial(self):
        p = EdreiSpec(zeros_pos=[2, 3])
        pw = polynomial_window(p)
        M = hurwitz_section(pw, pw, range(1, 9), range(-2, 6))
        assert check_tnn(M, 4).status == ALL_NONNEGATIVE

    def test_exponential_mismatch_probe(self):
        w = exponential_mismatch_probe()
        assert w is not None and w.value < 0

    @pytest.mark.parametrize("name", sorted(STRUCTURAL_SUITES))
    def test_structural_small(self, name):
        assert STRUCTURAL_SUITES[name](3, 5).all_passed


class TestGap:
    def test_contiguous(self):
        assert check_gap_lemma(poly(1, 1, 1)) is None

    def test_gap(self):
        w = check_gap_lemma(poly(1, 0, 1))
        assert w.gap_index == 1
        T = toeplitz_section(poly(1, 0, 1), [1, 2], [2, 3])
        assert T.rows() == [[0, 1], [1, 0]] and det_exact(T) == -1

    def test_zero(self):
        assert check_gap_lemma(LaurentWindow.zero()) is None


class TestRatioChain:
    def test_infinite_convention(self):
        skipped = []
        assert check_ratio_chain(poly(1, F(1, 2)), poly(1, 1), [1], skipped=skipped) is None
        assert skipped == []

    def test_geometric_tight(self):
        p, q = geometric_pair(1, 1, 1, -5, 5)
        assert check_ratio_chain(p, q, range(-3, 4)) is None

    def test_perturbed(self):
        p, q = geometric_pair(1, 1, 1, -5, 5)
        bumped = LaurentWindow(q.lo, q.hi, tuple(c * (2 if n == 1 else 1) for n, c in q.items()))
        w = check_ratio_chain(p, bumped, range(-3, 4))
        assert w is not None

    def test_zero_over_zero(self):
        skipped = []
        assert check_ratio_chain(poly(1), poly(1), [3], skipped=skipped) is None
        assert skipped == [3, 3, 3]
        with pytest.raises(ZeroCoefficient):
            check_ratio_chain(poly(1), poly(1), [3], strict=True)


class TestDegenerate:
    def test_ones(self):
        p, q = geometric_pair(1, 1, 1, -8, 8)
        assert check_degenerate(p, q, 6)

    def test_powers_of_two(self):
        p, q = geometric_pair(1, 2, 3, -8, 8)
        assert p[3] == 8 and q[3] == 24
        assert check_degenerate(p, q, 6)

    def test_non_geometric(self):
        assert not check_degenerate(poly(1, 2, 1, lo=-1), poly(1), 4)


class TestTermination:
    def test_coupled(self):
        assert termination_coupled(poly(1, F(1, 2)), poly(1, 1))
        assert termination_witness(poly(1, F(1, 2)), poly(1, 1)) is None

    @pytest.mark.parametrize("p,q", [
        (poly(1, 1), poly(1, 1, lo=2)),
        (poly(1, 1, lo=2), poly(1, 1)),
        (poly(1, 1, 1), poly(1)),
        (poly(1, 1), poly(1, lo=3)),
    ])
    def test_broken_cases(self, p, q):
        assert not termination_coupled(p, q)
        w = termination_witness(p, q)
        assert w.order == 2 and w.value < 0
        assert det_exact(hurwitz_section(p, q, w.rows, w.cols)) == w.value


class TestProportionality:
    def test_multiple(self):
        p = poly(1, 3, 2)
        assert check_proportionality(p, poly(2, 6, 4))

    def test_broken(self):
        # a_0 b_1 = a_1 b_0 below the top degree, but b is no multiple of a
        assert not check_proportionality(poly(1, 3, 2), poly(1, 3, 5))
