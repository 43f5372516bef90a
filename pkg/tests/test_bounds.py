import math

import pytest

from spo_bounds.bounds import (BoundInputs, bound_covering,
                               bound_linear_polyhedral, bound_margin,
                               bound_margin_uniform, bound_natarajan,
                               bound_rademacher, evaluate, evaluate_all,
                               margin_rad_bound)


def inputs(**kwargs):
    base = dict(n=100, delta=0.05)
    base.update(kwargs)
    return BoundInputs(**base)


class TestRademacherBound:
    def test_all_zero(self):
        report = bound_rademacher(inputs(n=50, delta=0.5, omega=0.0, rad=0.0),
                                  "expected")
        assert report.value == 0.0

    def test_delta_one_limit(self):
        # deviation term vanishes as delta -> 1 (expected variant)
        report = bound_rademacher(inputs(delta=1.0 - 1e-12, omega=1.0, rad=0.0),
                                  "expected")
        assert report.terms["deviation"] == pytest.approx(0.0, abs=1e-6)

    def test_expected_variant_anchor(self):
        report = bound_rademacher(inputs(empirical_risk=0.2, omega=1.0, rad=0.1),
                                  "expected")
        direct = 0.2 + 0.2 + math.sqrt(math.log(20.0) / 200.0)
        assert report.value == pytest.approx(direct, abs=1e-15)
        assert report.value == pytest.approx(0.5224, abs=5e-4)

    def test_empirical_variant_constants(self):
        report = bound_rademacher(inputs(empirical_risk=0.0, omega=2.0, rad=0.0),
                                  "empirical")
        assert report.terms["deviation"] == pytest.approx(
            3.0 * 2.0 * math.sqrt(math.log(40.0) / 200.0), abs=1e-15)

    def test_missing_rad_rejected(self):
        with pytest.raises(ValueError, match="missing"):
            bound_rademacher(inputs(omega=1.0))

    def test_bad_variant_rejected(self):
        with pytest.raises(ValueError, match="variant"):
            bound_rademacher(inputs(omega=1.0, rad=0.1), "both")


class TestNatarajanBound:
    def test_anchor_value(self):
        report = bound_natarajan(inputs(omega=1.0, d_N=2, card_S=3))
        direct = (2.0 * math.sqrt(4.0 * math.log(900.0) / 100.0)
                  + math.sqrt(math.log(20.0) / 200.0))
        assert report.value == pytest.approx(direct, abs=1e-15)
        assert report.value == pytest.approx(1.1656, abs=5e-4)

    def test_zero_dimension_leaves_deviation_only(self):
        report = bound_natarajan(inputs(empirical_risk=0.3, omega=1.0, d_N=0,
                                        card_S=3))
        assert report.terms["complexity"] == 0.0
        assert report.value == pytest.approx(
            0.3 + math.sqrt(math.log(20.0) / 200.0))

    def test_zero_omega_is_empirical_risk(self):
        report = bound_natarajan(inputs(empirical_risk=0.25, omega=0.0, d_N=2,
                                        card_S=3))
        assert report.value == 0.25

    def test_log_argument_validated(self):
        with pytest.raises(ValueError, match="card_S"):
            bound_natarajan(BoundInputs(n=1, delta=0.5, omega=1.0, d_N=1, card_S=1))


class TestLinearPolyhedralBound:
    def test_equals_natarajan_with_dp(self):
        a = bound_linear_polyhedral(inputs(omega=1.0, card_S=4, d=2, p=3))
        b = bound_natarajan(inputs(omega=1.0, card_S=4, d_N=6))
        assert a.value == b.value
        assert a.terms == b.terms

    def test_doubling_p_scales_complexity_by_sqrt2(self):
        a = bound_linear_polyhedral(inputs(omega=1.0, card_S=4, d=2, p=3))
        b = bound_linear_polyhedral(inputs(omega=1.0, card_S=4, d=2, p=6))
        assert b.terms["complexity"] == pytest.approx(
            math.sqrt(2.0) * a.terms["complexity"])

    def test_direct_arithmetic(self):
        report = bound_linear_polyhedral(
            BoundInputs(n=100, delta=0.1, omega=1.0, card_S=4, d=2, p=2))
        direct = (2.0 * math.sqrt(2.0 * 4.0 * math.log(1600.0) / 100.0)
                  + math.sqrt(math.log(10.0) / 200.0))
        assert report.value == pytest.approx(direct, abs=1e-15)


class TestCoveringBound:
    def test_zero_cost_radius_kills_remainder(self):
        report = bound_covering(inputs(n=1000, omega=2.0, rho2_C=0.0, rho2_S=1.0,
                                       d=2, p=3))
        assert report.terms["remainder"] == 0.0

    def test_direct_arithmetic(self):
        report = bound_covering(inputs(n=1000, omega=2.0, rho2_C=1.0, rho2_S=1.0,
                                       d=2, p=3))
        root = math.sqrt(2.0 * 3.0 * math.log(2.0 * 1000.0 * 1.0 * 2.0) / 1000.0)
        direct = (4.0 * 2.0 * 2.0 * root
                  + 3.0 * 2.0 * math.sqrt(math.log(40.0) / 2000.0)
                  + 2.0 * (2.0 / 1000.0) * (1.0 + 4.0 * root))
        assert report.value == pytest.approx(direct, abs=1e-15)
        assert report.terms["remainder"] < report.terms["complexity"]

    def test_large_n_scaling(self):
        small = bound_covering(inputs(n=1000, empirical_risk=0.0, omega=2.0,
                                      rho2_C=1.0, rho2_S=1.0, d=2, p=3))
        big = bound_covering(inputs(n=100_000, empirical_risk=0.0, omega=2.0,
                                    rho2_C=1.0, rho2_S=1.0, d=2, p=3))
        ratio = (big.terms["complexity"] / small.terms["complexity"])
        expected = math.sqrt(math.log(400_000.0) / math.log(4000.0)) / 10.0
        assert ratio == pytest.approx(expected, rel=1e-12)

    def test_log_argument_validated(self):
        with pytest.raises(ValueError, match="exceed 1"):
            bound_covering(BoundInputs(n=1, delta=0.5, omega=1.0, rho2_C=1.0,
                                       rho2_S=0.25, d=2, p=1))


class TestMarginBound:
    def test_zero_rad_leaves_deviation_only(self):
        report = bound_margin(inputs(empirical_risk=0.1, omega=1.0, rho2_C=1.0,
                                     mu=2.0, gamma=0.5, rad=0.0), "expected")
        assert report.value == pytest.approx(
            0.1 + math.sqrt(math.log(20.0) / 200.0))

    def test_doubling_gamma_halves_complexity(self):
        a = bound_margin(inputs(omega=1.0, rho2_C=1.0, mu=2.0, gamma=0.5,
                                rad=0.05))
        b = bound_margin(inputs(omega=1.0, rho2_C=1.0, mu=2.0, gamma=1.0,
                                rad=0.05))
        assert a.terms["complexity"] == pytest.approx(2.0 * b.terms["complexity"])

    def test_binary_case_direct_arithmetic(self):
        report = bound_margin(BoundInputs(n=400, delta=0.05, omega=1.0,
                                          rho2_C=1.0, mu=2.0, gamma=0.5,
                                          rad=0.05), "expected")
        direct = (10.0 * math.sqrt(2.0) * 1.0 * 0.05 / (0.5 * 2.0)
                  + math.sqrt(math.log(20.0) / 800.0))
        assert report.value == pytest.approx(direct, abs=1e-15)

    def test_sub_operation_factor(self):
        assert margin_rad_bound(1.0, 0.05, 0.5, 2.0) == pytest.approx(
            5.0 * math.sqrt(2.0) * 0.05)
        report = bound_margin(inputs(omega=1.0, rho2_C=1.0, mu=2.0, gamma=0.5,
                                     rad=0.05))
        assert report.terms["complexity"] == pytest.approx(
            2.0 * margin_rad_bound(1.0, 0.05, 0.5, 2.0))

    def test_requires_positive_gamma_mu(self):
        with pytest.raises(ValueError, match="gamma"):
            inputs(omega=1.0, rho2_C=1.0, mu=2.0, gamma=0.0, rad=0.05)
        with pytest.raises(ValueError, match="missing"):
            bound_margin(inputs(omega=1.0, rho2_C=1.0, gamma=0.5, rad=0.05))


class TestMarginUniformBound:
    def test_gamma_equal_gamma_bar_kills_uniformity(self):
        report = bound_margin_uniform(inputs(omega=1.0, rho2_C=1.0, mu=2.0,
                                             gamma=0.5, gamma_bar=0.5, rad=0.05))
        assert report.terms["uniformity"] == 0.0

    def test_uniform_dominates_fixed(self):
        kwargs = dict(omega=1.0, rho2_C=1.0, mu=2.0, gamma=0.25, rad=0.05)
        for variant in ("expected", "empirical"):
            uni = bound_margin_uniform(inputs(gamma_bar=1.0, **kwargs), variant)
            fix = bound_margin(inputs(**kwargs), variant)
            assert uni.value >= fix.value

    def test_half_gamma_bar_uniformity_value(self):
        report = bound_margin_uniform(BoundInputs(n=400, delta=0.05, omega=1.0,
                                                  rho2_C=1.0, mu=2.0, gamma=0.5,
                                                  gamma_bar=1.0, rad=0.05))
        assert report.terms["uniformity"] == pytest.approx(
            math.sqrt(math.log(2.0) / 400.0))

    def test_empirical_deviation_constant(self):
        report = bound_margin_uniform(inputs(omega=2.0, rho2_C=1.0, mu=2.0,
                                             gamma=0.5, gamma_bar=1.0, rad=0.0),
                                      "empirical")
        assert report.terms["deviation"] == pytest.approx(
            3.0 * 2.0 * math.sqrt(math.log(80.0) / 200.0))

    def test_gamma_above_gamma_bar_rejected(self):
        with pytest.raises(ValueError, match="gamma_bar"):
            bound_margin_uniform(inputs(omega=1.0, rho2_C=1.0, mu=2.0, gamma=1.0,
                                        gamma_bar=0.5, rad=0.05))


class TestReports:
    def test_terms_sum_to_value(self):
        reports = [
            bound_rademacher(inputs(empirical_risk=0.2, omega=1.0, rad=0.1)),
            bound_natarajan(inputs(empirical_risk=0.1, omega=1.5, d_N=3,
                                   card_S=5)),
            bound_covering(inputs(n=500, empirical_risk=0.4, omega=1.0,
                                  rho2_C=0.5, rho2_S=2.0, d=3, p=2)),
            bound_margin_uniform(inputs(empirical_risk=0.05, omega=1.0,
                                        rho2_C=1.0, mu=1.0, gamma=0.1,
                                        gamma_bar=0.4, rad=0.02)),
        ]
        for report in reports:
            assert report.value == pytest.approx(sum(report.terms.values()),
                                                 abs=1e-12)
            assert all(v >= 0.0 for v in report.terms.values())
            assert report.value >= report.terms["empirical_risk"]

    def test_monotone_in_n(self):
        vals = [bound_natarajan(BoundInputs(n=n, delta=0.05, omega=1.0, d_N=3,
                                            card_S=4)).value
                for n in (50, 100, 200, 400, 800)]
        assert all(a >= b for a, b in zip(vals, vals[1:]))

    def test_monotone_in_omega_and_delta(self):
        vals = [bound_natarajan(inputs(omega=w, d_N=3, card_S=4)).value
                for w in (0.5, 1.0, 2.0)]
        assert vals == sorted(vals)
        vals = [bound_natarajan(BoundInputs(n=100, delta=d, omega=1.0, d_N=3,
                                            card_S=4)).value
                for d in (0.2, 0.1, 0.01)]
        assert vals == sorted(vals)

    def test_inputs_echoed(self):
        report = bound_margin(inputs(omega=1.0, rho2_C=1.0, mu=2.0, gamma=0.5,
                                     rad=0.05), "expected")
        assert report.inputs["variant"] == "expected"
        assert report.inputs["gamma"] == 0.5

    def test_evaluate_dispatch(self):
        report = evaluate("covering", inputs(omega=1.0, rho2_C=1.0, rho2_S=1.0,
                                             d=2, p=2))
        assert report.theorem_id == "covering"
        with pytest.raises(ValueError, match="unknown theorem"):
            evaluate("chernoff", inputs(omega=1.0))

    def test_evaluate_all_skips_missing(self):
        reports = evaluate_all(inputs(omega=1.0, rad=0.1))
        ids = {r.theorem_id for r in reports}
        assert ids == {"rademacher"}
        full = evaluate_all(inputs(omega=1.0, rad=0.1, rho2_C=1.0, rho2_S=1.0,
                                   d=2, p=2, card_S=3, d_N=2, mu=1.0, gamma=0.5,
                                   gamma_bar=1.0))
        assert {r.theorem_id for r in full} == {
            "rademacher", "natarajan", "linear_polyhedral", "covering",
            "margin", "margin_uniform"}


class TestInputValidation:
    def test_ranges(self):
        with pytest.raises(ValueError, match="delta"):
            BoundInputs(n=10, delta=0.0)
        with pytest.raises(ValueError, match="n must"):
            BoundInputs(n=0, delta=0.5)
        with pytest.raises(ValueError, match="omega"):
            BoundInputs(n=10, delta=0.5, omega=-1.0)
        with pytest.raises(ValueError, match="mu"):
            BoundInputs(n=10, delta=0.5, mu=0.0)

    def test_round_trip(self):
        original = inputs(omega=1.0, rho2_C=0.5, mu=2.0, gamma=0.1, rad=0.2)
        clone = BoundInputs.from_dict(original.to_dict())
        assert clone == original

    def test_unknown_keys_rejected(self):
        with pytest.raises(ValueError, match="unknown bound inputs"):
            BoundInputs.from_dict({"n": 10, "delta": 0.5, "slack": 1.0})
