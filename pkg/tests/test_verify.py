"""Checkers, generators, sweeps, and the trade-off calculator."""

import math

import numpy as np
import pytest

from divinfo.errors import PreconditionViolatedError
from divinfo.extremal import cyclic_ensemble
from divinfo.measures import Distribution, Ensemble, majorizes, uniform
from divinfo.reports import BoundReport
from divinfo.verify import (
    QscQuery,
    SWEEP_CSV_HEADER,
    TradeoffBounds,
    check_extremal_distribution,
    check_extremal_ensemble,
    check_holevo_bound,
    check_majorization_extremality,
    qsc_min_binding,
    random_uniform_average_ensemble,
    sweep,
)


class TestBoundReport:
    def test_pass_is_recomputable(self):
        for lhs, rhs, tol in ((1.0, 2.0, 0.0), (2.0, 1.0, 0.5), (1.0, 1.0, 1e-9)):
            r = BoundReport.compare("x", lhs, rhs, tol)
            assert r.passed == (r.lhs <= r.rhs + r.tol)
            assert r.slack == r.rhs - r.lhs

    def test_to_dict(self):
        d = BoundReport.compare("x", 1.0, 2.0, 0.1, flags=("f",)).to_dict()
        assert d["pass"] is True
        assert d["regime_flags"] == ["f"]


class TestExtremalDistributionCheck:
    def test_64_1_passes(self):
        reports = check_extremal_distribution(64, 1.0)
        assert [r.name for r in reports] == [
            "divergence-budget",
            "rel-entropy-lower",
            "rel-entropy-upper",
            "coordinate-sandwich",
        ]
        assert all(r.passed for r in reports)
        assert reports[0].lhs <= 1e-12  # |D - k| is tiny, not merely within tol

    def test_1024_half_upper_bound_value(self):
        reports = check_extremal_distribution(1024, 0.5)
        upper = next(r for r in reports if r.name == "rel-entropy-upper")
        assert upper.rhs == pytest.approx(1.9451858789480825, abs=1e-6)
        assert all(r.passed for r in reports)

    def test_out_of_regime_rejected(self):
        with pytest.raises(PreconditionViolatedError):
            check_extremal_distribution(4, 1.0)

    def test_tolerance_recorded(self):
        reports = check_extremal_distribution(64, 1.0, tol=1e-6)
        assert all(r.tol == 1e-6 for r in reports)


class TestExtremalEnsembleCheck:
    @pytest.mark.parametrize("n,k", [(64, 1.0), (256, 2.0), (32, 0.5)])
    def test_passes(self, n, k):
        reports = check_extremal_ensemble(n, k)
        assert all(r.passed for r in reports)

    def test_out_of_regime_rejected(self):
        with pytest.raises(PreconditionViolatedError):
            check_extremal_ensemble(4, 1.0)

    def test_component_cap(self):
        with pytest.raises(PreconditionViolatedError):
            check_extremal_ensemble(8192, 1.0)


class TestHolevoBoundCheck:
    def test_cyclic_example(self):
        report = check_holevo_bound(cyclic_ensemble(Distribution([0.7, 0.2, 0.1])))
        assert report.lhs == pytest.approx(0.42818285127411676, abs=1e-6)
        assert report.rhs == pytest.approx(17.655722954805746, abs=1e-6)
        assert report.rhs > 16.0
        assert report.passed

    def test_all_uniform_components(self):
        ens = Ensemble(uniform(3), [uniform(4)] * 3)
        report = check_holevo_bound(ens)
        assert report.passed
        assert report.rhs >= 16.0

    def test_profile_ensemble_frozen(self):
        from divinfo.extremal import ExtremalParams, build_profile

        prof = build_profile(ExtremalParams(1024, 2.0))
        report = check_holevo_bound(cyclic_ensemble(prof.dist))
        # K = 2: rhs = 2*(2 ln 10 - ln 2 + 1) + 16
        assert report.rhs == pytest.approx(
            2 * (2 * math.log(10) - math.log(2) + 1) + 16, abs=1e-6
        )
        assert report.passed

    def test_small_support_rejected(self):
        ens = Ensemble([0.5, 0.5], [Distribution([1, 0]), Distribution([0, 1])])
        with pytest.raises(PreconditionViolatedError):
            check_holevo_bound(ens)

    def test_non_uniform_average_rejected(self):
        ens = Ensemble([1.0], [Distribution([0.7, 0.2, 0.1])])
        with pytest.raises(PreconditionViolatedError):
            check_holevo_bound(ens)


class TestMajorizationCheck:
    def test_worked_example(self):
        reports = check_majorization_extremality(Distribution([0.7, 0.2, 0.1]))
        assert all(r.passed for r in reports)
        dominance = next(r for r in reports if r.name == "rel-entropy-dominated")
        assert dominance.lhs == pytest.approx(0.42818285127411676, abs=1e-6)
        assert dominance.rhs == pytest.approx(0.7036716014904637, abs=1e-6)

    def test_worked_example_profile_shape(self):
        # the profile matched to this budget is (0.7, 0.3, 0)
        from divinfo.extremal import ExtremalParams, build_profile
        from divinfo.measures import divergence_uniform

        budget = divergence_uniform(Distribution([0.7, 0.2, 0.1]))
        prof = build_profile(ExtremalParams(3, budget))
        assert prof.dist.p == pytest.approx([0.7, 0.3, 0.0], abs=1e-12)
        assert majorizes(prof.dist, Distribution([0.7, 0.2, 0.1]))

    def test_uniform_trivial_pass(self):
        reports = check_majorization_extremality(uniform(6))
        assert all(r.passed for r in reports)
        assert all("uniform-limit" in r.regime_flags for r in reports)

    def test_point_mass_rejected(self):
        with pytest.raises(PreconditionViolatedError):
            check_majorization_extremality(Distribution([1, 0, 0]))

    def test_random_sample(self):
        rng = np.random.default_rng(51)
        for _ in range(25):
            n = int(rng.integers(2, 200))
            dist = Distribution(rng.exponential(1.0, n), normalize=True)
            assert all(r.passed for r in check_majorization_extremality(dist))


class TestRandomEnsembles:
    def test_cyclic_average_uniform(self):
        ens = random_uniform_average_ensemble(12, 7, "cyclic")
        avg = ens.weights.p @ ens.matrix
        assert float(np.max(np.abs(avg - 1 / 12))) <= 1e-12

    def test_complement_pair(self):
        ens = random_uniform_average_ensemble(9, 3, "complement-pair")
        assert ens.m == 2
        assert float(ens.matrix.max()) <= 2.0 / 9
        avg = ens.weights.p @ ens.matrix
        assert float(np.max(np.abs(avg - 1 / 9))) <= 1e-12

    def test_seed_determinism(self):
        a = random_uniform_average_ensemble(8, 42, "cyclic")
        b = random_uniform_average_ensemble(8, 42, "cyclic")
        assert np.array_equal(a.matrix, b.matrix)

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            random_uniform_average_ensemble(8, 0, "other")


class TestSweep:
    def test_reference_row(self):
        row = sweep([64], [1.0])[0]
        assert row.divergence == pytest.approx(1.0, abs=1e-9)
        assert row.s1 == pytest.approx(0.25, abs=1e-12)
        assert row.crossover == 32
        assert row.theorem_regime

    def test_skip_row_flagged(self):
        row = sweep([4], [0.25])[0]  # n*k = 1 <= 2
        assert math.isnan(row.divergence)
        assert math.isnan(row.theta_ratio)
        assert row.crossover == 0
        assert not row.theorem_regime

    def test_grid_order_and_determinism(self):
        a = sweep([64, 256], [0.5, 1.0])
        b = sweep([64, 256], [0.5, 1.0])
        assert a == b
        assert [(r.n, r.k) for r in a] == [(64, 0.5), (64, 1.0), (256, 0.5), (256, 1.0)]

    def test_sandwich_holds_in_regime(self):
        for row in sweep([32, 1024, 65536], [0.5, 2.0]):
            if row.theorem_regime:
                assert row.f_lower - 1e-9 <= row.rel_entropy <= row.f_upper + 1e-9

    def test_header_is_pinned(self):
        assert SWEEP_CSV_HEADER == (
            "n,k,s1,crossover,divergence,rel_entropy,"
            "f_lower,f_upper,theta_ratio,theorem_regime"
        )


class TestTradeoffCalculator:
    def test_frozen_values(self):
        b = qsc_min_binding(QscQuery(100, 10))
        assert b.asymptotic == pytest.approx(90.0, abs=1e-3)
        assert b.divergence == pytest.approx(47.4670016771568, abs=1e-3)
        assert b.holevo == pytest.approx(45.287187078897965, abs=1e-3)

    def test_zero_concealment(self):
        b = qsc_min_binding(QscQuery(100, 0))
        assert b.asymptotic == 100.0
        assert b.divergence == 76.0
        assert b.holevo == pytest.approx(100 - 8 * math.sqrt(2) - 17, abs=1e-3)

    def test_divergence_zero_point(self):
        assert qsc_min_binding(QscQuery(24, 0)).divergence == 0.0

    def test_ordering_on_grid(self):
        for b in np.linspace(0.0, 50.0, 100):
            tri = qsc_min_binding(QscQuery(100.0, float(b)))
            assert isinstance(tri, TradeoffBounds)
            assert tri.holevo <= tri.divergence <= tri.asymptotic

    def test_query_validation(self):
        with pytest.raises(ValueError):
            QscQuery(0.0, 1.0)
        with pytest.raises(ValueError):
            QscQuery(10.0, -1.0)
