"""End-to-end acceptance checks: seeded instance sweeps that exercise every
bound the library claims, at fixed tolerances.

Each criterion function returns a list of :class:`BoundReport`; aggregate
worst-case slacks are reported for sampled criteria so a single report line
certifies the whole sample. ``run_all`` executes the standard battery.
Seeds are fixed so reruns are byte-identical.
"""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from .extremal import (
    ExtremalParams,
    build_profile,
    cyclic_ensemble,
    rel_entropy_lower_bound,
    solve_cumulative,
)
from .measures import (
    Distribution,
    Ensemble,
    divergence_exact,
    divergence_information,
    divergence_uniform,
    ensemble_average,
    holevo_information,
    relative_entropy,
    uniform,
)
from .quantum import (
    DensityMatrix,
    check_quantum_holevo_bound,
    conjugated_cyclic_qensemble,
    hermitian_eigensystem,
    q_divergence_mixed_lb,
    q_relative_entropy_mixed,
)
from .reports import BoundReport
from .verify import (
    QscQuery,
    check_extremal_distribution,
    check_extremal_ensemble,
    check_holevo_bound,
    check_majorization_extremality,
    qsc_min_binding,
    random_uniform_average_ensemble,
    sweep,
)

GRID_N = (32, 64, 256, 1024, 4096, 65536)
GRID_K = (0.25, 0.5, 1.0, 2.0, 4.0, 8.0)


def _tag(report: BoundReport, suffix: str) -> BoundReport:
    return dataclasses.replace(report, name=f"{report.name}[{suffix}]")


def criterion_oracle_equivalence(trials: int = 1000, seed: int = 101):
    """Prefix-based divergence equals exhaustive enumeration on small supports."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(2, 13))
        dist = Distribution(rng.exponential(1.0, n), normalize=True)
        gap = abs(divergence_uniform(dist) - divergence_exact(dist, uniform(n)))
        worst = max(worst, gap)
    return [BoundReport.compare("oracle-equivalence-worst-gap", worst, 0.0, 1e-12)]


def criterion_extremal_distribution_grid():
    """Budget equality, entropy sandwich, and coordinate bounds on the grid."""
    reports = []
    for n in GRID_N:
        for k in GRID_K:
            if not (16.0 / n <= k < math.log2(n)):
                continue
            reports.extend(
                _tag(r, f"n={n},k={k:g}") for r in check_extremal_distribution(n, k)
            )
    return reports


def criterion_extremal_ensemble():
    """Cyclic-ensemble transfer: uniform average and exact value transfer."""
    reports = []
    for n, k in ((64, 1.0), (256, 2.0), (1024, 0.5)):
        suffix = f"n={n},k={k:g}"
        profile = build_profile(ExtremalParams(n, k))
        ens = cyclic_ensemble(profile.dist)
        avg = ensemble_average(ens)
        deviation = float(np.max(np.abs(avg.p - 1.0 / n)))
        div_single = divergence_uniform(profile.dist)
        rel_single = relative_entropy(profile.dist, uniform(n))
        div_ens = divergence_information(ens, strategy="uniform-average")
        chi = holevo_information(ens)
        f_lo = rel_entropy_lower_bound(k, n)
        reports.extend(
            [
                BoundReport.compare(
                    f"ensemble-average-uniform[{suffix}]", deviation, 0.0, 1e-12
                ),
                BoundReport.compare(
                    f"divergence-transfer[{suffix}]", abs(div_ens - div_single), 0.0, 1e-12
                ),
                BoundReport.compare(
                    f"holevo-transfer[{suffix}]", abs(chi - rel_single), 0.0, 1e-12
                ),
                BoundReport.compare(f"holevo-above-lower-bound[{suffix}]", f_lo, chi, 1e-9),
            ]
        )
    return reports


def criterion_theta_trend(k: float = 0.5, n_values=(1024, 4096, 65536)):
    """Desk-scale stand-in for the asymptotic growth claim.

    The upper constant (relative entropy at most 2k log2 log2(n*k)) is
    asserted; the theta ratio itself is reported per grid point, and its
    strict increase across the grid is asserted as stated.
    """
    rows = sweep(n_values, [k])
    reports = []
    for row in rows:
        ceiling = 2.0 * k * math.log2(math.log2(row.n * k))
        reports.append(
            BoundReport.compare(
                f"theta-upper-constant[n={row.n}]", row.rel_entropy, ceiling, 1e-9
            )
        )
    for row in rows:
        # Informational: the ratio is reported, never bounded from below.
        reports.append(
            BoundReport.compare(
                f"theta-ratio[n={row.n}]", row.theta_ratio, math.inf, 0.0
            )
        )
    worst_step = max(
        rows[i].theta_ratio - rows[i + 1].theta_ratio for i in range(len(rows) - 1)
    )
    reports.append(
        BoundReport.compare("theta-strictly-increasing", worst_step, 0.0, 0.0)
    )
    return reports


def criterion_holevo_bound_sampler(trials: int = 500, seed: int = 202):
    """The Holevo/divergence trade-off holds on every sampled ensemble."""
    rng = np.random.default_rng(seed)
    worst = -math.inf
    for t in range(trials):
        n = int(rng.integers(8, 257))
        mode = "cyclic" if t % 2 == 0 else "complement-pair"
        ens = random_uniform_average_ensemble(n, int(rng.integers(0, 2**32)), mode)
        report = check_holevo_bound(ens)
        worst = max(worst, report.lhs - report.rhs)
    return [
        BoundReport.compare(
            f"holevo-tradeoff-worst-of-{trials}", worst, 0.0, 1e-9
        )
    ]


def criterion_majorization_sampler(trials: int = 200, seed: int = 303):
    """The budget-matched profile majorizes every sampled distribution."""
    rng = np.random.default_rng(seed)
    worst_prefix = -math.inf
    worst_rel = -math.inf
    for _ in range(trials):
        n = int(rng.integers(4, 1025))
        dist = Distribution(rng.exponential(1.0, n), normalize=True)
        prefix_rep, rel_rep = check_majorization_extremality(dist)
        worst_prefix = max(worst_prefix, prefix_rep.lhs - prefix_rep.rhs)
        worst_rel = max(worst_rel, rel_rep.lhs - rel_rep.rhs)
    return [
        BoundReport.compare(
            f"majorization-worst-of-{trials}", worst_prefix, 0.0, 1e-12
        ),
        BoundReport.compare(
            f"rel-entropy-dominance-worst-of-{trials}", worst_rel, 0.0, 1e-9
        ),
    ]


def criterion_pair_relations(trials: int = 200, seed: int = 404):
    """D <= chi + 1 and chi <= D*(n-1) on random small ensembles, plus the
    antipodal two-point ensemble where the second relation is tight."""
    rng = np.random.default_rng(seed)
    worst_upper = -math.inf
    worst_scale = -math.inf
    for _ in range(trials):
        n = int(rng.integers(2, 11))
        m = int(rng.integers(1, 7))
        weights = Distribution(rng.exponential(1.0, m), normalize=True)
        comps = [Distribution(rng.exponential(1.0, n), normalize=True) for _ in range(m)]
        ens = Ensemble(weights, comps)
        div = divergence_information(ens, strategy="exhaustive")
        chi = holevo_information(ens)
        worst_upper = max(worst_upper, div - (chi + 1.0))
        worst_scale = max(worst_scale, chi - div * (n - 1))
    tight = Ensemble([0.5, 0.5], [Distribution([1.0, 0.0]), Distribution([0.0, 1.0])])
    tight_div = divergence_information(tight, strategy="exhaustive")
    tight_chi = holevo_information(tight)
    return [
        BoundReport.compare(
            f"divergence-at-most-holevo-plus-one-worst-of-{trials}",
            worst_upper, 0.0, 1e-9,
        ),
        BoundReport.compare(
            f"holevo-at-most-scaled-divergence-worst-of-{trials}",
            worst_scale, 0.0, 1e-9,
        ),
        BoundReport.compare(
            "antipodal-tight-case", abs(tight_chi - tight_div * 1.0), 0.0, 0.0
        ),
    ]


def criterion_quantum(trials: int = 50, seed: int = 505):
    """Conjugated cyclic quantum ensembles: solver residuals, completely
    mixed averages, the trade-off bound, and diagonal-classical agreement."""
    rng = np.random.default_rng(seed)
    worst_residual = 0.0
    worst_average = 0.0
    worst_bound = -math.inf
    worst_diagonal = 0.0
    for _ in range(trials):
        d = int(rng.integers(3, 9))
        dist = Distribution(rng.exponential(1.0, d), normalize=True)
        ensemble = conjugated_cyclic_qensemble(dist, int(rng.integers(0, 2**32)))
        for state in ensemble.states:
            values, vectors = hermitian_eigensystem(state)
            residuals = np.linalg.norm(
                state.matrix @ vectors - vectors * values[np.newaxis, :], axis=0
            )
            worst_residual = max(worst_residual, float(residuals.max()))
        deviation = float(
            np.max(np.abs(ensemble.average - np.eye(d) / d))
        )
        worst_average = max(worst_average, deviation)
        report = check_quantum_holevo_bound(ensemble)
        worst_bound = max(worst_bound, report.lhs - report.rhs)
        diagonal = DensityMatrix(np.diag(dist.p))
        gap = max(
            abs(q_relative_entropy_mixed(diagonal) - relative_entropy(dist, uniform(d))),
            abs(q_divergence_mixed_lb(diagonal) - divergence_uniform(dist)),
        )
        worst_diagonal = max(worst_diagonal, gap)
    return [
        BoundReport.compare(f"eigen-residual-worst-of-{trials}", worst_residual, 0.0, 1e-8),
        BoundReport.compare(f"mixed-average-worst-of-{trials}", worst_average, 0.0, 1e-9),
        BoundReport.compare(f"quantum-tradeoff-worst-of-{trials}", worst_bound, 0.0, 1e-9),
        BoundReport.compare(
            f"diagonal-classical-agreement-worst-of-{trials}", worst_diagonal, 0.0, 1e-12
        ),
    ]


def criterion_solver(pairs: int = 100, grid_points: int = 1000, seed: int = 606):
    """Root-solver identity, strict monotonicity, and midpoint concavity."""
    rng = np.random.default_rng(seed)
    worst_identity = 0.0
    for _ in range(pairs):
        n = int(rng.integers(2, 2**17))
        k = float(rng.uniform(0.05, math.log2(n))) if n > 2 else 0.5
        x = n * 2.0 ** (-k)
        worst_identity = max(worst_identity, abs(solve_cumulative(x, n, k) - 1.0))
    worst_monotone = -math.inf
    worst_concave = -math.inf
    for n, k in ((64, 1.0), (4096, 0.5)):
        xs = np.linspace(0.5, n * 2.0 ** (-k), grid_points)
        roots = []
        prev = None
        for x in xs:
            prev = solve_cumulative(float(x), n, k, guess=prev)
            roots.append(prev)
        roots = np.asarray(roots)
        worst_monotone = max(worst_monotone, float(np.max(roots[:-1] - roots[1:])))
        mid_gap = 0.5 * (roots[:-2] + roots[2:]) - roots[1:-1]
        worst_concave = max(worst_concave, float(np.max(mid_gap)))
    return [
        BoundReport.compare(f"identity-point-worst-of-{pairs}", worst_identity, 0.0, 1e-12),
        BoundReport.compare("strict-monotonicity", worst_monotone, 0.0, 0.0),
        BoundReport.compare("midpoint-concavity", worst_concave, 0.0, 1e-10),
    ]


def criterion_tradeoff_calculator():
    """Frozen calculator values and the ordering of the three bounds."""
    bounds = qsc_min_binding(QscQuery(100.0, 10.0))
    expected = (90.0, 47.4670016771568, 45.287187078897965)
    worst_value = max(
        abs(bounds.asymptotic - expected[0]),
        abs(bounds.divergence - expected[1]),
        abs(bounds.holevo - expected[2]),
    )
    worst_order = -math.inf
    for b in np.linspace(0.0, 50.0, 100):
        tri = qsc_min_binding(QscQuery(100.0, float(b)))
        worst_order = max(
            worst_order, tri.holevo - tri.divergence, tri.divergence - tri.asymptotic
        )
    return [
        BoundReport.compare("calculator-frozen-values", worst_value, 0.0, 1e-3),
        BoundReport.compare("calculator-ordering", worst_order, 0.0, 0.0),
    ]


CRITERIA = (
    ("1-oracle-equivalence", criterion_oracle_equivalence),
    ("2-extremal-distribution-grid", criterion_extremal_distribution_grid),
    ("3-extremal-ensemble", criterion_extremal_ensemble),
    ("4-theta-trend", criterion_theta_trend),
    ("5-holevo-bound-sampler", criterion_holevo_bound_sampler),
    ("6-majorization-sampler", criterion_majorization_sampler),
    ("7-pair-relations", criterion_pair_relations),
    ("8-quantum", criterion_quantum),
    ("9-solver", criterion_solver),
    ("10-tradeoff-calculator", criterion_tradeoff_calculator),
)


def run_all():
    """Run the full battery; returns a list of (criterion id, reports)."""
    return [(cid, fn()) for cid, fn in CRITERIA]
