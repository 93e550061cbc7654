"""Information measures over finite distributions, the entropy-extremal
construction under a divergence budget, and mechanical bound verification."""

from .errors import (
    ConvergenceFailureError,
    DimensionMismatchError,
    DomainError,
    InvalidDistributionError,
    NotComputableExactlyError,
    NotPositiveSemidefiniteError,
    PreconditionViolatedError,
    TooLargeForExhaustiveError,
)
from .extremal import (
    BoundPair,
    ExtremalParams,
    ExtremalProfile,
    StreamStats,
    bound_pair,
    build_profile,
    cyclic_ensemble,
    rel_entropy_lower_bound,
    rel_entropy_upper_bound,
    solve_cumulative,
    stream_stats,
)
from .measures import (
    Distribution,
    Ensemble,
    Event,
    divergence_exact,
    divergence_information,
    divergence_uniform,
    ensemble_average,
    entropy,
    holevo_information,
    majorizes,
    probability_of,
    relative_entropy,
    sort_descending,
    uniform,
)
from .quantum import (
    DensityMatrix,
    QuantumEnsemble,
    check_quantum_holevo_bound,
    conjugated_cyclic_qensemble,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    q_divergence_mixed_lb,
    q_relative_entropy_mixed,
    spectrum_distribution,
)
from .reports import BoundReport
from .verify import (
    QscQuery,
    SweepRow,
    TradeoffBounds,
    check_extremal_distribution,
    check_extremal_ensemble,
    check_holevo_bound,
    check_majorization_extremality,
    qsc_min_binding,
    random_uniform_average_ensemble,
    sweep,
)

__all__ = [
    "BoundPair",
    "BoundReport",
    "ConvergenceFailureError",
    "DensityMatrix",
    "DimensionMismatchError",
    "Distribution",
    "DomainError",
    "Ensemble",
    "Event",
    "ExtremalParams",
    "ExtremalProfile",
    "InvalidDistributionError",
    "NotComputableExactlyError",
    "NotPositiveSemidefiniteError",
    "PreconditionViolatedError",
    "QscQuery",
    "QuantumEnsemble",
    "StreamStats",
    "SweepRow",
    "TooLargeForExhaustiveError",
    "TradeoffBounds",
    "bound_pair",
    "build_profile",
    "check_extremal_distribution",
    "check_extremal_ensemble",
    "check_holevo_bound",
    "check_majorization_extremality",
    "check_quantum_holevo_bound",
    "conjugated_cyclic_qensemble",
    "cyclic_ensemble",
    "divergence_exact",
    "divergence_information",
    "divergence_uniform",
    "ensemble_average",
    "entropy",
    "hermitian_eigensystem",
    "hermitian_eigenvalues",
    "holevo_information",
    "majorizes",
    "probability_of",
    "q_divergence_mixed_lb",
    "q_relative_entropy_mixed",
    "qsc_min_binding",
    "random_uniform_average_ensemble",
    "rel_entropy_lower_bound",
    "rel_entropy_upper_bound",
    "relative_entropy",
    "solve_cumulative",
    "sort_descending",
    "spectrum_distribution",
    "stream_stats",
    "sweep",
    "uniform",
]

__version__ = "0.1.0"
