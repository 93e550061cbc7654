"""Classical information measures on finite probability distributions.

All measures are reported in bits (base-2 logarithms) and follow the usual
conventions: 0 * log 0 contributes 0, and a ratio p/q with p > 0, q = 0
yields +infinity, returned as ``math.inf`` rather than raised.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import (
    DimensionMismatchError,
    InvalidDistributionError,
    NotComputableExactlyError,
    PreconditionViolatedError,
    TooLargeForExhaustiveError,
)

#: Construction-time tolerance on |sum(p) - 1|.
SUM_TOL = 1e-9

#: Per-prefix comparison tolerance used by :func:`majorizes`.
MAJORIZATION_TOL = 1e-12

#: Infinity-norm tolerance for treating an ensemble average as uniform.
UNIFORM_AVERAGE_TOL = 1e-9

#: Largest support size for exhaustive event enumeration (2^24 - 1 events).
EXHAUSTIVE_MAX_N = 24

# Exhaustive enumeration is evaluated in blocks of 2^_BLOCK_BITS events to
# keep peak memory flat for supports above 16 points.
_BLOCK_BITS = 16


def _readonly(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=float)
    out.flags.writeable = False
    return out


class Distribution:
    """A probability vector over the sample space {1, ..., n}.

    Entries must be non-negative and sum to 1 within ``SUM_TOL``. A positive
    vector may be rescaled by passing ``normalize=True``; nothing is ever
    rescaled silently. Instances are immutable.
    """

    __slots__ = ("_p",)

    def __init__(self, p, *, normalize: bool = False):
        arr = np.asarray(p, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise InvalidDistributionError("need a non-empty 1-D probability vector")
        if not np.all(np.isfinite(arr)):
            raise InvalidDistributionError("entries must be finite")
        if np.any(arr < 0.0):
            raise InvalidDistributionError("entries must be non-negative")
        total = float(np.sum(arr))
        if normalize:
            if total <= 0.0:
                raise InvalidDistributionError("cannot normalize a zero vector")
            arr = arr / total
        elif abs(total - 1.0) > SUM_TOL:
            raise InvalidDistributionError(
                f"probabilities sum to {total!r}, not 1 (within {SUM_TOL})"
            )
        self._p = _readonly(arr)

    @property
    def p(self) -> np.ndarray:
        """Read-only probability vector."""
        return self._p

    @property
    def n(self) -> int:
        """Support size."""
        return self._p.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, Distribution):
            return NotImplemented
        return bool(np.array_equal(self._p, other._p))

    def __repr__(self) -> str:
        return f"Distribution({self._p.tolist()!r})"


class Event:
    """A non-empty set of sample points, indexed 1..n as in set notation."""

    __slots__ = ("_members",)

    def __init__(self, members):
        mem = frozenset(int(i) for i in members)
        if not mem:
            raise ValueError("an event must contain at least one sample point")
        if min(mem) < 1:
            raise ValueError("sample points are indexed from 1")
        self._members = mem

    @property
    def members(self) -> frozenset:
        return self._members

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self):
        return iter(sorted(self._members))

    def __repr__(self) -> str:
        return f"Event({sorted(self._members)!r})"


class Ensemble:
    """A weighted finite collection of distributions on one sample space."""

    __slots__ = ("_weights", "_components", "_matrix")

    def __init__(self, weights, components):
        if not isinstance(weights, Distribution):
            weights = Distribution(weights)
        comps = tuple(
            c if isinstance(c, Distribution) else Distribution(c) for c in components
        )
        if len(comps) != weights.n:
            raise DimensionMismatchError(
                f"{weights.n} weights for {len(comps)} components"
            )
        support = comps[0].n
        if any(c.n != support for c in comps):
            raise DimensionMismatchError("components must share one support size")
        self._weights = weights
        self._components = comps
        matrix = np.stack([c.p for c in comps])
        matrix.flags.writeable = False
        self._matrix = matrix

    @property
    def weights(self) -> Distribution:
        return self._weights

    @property
    def components(self) -> tuple:
        return self._components

    @property
    def matrix(self) -> np.ndarray:
        """Component probabilities as a read-only (m, n) array."""
        return self._matrix

    @property
    def m(self) -> int:
        return len(self._components)

    @property
    def n(self) -> int:
        return self._components[0].n

    def __repr__(self) -> str:
        return f"Ensemble(m={self.m}, n={self.n})"


def uniform(n: int) -> Distribution:
    """The uniform distribution on n points."""
    if n < 1:
        raise ValueError("support size must be at least 1")
    return Distribution(np.full(n, 1.0 / n))


def sort_descending(P: Distribution) -> Distribution:
    """Rearrange P so its entries are non-increasing (stable for ties)."""
    order = np.argsort(-P.p, kind="stable")
    return Distribution(P.p[order])


def entropy(P: Distribution) -> float:
    """Shannon entropy -sum p_i log2 p_i in bits."""
    p = P.p[P.p > 0.0]
    return float(-np.sum(p * np.log2(p)) + 0.0)


def relative_entropy(P: Distribution, Q: Distribution) -> float:
    """Relative entropy (KL divergence) sum p_i log2(p_i / q_i) in bits.

    Returns ``math.inf`` when P puts mass where Q has none.
    """
    _check_same_support(P, Q)
    mask = P.p > 0.0
    p = P.p[mask]
    q = Q.p[mask]
    if np.any(q == 0.0):
        return math.inf
    # Difference of logs: immune to overflow when some q_i is subnormal.
    return float(np.sum(p * (np.log2(p) - np.log2(q))))


def probability_of(P: Distribution, E: Event) -> float:
    """Probability P(E) = sum of p_i over the event's members."""
    idx = np.fromiter(E.members, dtype=int)
    if idx.max() > P.n:
        raise ValueError(f"event contains index {idx.max()} beyond support {P.n}")
    return float(np.sum(P.p[idx - 1]))


def _subset_sums(values: np.ndarray) -> np.ndarray:
    """All 2^len(values) subset sums, indexed by bitmask."""
    sums = np.zeros(1)
    for v in values:
        sums = np.concatenate((sums, sums + v))
    return sums


def divergence_exact(P: Distribution, Q: Distribution) -> float:
    """Observational divergence max_E P(E) log2(P(E)/Q(E)) by enumeration.

    Every one of the 2^n - 1 non-empty events is evaluated, so this is the
    ground-truth oracle for any support size up to ``EXHAUSTIVE_MAX_N``.
    Events with P(E) = 0 contribute 0; an event with P(E) > 0, Q(E) = 0
    makes the divergence infinite. The result is never negative: the full
    space always achieves 0.
    """
    _check_same_support(P, Q)
    n = P.n
    if n > EXHAUSTIVE_MAX_N:
        raise TooLargeForExhaustiveError(
            f"support {n} exceeds the exhaustive cap {EXHAUSTIVE_MAX_N}"
        )
    lo = min(n, _BLOCK_BITS)
    low_p = _subset_sums(P.p[:lo])
    low_q = _subset_sums(Q.p[:lo])
    high_p = _subset_sums(P.p[lo:])
    high_q = _subset_sums(Q.p[lo:])
    best = -math.inf
    for hp, hq in zip(high_p, high_q):
        pe = low_p + hp
        qe = low_q + hq
        mask = pe > 0.0
        if not mask.any():
            continue
        # log2(0) = -inf turns escaping mass into an infinite term, as defined.
        with np.errstate(divide="ignore"):
            terms = pe[mask] * (np.log2(pe[mask]) - np.log2(qe[mask]))
        block_best = float(terms.max())
        if block_best > best:
            best = block_best
    return max(best, 0.0)


def _divergence_uniform_rows(mat: np.ndarray) -> np.ndarray:
    """Divergence against uniform for each row of a (m, n) matrix.

    Uses the prefix characterization: only the n sorted-prefix events can
    attain the maximum against the uniform distribution.
    """
    n = mat.shape[1]
    cum = np.cumsum(-np.sort(-mat, axis=1), axis=1)
    ranks = np.arange(1, n + 1, dtype=float)
    terms = cum * np.log2(n * cum / ranks)
    return np.maximum(terms.max(axis=1), 0.0)


def divergence_uniform(P: Distribution) -> float:
    """Observational divergence of P from the uniform distribution.

    Equals :func:`divergence_exact` against ``uniform(n)`` but runs in
    O(n log n): the maximizing event is always a prefix of the sorted
    distribution. The value lies in [0, log2 n].
    """
    return float(_divergence_uniform_rows(P.p[np.newaxis, :])[0])


def majorizes(P: Distribution, Q: Distribution) -> bool:
    """True iff every sorted prefix sum of P dominates that of Q.

    Prefix comparisons carry a tolerance of ``MAJORIZATION_TOL``.
    """
    _check_same_support(P, Q)
    pref_p = np.cumsum(-np.sort(-P.p))
    pref_q = np.cumsum(-np.sort(-Q.p))
    return bool(np.all(pref_p >= pref_q - MAJORIZATION_TOL))


def ensemble_average(E: Ensemble) -> Distribution:
    """The weight mixture of the ensemble's components."""
    return Distribution(E.weights.p @ E.matrix)


def holevo_information(E: Ensemble) -> float:
    """Weighted average relative entropy of components to the average.

    Finite whenever every positively weighted component is absolutely
    continuous w.r.t. the average, which holds automatically.
    """
    avg = ensemble_average(E)
    total = 0.0
    for w, comp in zip(E.weights.p, E.components):
        if w > 0.0:
            total += w * relative_entropy(comp, avg)
    return float(total)


def divergence_information(E: Ensemble, strategy: str = "auto") -> float:
    """Weighted average observational divergence of components to the average.

    Strategies:
      * ``"uniform-average"``: requires the average to be uniform within
        ``UNIFORM_AVERAGE_TOL`` in infinity norm; each component divergence
        is then the O(n log n) prefix maximum.
      * ``"exhaustive"``: brute-force event enumeration against the actual
        average; support capped at ``EXHAUSTIVE_MAX_N``.
      * ``"auto"``: uniform-average when the average is uniform, else
        exhaustive when the support allows it, else
        :class:`NotComputableExactlyError`. No silent approximation.
    """
    if strategy not in ("auto", "exhaustive", "uniform-average"):
        raise ValueError(f"unknown strategy {strategy!r}")
    avg = ensemble_average(E)
    n = E.n
    avg_is_uniform = float(np.max(np.abs(avg.p - 1.0 / n))) <= UNIFORM_AVERAGE_TOL
    if strategy == "auto":
        if avg_is_uniform:
            strategy = "uniform-average"
        elif n <= EXHAUSTIVE_MAX_N:
            strategy = "exhaustive"
        else:
            raise NotComputableExactlyError(
                f"average is not uniform and support {n} exceeds the "
                f"exhaustive cap {EXHAUSTIVE_MAX_N}"
            )
    if strategy == "uniform-average":
        if not avg_is_uniform:
            raise PreconditionViolatedError(
                "uniform-average strategy requires a uniform ensemble average"
            )
        per_component = _divergence_uniform_rows(E.matrix)
        return float(E.weights.p @ per_component)
    if n > EXHAUSTIVE_MAX_N:
        raise TooLargeForExhaustiveError(
            f"support {n} exceeds the exhaustive cap {EXHAUSTIVE_MAX_N}"
        )
    total = 0.0
    for w, comp in zip(E.weights.p, E.components):
        if w > 0.0:
            total += w * divergence_exact(comp, avg)
    return float(total)


def _check_same_support(P: Distribution, Q: Distribution) -> None:
    if P.n != Q.n:
        raise DimensionMismatchError(f"support sizes differ: {P.n} vs {Q.n}")
