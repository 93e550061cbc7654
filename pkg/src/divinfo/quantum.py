"""Minimal quantum layer: density matrices, a Hermitian Jacobi eigensolver,
and spectrum-based information measures.

Only measures against the completely mixed state are provided. They reduce
to classical measures of the eigenvalue distribution: relative entropy
exactly, observational divergence as a lower bound on its quantum
counterpart.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import (
    ConvergenceFailureError,
    NotPositiveSemidefiniteError,
    PreconditionViolatedError,
)
from .measures import Distribution, divergence_uniform, relative_entropy, uniform
from .reports import BoundReport

#: Hermiticity tolerance max|A - A^dagger|.
HERMITIAN_TOL = 1e-12

#: Trace tolerance |tr - 1|.
TRACE_TOL = 1e-9

#: Eigenvalues below this are rejected; negatives above it are clamped to 0.
NEGATIVITY_TOL = 1e-9

#: Infinity-norm tolerance for the completely mixed ensemble average.
MIXED_AVERAGE_TOL = 1e-9

#: The Jacobi solver refuses dimensions above this.
MAX_DIMENSION = 64

_OFF_DIAGONAL_TOL = 1e-14
_MAX_SWEEPS = 200


class DensityMatrix:
    """A Hermitian, trace-1 complex matrix. Positivity is checked when the
    spectrum is computed (small negative eigenvalues are clamped there)."""

    __slots__ = ("_m",)

    def __init__(self, entries):
        arr = np.asarray(entries, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError("need a non-empty square matrix")
        if float(np.max(np.abs(arr - arr.conj().T))) > HERMITIAN_TOL:
            raise ValueError("matrix is not Hermitian")
        trace = complex(np.trace(arr))
        if abs(trace - 1.0) > TRACE_TOL:
            raise ValueError(f"trace {trace!r} is not 1 within {TRACE_TOL}")
        arr = np.array(arr, dtype=complex)
        arr.flags.writeable = False
        self._m = arr

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    @property
    def d(self) -> int:
        return self._m.shape[0]

    @classmethod
    def completely_mixed(cls, d: int) -> "DensityMatrix":
        return cls(np.eye(d) / d)

    @classmethod
    def from_json_dict(cls, data: dict) -> "DensityMatrix":
        if not isinstance(data, dict) or not {"d", "re", "im"} <= set(data):
            raise ValueError("expected keys d, re, im")
        re = np.asarray(data["re"], dtype=float)
        im = np.asarray(data["im"], dtype=float)
        if re.shape != (data["d"], data["d"]) or im.shape != re.shape:
            raise ValueError("re/im shapes do not match d")
        return cls(re + 1j * im)

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "re": self._m.real.tolist(),
            "im": self._m.imag.tolist(),
        }

    def __repr__(self) -> str:
        return f"DensityMatrix(d={self.d})"


class QuantumEnsemble:
    """Weighted states of equal dimension; ``mixed_average`` flags whether
    the weighted average is the completely mixed state."""

    __slots__ = ("_weights", "_states")

    def __init__(self, weights, states):
        if not isinstance(weights, Distribution):
            weights = Distribution(weights)
        states = tuple(states)
        if len(states) != weights.n:
            raise ValueError(f"{weights.n} weights for {len(states)} states")
        d = states[0].d
        if any(s.d != d for s in states):
            raise ValueError("states must share one dimension")
        self._weights = weights
        self._states = states

    @property
    def weights(self) -> Distribution:
        return self._weights

    @property
    def states(self) -> tuple:
        return self._states

    @property
    def d(self) -> int:
        return self._states[0].d

    @property
    def average(self) -> np.ndarray:
        out = np.zeros((self.d, self.d), dtype=complex)
        for w, s in zip(self._weights.p, self._states):
            out += w * s.matrix
        return out

    @property
    def mixed_average(self) -> bool:
        dev = np.abs(self.average - np.eye(self.d) / self.d)
        return float(dev.max()) <= MIXED_AVERAGE_TOL


def _jacobi(a: np.ndarray):
    """Cyclic Jacobi sweeps on a Hermitian matrix.

    Each pivot (p, q) is annihilated by a complex Givens rotation: the
    pivot's phase is rotated away, then the classic symmetric 2x2 rotation
    with tangent t solving t^2 + 2*tau*t - 1 = 0 is applied. Stops when the
    off-diagonal Frobenius mass falls to 1e-14.
    """
    d = a.shape[0]
    a = np.array(a, dtype=complex)
    vecs = np.eye(d, dtype=complex)
    off_mask = ~np.eye(d, dtype=bool)
    for _ in range(_MAX_SWEEPS):
        if math.sqrt(float(np.sum(np.abs(a[off_mask]) ** 2))) <= _OFF_DIAGONAL_TOL:
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                pivot = a[p, q]
                mag = abs(pivot)
                if mag == 0.0:
                    continue
                phase = pivot / mag
                tau = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                cp = c * phase
                sp = s * phase
                col_p = a[:, p] * cp - a[:, q] * s
                col_q = a[:, p] * sp + a[:, q] * c
                a[:, p] = col_p
                a[:, q] = col_q
                row_p = np.conj(cp) * a[p, :] - s * a[q, :]
                row_q = np.conj(sp) * a[p, :] + c * a[q, :]
                a[p, :] = row_p
                a[q, :] = row_q
                v_p = vecs[:, p] * cp - vecs[:, q] * s
                v_q = vecs[:, p] * sp + vecs[:, q] * c
                vecs[:, p] = v_p
                vecs[:, q] = v_q
    else:
        raise ConvergenceFailureError(
            f"Jacobi did not converge within {_MAX_SWEEPS} sweeps"
        )
    values = np.diag(a).real
    order = np.argsort(-values, kind="stable")
    return values[order], vecs[:, order]


def hermitian_eigensystem(H: DensityMatrix):
    """Eigenvalues (descending) and matching eigenvector columns."""
    if H.d > MAX_DIMENSION:
        raise ValueError(f"dimension {H.d} exceeds the solver cap {MAX_DIMENSION}")
    return _jacobi(H.matrix)


def hermitian_eigenvalues(H: DensityMatrix) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, sorted descending."""
    return hermitian_eigensystem(H)[0]


def spectrum_distribution(rho: DensityMatrix) -> Distribution:
    """The eigenvalue distribution of a density matrix, sorted descending.

    Eigenvalues in [-NEGATIVITY_TOL, 0) are treated as rounding noise:
    clamped to zero and the spectrum renormalized. Anything more negative
    is a genuine positivity failure.
    """
    values = hermitian_eigenvalues(rho)
    if float(values.min()) < -NEGATIVITY_TOL:
        raise NotPositiveSemidefiniteError(
            f"eigenvalue {values.min()!r} below -{NEGATIVITY_TOL}"
        )
    if np.any(values < 0.0):
        return Distribution(np.maximum(values, 0.0), normalize=True)
    return Distribution(values)


def q_relative_entropy_mixed(rho: DensityMatrix) -> float:
    """Relative entropy of rho from the completely mixed state, in bits.

    Equals the classical relative entropy of the spectrum from uniform
    (both matrices diagonalize in rho's eigenbasis).
    """
    return relative_entropy(spectrum_distribution(rho), uniform(rho.d))


def q_divergence_mixed_lb(rho: DensityMatrix) -> float:
    """Classical divergence of the spectrum from uniform, in bits.

    This is a lower bound on the quantum observational divergence of rho
    from the completely mixed state; exactness is not claimed.
    """
    return divergence_uniform(spectrum_distribution(rho))


def _random_unitary(d: int, seed: int) -> np.ndarray:
    """Haar-like unitary from a seeded complex Gaussian matrix.

    QR orthonormalization with the R diagonal rotated real-positive, so the
    result is a deterministic function of the seed.
    """
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    diag = np.diag(r)
    lam = np.where(np.abs(diag) > 0.0, diag / np.abs(diag), 1.0)
    return q * lam[np.newaxis, :]


def conjugated_cyclic_qensemble(P: Distribution, seed: int) -> QuantumEnsemble:
    """Cyclic shifts of P as diagonal states, conjugated by one random unitary.

    The classical shifts average to uniform, so the conjugated states
    average to the completely mixed state; all spectra equal P's entries.
    """
    n = P.n
    u = _random_unitary(n, seed)
    u_dag = u.conj().T
    states = [
        DensityMatrix(u @ np.diag(np.roll(P.p, j)) @ u_dag) for j in range(n)
    ]
    return QuantumEnsemble(uniform(n), states)


def check_quantum_holevo_bound(QE: QuantumEnsemble, tol: float = 1e-9) -> BoundReport:
    """Holevo information vs the divergence trade-off for mixed-average
    quantum ensembles: chi <= K(2 ln log2 d - ln K + 1) + 16.

    K aggregates the per-state spectral divergence lower bounds; the right
    side is non-decreasing in K, so the bound is valid with the proxy. The
    K -> 0 limit of the right side is 16.
    """
    d = QE.d
    if d < 3:
        raise PreconditionViolatedError("needs dimension at least 3")
    if not QE.mixed_average:
        raise PreconditionViolatedError(
            "ensemble average is not the completely mixed state"
        )
    uni = uniform(d)
    chi = 0.0
    kay = 0.0
    for w, rho in zip(QE.weights.p, QE.states):
        if w <= 0.0:
            continue
        spectrum = spectrum_distribution(rho)
        chi += w * relative_entropy(spectrum, uni)
        kay += w * divergence_uniform(spectrum)
    if kay <= 0.0:
        rhs = 16.0
    else:
        rhs = kay * (2.0 * math.log(math.log2(d)) - math.log(kay) + 1.0) + 16.0
    return BoundReport.compare(
        "quantum-holevo-tradeoff", chi, rhs, tol, flags=("mixed-average",)
    )
