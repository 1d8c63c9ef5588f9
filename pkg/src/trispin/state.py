"""Three-qubit pure states in the helicity basis.

Basis convention, fixed once for the whole package: helicity +1 maps to
bit 0 and helicity -1 to bit 1, and the composite index is
4*b1 + 2*b2 + b3 for |h1 h2 h3>.  So index 0 is |+++>, index 7 is |--->.

Amplitude arrays may carry leading batch axes; a ThreeQubitState then
represents a whole stack of states and all operations stay vectorized.
"""
from dataclasses import dataclass

import numpy as np

from .linalg import EPS_HERM

ZERO_AMP = 1e-15


@dataclass(frozen=True)
class ThreeQubitState:
    """Normalized amplitudes, shape (..., 8), complex."""

    amp: np.ndarray

    def __post_init__(self):
        amp = np.asarray(self.amp, dtype=np.complex128)
        if amp.shape[-1:] != (8,):
            raise ValueError("amplitude array must have trailing length 8")
        if not np.all(np.isfinite(amp)):
            raise ValueError("amplitudes contain non-finite entries")
        nrm = np.sum(np.abs(amp) ** 2, axis=-1)
        if np.max(np.abs(nrm - 1.0)) > EPS_HERM:
            raise ValueError("state is not normalized")
        amp.flags.writeable = False
        object.__setattr__(self, "amp", amp)

    @property
    def batch_shape(self):
        return self.amp.shape[:-1]


def normalize(raw):
    """Build a unit-norm state from raw amplitudes, keeping the global phase.

    Raises when any amplitude row is numerically zero (no state exists at a
    configuration whose amplitude vanishes identically).
    """
    raw = np.asarray(raw, dtype=np.complex128)
    if raw.shape[-1:] != (8,):
        raise ValueError("amplitude array must have trailing length 8")
    if not np.all(np.isfinite(raw)):
        raise ValueError("amplitudes contain non-finite entries")
    if np.any(np.max(np.abs(raw), axis=-1) <= ZERO_AMP):
        raise ValueError("vanishing amplitude at this configuration")
    nrm = np.sqrt(np.sum(np.abs(raw) ** 2, axis=-1))
    return ThreeQubitState(raw / nrm[..., None])


def density_matrix(s):
    """|psi><psi| as an 8x8 matrix (batched)."""
    return np.einsum("...i,...j->...ij", s.amp, np.conj(s.amp))


# einsum recipes keyed by the kept qubits: contract the traced bit indices
# of psi against conj(psi) directly, never forming the 8x8 matrix.
_TRACE_RECIPE = {
    (1,): "...abc,...dbc->...ad",
    (2,): "...abc,...adc->...bd",
    (3,): "...abc,...abd->...cd",
    (1, 2): "...abc,...dec->...abde",
    (1, 3): "...abc,...dbe->...acde",
    (2, 3): "...abc,...ade->...bcde",
}


def partial_trace(s, keep):
    """Reduced density matrix over the kept qubits, ascending label order.

    keep must be a nonempty proper subset of {1, 2, 3}.  The result has
    dimension 2**len(keep) with the lowest kept label as the slow index.
    """
    keep = tuple(sorted(set(keep)))
    if keep not in _TRACE_RECIPE:
        raise ValueError(f"invalid keep set {keep!r}")
    t = s.amp.reshape(s.amp.shape[:-1] + (2, 2, 2))
    out = np.einsum(_TRACE_RECIPE[keep], t, np.conj(t))
    d = 2 ** len(keep)
    return out.reshape(s.amp.shape[:-1] + (d, d))


def partial_trace_matrix(rho, keep, n_qubits):
    """Partial trace of a 2**n density matrix, keeping 0-based qubit slots.

    Matrix-level fallback used to cross-check the amplitude route; the main
    pipeline never builds the 8x8 matrix.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    keep = tuple(sorted(set(keep)))
    if not keep or len(keep) >= n_qubits or any(k < 0 or k >= n_qubits for k in keep):
        raise ValueError(f"invalid keep set {keep!r}")
    shape = rho.shape[:-2] + (2,) * (2 * n_qubits)
    t = rho.reshape(shape)
    off = t.ndim - 2 * n_qubits
    for k in range(n_qubits - 1, -1, -1):
        if k in keep:
            continue
        t = np.trace(t, axis1=off + k, axis2=off + n_qubits + k)
        n_qubits -= 1
        keep = tuple(i if i < k else i - 1 for i in keep)
    d = 2 ** n_qubits
    return t.reshape(t.shape[: t.ndim - 2 * n_qubits] + (d, d))
