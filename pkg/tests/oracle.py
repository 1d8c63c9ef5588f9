"""Independent reference implementations used only by the test suite.

Everything here goes through numpy.linalg so the package's hand-rolled
eigensolver is never in the loop when we check it.
"""

import numpy as np

SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
YY = np.kron(SIGMA_Y, SIGMA_Y)


def wootters_concurrence(rho):
    """Spin-flip concurrence via the unsymmetrized product rho * rho~.

    np.linalg.eigvals on the non-Hermitian product carries O(1e-8) noise
    when rho is rank deficient, so comparisons against this oracle need a
    loose tolerance unless rho has full rank.
    """
    flipped = YY @ rho.conj() @ YY
    ev = np.linalg.eigvals(rho @ flipped)
    eta = np.sort(np.sqrt(np.abs(ev.real)))[::-1]
    return max(0.0, eta[0] - eta[1] - eta[2] - eta[3])


def pure_pair_concurrence(amp):
    """Concurrence of a normalized two-qubit pure state: 2|ad - bc|."""
    a, b, c, d = np.asarray(amp, dtype=complex)
    return 2.0 * abs(a * d - b * c)


def reduced_density(amp, keep):
    """Reduced density matrix of a 3-qubit pure state, matrix route."""
    amp = np.asarray(amp, dtype=complex)
    rho = np.outer(amp, amp.conj()).reshape((2,) * 6)
    # row indices abc, column indices def; tracing a slot pairs its letters
    table = {
        (1,): "abcdbc->ad",
        (2,): "abcadc->bd",
        (3,): "abcabd->cd",
        (1, 2): "abcdec->abde",
        (1, 3): "abcdbe->acde",
        (2, 3): "abcade->bcde",
    }
    out = np.einsum(table[tuple(sorted(keep))], rho)
    dim = 2 ** len(keep)
    return out.reshape(dim, dim)


def haar_states(rng, count):
    """Random 3-qubit pure states: 8 standard complex Gaussians, normalized."""
    z = rng.standard_normal((count, 8)) + 1j * rng.standard_normal((count, 8))
    return z / np.linalg.norm(z, axis=-1, keepdims=True)


def random_unitary(rng, dim=2):
    """Haar-ish unitary from the QR decomposition of a Ginibre matrix."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(z)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def random_density(rng, dim, rank):
    """Random mixed state of the given rank, unit trace."""
    z = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    rho = z @ z.conj().T
    return rho / np.trace(rho).real
