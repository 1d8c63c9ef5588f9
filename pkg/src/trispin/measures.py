"""Entanglement measures for three-qubit pure states and two-qubit marginals.

Pairwise entanglement uses the spin-flip concurrence of a mixed two-qubit
state; one-to-other entanglement uses the marginal-purity concurrence of a
pure bipartition; the genuine three-party measure is the normalized Heron
area of the triangle whose sides are the three one-to-other concurrences,
together with the monogamy deficits.
"""
from dataclasses import dataclass, fields

import numpy as np

from .linalg import (EPS_HERM, EPS_NUM, EPS_TEST, SIGMA_Y, dagger,
                     hermitian_eig, kron)
from .state import ThreeQubitState, partial_trace

_YY = kron(SIGMA_Y, SIGMA_Y).real

LABELS = (1, 2, 3)


@dataclass(frozen=True)
class EntanglementReport:
    """The ten scalars of a full evaluation; fields may be batched arrays."""

    c12: object
    c13: object
    c23: object
    c1_23: object
    c2_13: object
    c3_12: object
    f3: object
    m1: object
    m2: object
    m3: object

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


REPORT_FIELDS = tuple(f.name for f in fields(EntanglementReport))


def _check_label(i):
    if i not in LABELS:
        raise ValueError(f"qubit label must be 1, 2 or 3, got {i!r}")


def _support_concurrence(w, v):
    # Rank <= 2 path, exact for the marginals of pure three-qubit states.
    # In the support eigenbasis the flipped overlap matrix is 2x2 and the
    # product of its two eigenroots is w1*w2*|det G| with G = U+ Y U*, a
    # pure product with no cancellation; the smaller root is recovered by
    # division instead of a square root of a noisy small eigenvalue.
    u = v[..., :, :2]
    ww = w[..., :2]
    g = np.einsum("...ki,kl,...lj->...ij", np.conj(u), _YY, np.conj(u))
    big = np.einsum("...ik,...k,...jk->...ij", g, ww, np.conj(g))
    m11 = np.real(ww[..., 0] * big[..., 0, 0])
    m22 = np.real(ww[..., 1] * big[..., 1, 1])
    m01 = np.sqrt(ww[..., 0] * ww[..., 1]) * big[..., 0, 1]
    trm = m11 + m22
    disc = (m11 - m22) ** 2 + 4.0 * np.abs(m01) ** 2
    lam1 = 0.5 * (trm + np.sqrt(disc))
    eta1 = np.sqrt(np.maximum(lam1, 0.0))
    detg = g[..., 0, 0] * g[..., 1, 1] - g[..., 0, 1] * g[..., 1, 0]
    prod = ww[..., 0] * ww[..., 1] * np.abs(detg)
    safe = np.where(eta1 > 0.0, eta1, 1.0)
    eta2 = np.where(eta1 > 0.0, prod / safe, 0.0)
    return np.maximum(eta1 - eta2, 0.0)


def _generic_concurrence(rho, w, v, rank):
    # Full spin-flip spectrum route for genuinely mixed input of rank > 2.
    sq = (v * np.sqrt(np.maximum(w, 0.0))[..., None, :]) @ dagger(v)
    sq = 0.5 * (sq + dagger(sq))
    flipped = _YY @ np.conj(rho) @ _YY
    m = sq @ flipped @ sq
    m = 0.5 * (m + dagger(m))
    lam, _ = hermitian_eig(m)
    if np.any(lam < -EPS_NUM):
        raise ValueError("invalid density matrix")
    # eigenvalues beyond the rank of rho are structurally zero
    keep = np.arange(lam.shape[-1]) < rank[..., None]
    lam = np.where(keep, np.maximum(lam, 0.0), 0.0)
    eta = np.sqrt(lam)
    return np.maximum(eta[..., 0] - np.sum(eta[..., 1:], axis=-1), 0.0)


def concurrence_mixed(rho):
    """Spin-flip concurrence of a two-qubit density matrix (4x4, batchable)."""
    rho = np.asarray(rho, dtype=np.complex128)
    single = rho.ndim == 2
    if rho.shape[-2:] != (4, 4):
        raise ValueError("concurrence needs a 4x4 density matrix")
    tr = np.einsum("...ii->...", rho)
    if np.max(np.abs(tr - 1.0)) > EPS_NUM:
        raise ValueError("density matrix is not unit trace")
    w, v = hermitian_eig(rho)
    if np.any(w < -EPS_HERM):
        raise ValueError("invalid density matrix")
    w = np.where(np.abs(w) < EPS_HERM, 0.0, w)
    rank = np.sum(w > 0.0, axis=-1)
    if np.all(rank <= 2):
        c = _support_concurrence(w, v)
    else:
        c = _generic_concurrence(rho, w, v, rank)
    c = np.clip(c, 0.0, 1.0)
    return c.item() if single else c


def concurrence_pair(s, i, j):
    """Pairwise concurrence of qubits i and j inside the pure state."""
    _check_label(i)
    _check_label(j)
    if i == j:
        raise ValueError("pair labels must differ")
    return concurrence_mixed(partial_trace(s, (i, j)))


def concurrence_one_to_other(s, i):
    """Concurrence between qubit i and the remaining pair.

    Equals sqrt(2 (1 - Tr rho_jk^2)).  Evaluated through the Schmidt
    identity 2 (1 - Tr rho_jk^2) = 4 det rho_i = 4 sum |2x2 minors|^2 of
    the amplitude matrix: the sum of squares has no cancellation, so
    product states come out exactly zero instead of sqrt(rounding noise).
    """
    _check_label(i)
    order = {1: (0, 1, 2), 2: (1, 0, 2), 3: (2, 0, 1)}[i]
    t = s.amp.reshape(s.amp.shape[:-1] + (2, 2, 2))
    nd = t.ndim - 3
    t = np.transpose(t, tuple(range(nd)) + tuple(nd + a for a in order))
    psi = t.reshape(t.shape[:nd] + (2, 4))
    outer = psi[..., 0, :, None] * psi[..., 1, None, :]
    minors = outer - np.swapaxes(outer, -1, -2)
    det = 0.5 * np.sum(np.abs(minors) ** 2, axis=(-1, -2))
    c = np.clip(2.0 * np.sqrt(det), 0.0, 1.0)
    return c.item() if s.amp.ndim == 1 else c


def monogamy_measure(s, i):
    """CKW deficit of qubit i: one-to-other squared minus pairwise squares."""
    _check_label(i)
    j, k = [x for x in LABELS if x != i]
    big = concurrence_one_to_other(s, i)
    m = big**2 - concurrence_pair(s, i, j) ** 2 - concurrence_pair(s, i, k) ** 2
    if np.any(np.asarray(m) < -EPS_TEST):
        raise ValueError("monogamy inequality violated beyond tolerance")
    return m


def _triangle_from_sides(c1_23, c2_13, c3_12):
    sides = np.stack([c1_23, c2_13, c3_12], axis=-1)
    q = 0.5 * np.sum(sides, axis=-1)
    factors = q[..., None] - sides
    if np.any(factors < -EPS_NUM):
        raise ValueError("concurrence triangle inequality violated")
    factors = np.maximum(factors, 0.0)
    area2 = (16.0 / 3.0) * q * np.prod(factors, axis=-1)
    val = np.sqrt(np.maximum(area2, 0.0))
    # a vanishing side means biseparable, hence zero genuine entanglement
    val = np.where(np.min(sides, axis=-1) <= EPS_NUM, 0.0, val)
    return np.clip(val, 0.0, 1.0)


def triangle_gme(s):
    """Genuine multipartite entanglement from the concurrence triangle area.

    Normalized so the value lies in [0, 1]; zero whenever the state is
    biseparable across any bipartition.
    """
    val = _triangle_from_sides(concurrence_one_to_other(s, 1),
                               concurrence_one_to_other(s, 2),
                               concurrence_one_to_other(s, 3))
    return val.item() if s.amp.ndim == 1 else val


def full_report(s):
    """All ten measures of a state in one pass; batched states give arrays."""
    if not isinstance(s, ThreeQubitState):
        raise TypeError("full_report expects a ThreeQubitState")
    c12 = concurrence_mixed(partial_trace(s, (1, 2)))
    c13 = concurrence_mixed(partial_trace(s, (1, 3)))
    c23 = concurrence_mixed(partial_trace(s, (2, 3)))
    c1_23 = concurrence_one_to_other(s, 1)
    c2_13 = concurrence_one_to_other(s, 2)
    c3_12 = concurrence_one_to_other(s, 3)
    f3 = _triangle_from_sides(c1_23, c2_13, c3_12)
    m1 = c1_23**2 - c12**2 - c13**2
    m2 = c2_13**2 - c12**2 - c23**2
    m3 = c3_12**2 - c13**2 - c23**2
    for m in (m1, m2, m3):
        if np.any(np.asarray(m) < -EPS_TEST):
            raise ValueError("monogamy inequality violated beyond tolerance")
    if s.amp.ndim == 1:
        f3 = f3.item()
    return EntanglementReport(c12=c12, c13=c13, c23=c23, c1_23=c1_23,
                              c2_13=c2_13, c3_12=c3_12, f3=f3,
                              m1=m1, m2=m2, m3=m3)
