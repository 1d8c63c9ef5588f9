"""Helicity amplitudes of a polarized 1 -> 3 fermion decay.

Three effective contact interactions are supported.  Each builder returns
the normalized three-qubit helicity state at a phase-space point (theta2,
theta3) for a parent spin pointing along the polar direction (spin_theta,
spin_phi).  Kinematic prefactors and overall constants cancel in the
normalization and are dropped; in the scalar case the common factor
sin((theta2 - theta3)/2) is cancelled analytically so the state stays
defined where the rate vanishes.

Support pattern in the basis of `state` (index = 4 b1 + 2 b2 + b3):
scalar on {0, 3, 4, 7}, vector on {1, 2, 5, 6}, tensor on {0, 7}.
"""
import math
from dataclasses import dataclass

import numpy as np

from .state import ZERO_AMP, normalize

KINDS = ("scalar", "vector", "tensor")

TWO_PI = 2.0 * math.pi

_RT2 = math.sqrt(2.0)

PHYSICAL_TOL = 1e-12


@dataclass(frozen=True)
class CouplingSet:
    """Interaction tag plus four real couplings.

    For the scalar and tensor kinds the pairs (g1, g2) and (g3, g4) are the
    real and imaginary parts of two complex couplings whose phases drop out
    of every measure; both pairs are normalized to unit modulus on
    construction and must not vanish.  The vector kind keeps all four
    couplings as given (two left/right pairs per fermion line).
    """

    kind: str
    g1: float
    g2: float
    g3: float
    g4: float

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown interaction kind {self.kind!r}")
        gs = [float(g) for g in (self.g1, self.g2, self.g3, self.g4)]
        if not all(math.isfinite(g) for g in gs):
            raise ValueError("couplings must be finite")
        if max(abs(g) for g in gs) == 0.0:
            raise ValueError("all four couplings vanish")
        if self.kind in ("scalar", "tensor"):
            na = math.hypot(gs[0], gs[1])
            nb = math.hypot(gs[2], gs[3])
            if na == 0.0 or nb == 0.0:
                raise ValueError(f"{self.kind} coupling pair vanishes")
            gs = [gs[0] / na, gs[1] / na, gs[2] / nb, gs[3] / nb]
        for name, val in zip(("g1", "g2", "g3", "g4"), gs):
            object.__setattr__(self, name, val)

    def complex_pair(self):
        """(g1 + i g2, g3 + i g4); unit modulus for scalar and tensor."""
        return complex(self.g1, self.g2), complex(self.g3, self.g4)


@dataclass(frozen=True)
class DecayConfiguration:
    """Opening angles of particles 2 and 3 plus the parent spin direction.

    Fields may be floats or broadcast-compatible arrays.  theta2, theta3
    and spin_theta live in [0, pi], spin_phi in [0, 2 pi).
    """

    theta2: object
    theta3: object
    spin_theta: object
    spin_phi: object

    def __post_init__(self):
        vals = {}
        for name in ("theta2", "theta3", "spin_theta", "spin_phi"):
            v = np.asarray(getattr(self, name), dtype=float)
            if not np.all(np.isfinite(v)):
                raise ValueError(f"{name} contains non-finite values")
            vals[name] = v
        np.broadcast_shapes(*(v.shape for v in vals.values()))
        for name in ("theta2", "theta3", "spin_theta"):
            if np.any(vals[name] < 0.0) or np.any(vals[name] > math.pi):
                raise ValueError(f"{name} must lie in [0, pi]")
        if np.any(vals["spin_phi"] < 0.0) or np.any(vals["spin_phi"] >= TWO_PI):
            raise ValueError("spin_phi must lie in [0, 2 pi)")
        for name, v in vals.items():
            object.__setattr__(self, name, v)

    @property
    def is_physical(self):
        """Kinematic constraint for massless 1 -> 3 decays.

        theta2 + theta3 >= pi, with a float tolerance so grid nodes that
        land on the boundary within rounding stay physical.
        """
        flag = np.asarray(self.theta2) + np.asarray(self.theta3) >= math.pi - PHYSICAL_TOL
        return bool(flag) if flag.ndim == 0 else flag


def _require_kind(g, kind):
    if g.kind != kind:
        raise ValueError(f"expected {kind} couplings, got {g.kind}")


def _half_angles(cfg):
    t2 = np.asarray(cfg.theta2, dtype=float)
    t3 = np.asarray(cfg.theta3, dtype=float)
    th = np.asarray(cfg.spin_theta, dtype=float)
    ph = np.asarray(cfg.spin_phi, dtype=float)
    shape = np.broadcast_shapes(t2.shape, t3.shape, th.shape, ph.shape)
    return t2, t3, th, ph, shape


def _finish(raw, cfg, kind):
    bad = np.max(np.abs(raw), axis=-1) <= ZERO_AMP
    if np.any(bad):
        t2, t3, th, ph = np.broadcast_arrays(
            np.asarray(cfg.theta2, dtype=float), np.asarray(cfg.theta3, dtype=float),
            np.asarray(cfg.spin_theta, dtype=float), np.asarray(cfg.spin_phi, dtype=float))
        idx = int(np.argmax(np.ravel(bad)))
        raise ValueError(
            f"vanishing {kind} amplitude at this configuration "
            f"(theta2={np.ravel(t2)[idx]:.6g}, theta3={np.ravel(t3)[idx]:.6g}, "
            f"spin_theta={np.ravel(th)[idx]:.6g}, spin_phi={np.ravel(ph)[idx]:.6g})")
    return normalize(raw)


def scalar_state(cfg, g):
    """Normalized helicity state of the scalar contact interaction.

    Supported on indices {7, 4, 3, 0}; independent of theta2 and theta3
    after the common kinematic factor cancels, so every phase-space point
    carries the same qubit-1 x Bell-pair structure.
    """
    _require_kind(g, "scalar")
    c, d = g.complex_pair()
    _, _, th, ph, shape = _half_angles(cfg)
    st, ct = np.sin(th / 2.0), np.cos(th / 2.0)
    eip = np.exp(1j * ph)
    amp = np.zeros(shape + (8,), dtype=np.complex128)
    amp[..., 7] = c * d / _RT2 * st * eip
    amp[..., 4] = -c * np.conj(d) / _RT2 * st * eip
    amp[..., 3] = np.conj(c) * d / _RT2 * ct
    amp[..., 0] = -np.conj(c) * np.conj(d) / _RT2 * ct
    return _finish(amp, cfg, "scalar")


def _vector_coefficients(cfg, g):
    scale = max(abs(g.g1), abs(g.g2), abs(g.g3), abs(g.g4))
    cl, cr, dl, dr = (x / scale for x in (g.g1, g.g2, g.g3, g.g4))
    t2, t3, th, ph, shape = _half_angles(cfg)
    s2, c2 = np.sin(t2 / 2.0), np.cos(t2 / 2.0)
    s3, c3 = np.sin(t3 / 2.0), np.cos(t3 / 2.0)
    st, ct = np.sin(th / 2.0), np.cos(th / 2.0)
    eip = np.exp(1j * ph)
    mll = cl * dl * s3 * (ct * c2 + eip * st * s2)
    mlr = cl * dr * s2 * (ct * c3 + eip * st * s3)
    mrl = cr * dl * s2 * (ct * s3 - eip * st * c3)
    mrr = cr * dr * s3 * (ct * s2 - eip * st * c2)
    return mll, mlr, mrl, mrr, shape


def vector_state(cfg, g):
    """Normalized helicity state of the vector contact interaction.

    Supported on indices {5, 6, 1, 2}: qubit 1 carries the opposite
    helicity to one of the pair, so pairwise concurrences with qubit 1
    vanish identically.
    """
    _require_kind(g, "vector")
    mll, mlr, mrl, mrr, shape = _vector_coefficients(cfg, g)
    amp = np.zeros(shape + (8,), dtype=np.complex128)
    amp[..., 5] = mll
    amp[..., 6] = mlr
    amp[..., 1] = mrl
    amp[..., 2] = mrr
    return _finish(amp, cfg, "vector")


def tensor_state(cfg, g):
    """Normalized helicity state of the tensor contact interaction.

    Supported on {0, 7} only: every configuration is a superposition of
    all-plus and all-minus helicities.
    """
    _require_kind(g, "tensor")
    c, d = g.complex_pair()
    t2, t3, th, ph, shape = _half_angles(cfg)
    s2, s3 = np.sin(t2 / 2.0), np.sin(t3 / 2.0)
    sd = np.sin((t3 - t2) / 2.0)
    st, ct = np.sin(th / 2.0), np.cos(th / 2.0)
    eip = np.exp(1j * ph)
    amp = np.zeros(shape + (8,), dtype=np.complex128)
    amp[..., 0] = np.conj(c) * np.conj(d) * (2.0 * eip * st * s2 * s3 + ct * sd)
    amp[..., 7] = c * d * (-eip * st * sd + 2.0 * ct * s2 * s3)
    return _finish(amp, cfg, "tensor")


STATE_BUILDERS = {"scalar": scalar_state, "vector": vector_state,
                  "tensor": tensor_state}


def closed_form_vector(cfg, g):
    """Closed-form (c23, c1_23, c2_13) for the vector interaction.

    Independent oracle for the generic measure pipeline, evaluated from the
    normalized coefficients directly.
    """
    _require_kind(g, "vector")
    mll, mlr, mrl, mrr, _ = _vector_coefficients(cfg, g)
    n2 = (np.abs(mll) ** 2 + np.abs(mlr) ** 2
          + np.abs(mrl) ** 2 + np.abs(mrr) ** 2)
    if np.any(np.sqrt(n2) <= ZERO_AMP):
        raise ValueError("vanishing vector amplitude at this configuration")
    nrm = np.sqrt(n2)
    mll, mlr, mrl, mrr = (m / nrm for m in (mll, mlr, mrl, mrr))
    c23 = 2.0 * np.abs(mll * np.conj(mlr) + mrl * np.conj(mrr))
    c1_23 = 2.0 * np.abs(mrr * mll - mlr * mrl)
    c2_13 = 2.0 * np.sqrt((np.abs(mll) ** 2 + np.abs(mrl) ** 2)
                          * (np.abs(mlr) ** 2 + np.abs(mrr) ** 2))
    return c23, c1_23, c2_13


def closed_form_tensor(cfg, g):
    """Closed-form (one-to-other concurrence, triangle measure) for tensor."""
    _require_kind(g, "tensor")
    s = tensor_state(cfg, g)
    m_r = s.amp[..., 0]
    m_l = s.amp[..., 7]
    c = 2.0 * np.abs(m_r * m_l)
    return c, c**2


def spin_direction_from_rotation(axis, alpha):
    """Polar angles of the +z axis rotated by alpha about the x or y axis.

    Right-hand rule: about y the spin tips toward +x, about x toward -y.
    Accepts any finite alpha; the rotation is 2 pi periodic.
    """
    if axis not in ("x", "y"):
        raise ValueError(f"rotation axis must be 'x' or 'y', got {axis!r}")
    alpha = np.asarray(alpha, dtype=float)
    if not np.all(np.isfinite(alpha)):
        raise ValueError("alpha must be finite")
    a = np.mod(alpha, TWO_PI)
    if axis == "y":
        nx, ny, nz = np.sin(a), np.zeros_like(a), np.cos(a)
    else:
        nx, ny, nz = np.zeros_like(a), -np.sin(a), np.cos(a)
    theta = np.arctan2(np.hypot(nx, ny), nz)
    phi = np.mod(np.arctan2(ny, nx), TWO_PI)
    phi = np.where(phi >= TWO_PI, 0.0, phi)
    if alpha.ndim == 0:
        return theta.item(), phi.item()
    return theta, phi
