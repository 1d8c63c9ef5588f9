"""Fixed-size dense complex linear algebra for 2x2, 4x4 and 8x8 matrices.

Every routine accepts a single matrix or a stack of matrices with leading
batch axes; results keep the batch shape.  The eigensolver is a cyclic
complex Jacobi sweep, which is robust and has no dependencies beyond numpy
array arithmetic.  Dimensions are limited to 2, 4 and 8 on purpose: that is
all a three-qubit problem ever needs, and the caps catch shape bugs early.
"""
import numpy as np

EPS_HERM = 1e-12
EPS_NUM = 1e-10
EPS_TEST = 1e-9

DIMS = (2, 4, 8)

SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])


def _check_square(a, name="matrix"):
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim < 2 or a.shape[-1] != a.shape[-2]:
        raise ValueError(f"{name} must be square")
    if a.shape[-1] not in DIMS:
        raise ValueError(f"unsupported dimension {a.shape[-1]}, expected one of {DIMS}")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} contains non-finite entries")
    return a


def dagger(a):
    """Conjugate transpose on the trailing two axes."""
    return np.conj(np.swapaxes(a, -1, -2))


def matmul(a, b):
    a = _check_square(a, "left factor")
    b = _check_square(b, "right factor")
    if a.shape[-1] != b.shape[-1]:
        raise ValueError("dimension mismatch")
    return a @ b


def kron(a, b):
    """Kronecker product; the first factor supplies the slow indices."""
    a = _check_square(a, "left factor")
    b = _check_square(b, "right factor")
    da, db = a.shape[-1], b.shape[-1]
    if da * db not in DIMS:
        raise ValueError(f"resulting dimension {da * db} unsupported")
    out = a[..., :, None, :, None] * b[..., None, :, None, :]
    return out.reshape(out.shape[:-4] + (da * db, da * db))


def trace(a):
    a = _check_square(a)
    return np.einsum("...ii->...", a)


def purity(rho):
    """Tr(rho^2) for a unit-trace density matrix."""
    rho = _check_square(rho, "density matrix")
    tr = np.einsum("...ii->...", rho)
    if np.max(np.abs(tr - 1.0)) > EPS_NUM:
        raise ValueError("density matrix is not unit trace")
    return np.real(np.einsum("...ij,...ji->...", rho, rho))


def is_hermitian(a, tol=EPS_HERM):
    a = np.asarray(a, dtype=np.complex128)
    return bool(np.max(np.abs(a - dagger(a))) <= tol)


def hermitian_eig(a, tol=1e-14, max_sweeps=60):
    """Eigendecomposition of a Hermitian matrix via cyclic Jacobi rotations.

    Returns (w, v) with eigenvalues w sorted descending and orthonormal
    eigenvectors in the columns of v.  Raises on non-Hermitian input and on
    the (never observed) failure to converge within the sweep cap.
    """
    a = _check_square(a)
    n = a.shape[-1]
    batch = a.shape[:-2]
    if np.max(np.abs(a - dagger(a))) > EPS_HERM:
        raise ValueError("non-Hermitian input")
    a = 0.5 * (a + dagger(a))
    a = a.reshape((-1, n, n)).copy()
    v = np.zeros_like(a)
    v[:, range(n), range(n)] = 1.0
    scale = max(1.0, float(np.max(np.abs(a))))
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    iu = np.triu_indices(n, k=1)
    converged = False
    for _ in range(max_sweeps):
        off = np.max(np.abs(a[:, iu[0], iu[1]])) if n > 1 else 0.0
        if off <= tol * scale:
            converged = True
            break
        for (p, q) in pairs:
            apq = a[:, p, q].copy()
            r = np.abs(apq)
            active = r > 0.0
            if not np.any(active):
                continue
            r_safe = np.where(active, r, 1.0)
            phase = np.where(active, apq / r_safe, 1.0)
            diff = (a[:, q, q] - a[:, p, p]).real
            tau = diff / (2.0 * r_safe)
            sgn = np.where(tau >= 0.0, 1.0, -1.0)
            t = np.where(active, sgn / (np.abs(tau) + np.hypot(1.0, tau)), 0.0)
            c = 1.0 / np.hypot(1.0, t)
            s = t * c
            sp = s * phase
            spc = s * np.conj(phase)
            colp = a[:, :, p].copy()
            colq = a[:, :, q].copy()
            a[:, :, p] = c[:, None] * colp - spc[:, None] * colq
            a[:, :, q] = sp[:, None] * colp + c[:, None] * colq
            rowp = a[:, p, :].copy()
            rowq = a[:, q, :].copy()
            a[:, p, :] = c[:, None] * rowp - sp[:, None] * rowq
            a[:, q, :] = spc[:, None] * rowp + c[:, None] * rowq
            vp = v[:, :, p].copy()
            vq = v[:, :, q].copy()
            v[:, :, p] = c[:, None] * vp - spc[:, None] * vq
            v[:, :, q] = sp[:, None] * vp + c[:, None] * vq
    if not converged:
        raise RuntimeError("Jacobi eigensolver failed to converge")
    w = np.real(a[:, range(n), range(n)])
    order = np.argsort(-w, axis=-1, kind="stable")
    w = np.take_along_axis(w, order, axis=-1)
    v = np.take_along_axis(v, order[:, None, :], axis=-1)
    return w.reshape(batch + (n,)), v.reshape(batch + (n, n))


def hermitian_sqrt(a):
    """Hermitian PSD square root.

    Eigenvalues in [-EPS_HERM, EPS_HERM] are clamped to zero so that exactly
    rank-deficient inputs produce exactly low-rank roots; anything below
    -EPS_HERM signals an invalid density matrix upstream and raises.
    """
    w, v = hermitian_eig(a)
    if np.any(w < -EPS_HERM):
        raise ValueError("eigenvalue below -1e-12, not positive semi-definite")
    w = np.where(np.abs(w) < EPS_HERM, 0.0, w)
    out = (v * np.sqrt(w)[..., None, :]) @ dagger(v)
    return 0.5 * (out + dagger(out))
