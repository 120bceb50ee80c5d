"""Cyclic Jacobi eigensolver for small dense Hermitian matrices."""

from __future__ import annotations

import numpy as np

from .errors import NumericalError

OFF_TOL = 1e-13
MAX_SWEEPS = 100


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def jacobi_eigh(a, tol=OFF_TOL, max_sweeps=MAX_SWEEPS, vectors=True):
    """Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Each rotation first removes the phase of ``a[p, q]`` and then applies a
    real plane rotation that zeroes it.  Sweeps continue until the Frobenius
    norm of the off-diagonal part drops below ``tol`` times the norm of the
    matrix (or below ``tol`` itself for a matrix of tiny norm).

    Parameters
    ----------
    a : array_like, shape (n, n)
        Hermitian input; only Hermitian-symmetric parts are meaningful.
    tol : float
        Relative off-diagonal threshold.
    max_sweeps : int
        Upper bound on full sweeps before giving up.
    vectors : bool
        Also accumulate eigenvectors.

    Returns
    -------
    w : ndarray, shape (n,)
        Eigenvalues in ascending order.
    v : ndarray, shape (n, n)
        Unitary matrix whose columns are the eigenvectors (only if ``vectors``).

    Raises
    ------
    NumericalError
        If the off-diagonal norm is still above threshold after ``max_sweeps``.
    """
    a = np.array(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = max(float(np.linalg.norm(a)), 1.0)
    threshold = tol * scale

    for _ in range(max_sweeps):
        off = _off_norm(a)
        if off <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = a[p, q]
                mag = abs(g)
                if mag == 0.0:
                    continue
                phase = g / mag
                app, aqq = a[p, p].real, a[q, q].real
                theta = (aqq - app) / (2.0 * mag)
                t = np.copysign(1.0, theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # columns p, q of the unitary: [c, s] and [-s e^{-i phi}, c e^{-i phi}]
                g2 = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                cols = a[:, [p, q]] @ g2
                a[:, [p, q]] = cols
                a[[p, q], :] = g2.conj().T @ a[[p, q], :]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                if vectors:
                    v[:, [p, q]] = v[:, [p, q]] @ g2
    else:
        off = _off_norm(a)
        if off > threshold:
            raise NumericalError(
                f"Jacobi did not converge in {max_sweeps} sweeps", residual=off
            )

    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    if vectors:
        return w[order], v[:, order]
    return w[order]


def jacobi_eigvalsh(a, **kwargs) -> np.ndarray:
    """Eigenvalues only; see :func:`jacobi_eigh`."""
    return jacobi_eigh(a, vectors=False, **kwargs)
