"""Concurrence vectors of bipartite pure and mixed states.

For positive roots ``alpha`` (side A) and ``beta`` (side B) the pure-state
component is ``<psi| F_alpha (x) F_beta |psi*>`` with flip operators
``F = E_alpha - E_{-alpha}``.  Components are ordered lexicographically over
(A root, B root) with each side in canonical root order.

For a density matrix each root pair gets Wootters' construction: with
subnormalized eigenvectors ``|v_i> = sqrt(p_i)|e_i>`` form the symmetric matrix
``tau_ij = <v_i| F_alpha (x) F_beta |v_j*>``, take the square roots ``lambda_i``
of the eigenvalues of ``tau tau*`` and set
``C = max(0, lambda_1 - lambda_2 - ... - lambda_n)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DensityMatrixError, InvalidDimensionError, NumericalError
from .ladder import flip_stack
from .linalg import jacobi_eigh, jacobi_eigvalsh
from .roots import Root, positive_roots
from .states import DensityMatrix, PureState

CLIP_TOL = 1e-10
RANK_TOL = 1e-14


@dataclass(frozen=True, eq=False)
class ConcurrenceVector:
    """Components indexed by pairs of positive roots.

    ``components`` is complex for pure states and real nonnegative for mixed
    states.
    """

    dim_a: int
    dim_b: int
    components: np.ndarray
    mixed: bool = False

    @property
    def index(self) -> list[tuple[Root, Root]]:
        return [(ra, rb) for ra in positive_roots(self.dim_a) for rb in positive_roots(self.dim_b)]

    @property
    def labels(self) -> list[str]:
        return [f"{ra.label()}|{rb.label()}" for ra, rb in self.index]

    @property
    def norm_sq(self) -> float:
        return norm_sq(self)

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.norm_sq))

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)


def _check_dims(dim_a: int, dim_b: int) -> None:
    if dim_a < 2 or dim_b < 2:
        raise InvalidDimensionError(
            f"both subsystems need dimension >= 2 to carry roots, got {dim_a}x{dim_b}"
        )


def flip_overlaps(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """``<left| F_alpha (x) F_beta |right*>`` for every root pair.

    Both arguments are coefficient matrices of shape ``(..., N_A, N_B)``
    (broadcast against each other); the result has shape ``(..., R_A * R_B)``.
    """
    x = np.asarray(left, dtype=complex)
    y = np.asarray(right, dtype=complex)
    na, nb = x.shape[-2:]
    _check_dims(na, nb)
    fa, fb = flip_stack(na), flip_stack(nb)
    flipped = np.einsum("amn,...nk,bjk->...abmj", fa, y.conj(), fb, optimize=True)
    out = np.einsum("...mj,...abmj->...ab", x.conj(), flipped, optimize=True)
    return out.reshape(out.shape[:-2] + (-1,))


def pure_components(coeffs: np.ndarray) -> np.ndarray:
    """Concurrence components of one or many coefficient matrices.

    ``coeffs`` has shape ``(..., N_A, N_B)``; the result has shape
    ``(..., R_A * R_B)``.  No normalization check is made here.
    """
    return flip_overlaps(coeffs, coeffs)


def concurrence_vector_pure(ps: PureState) -> ConcurrenceVector:
    """Concurrence vector of a normalized pure state.

    >>> from qudit_concurrence.states import catalog_state
    >>> cv = concurrence_vector_pure(catalog_state("su3.phi1"))
    >>> round(cv.norm_sq, 12)
    1.333333333333
    """
    if not isinstance(ps, PureState):
        ps = PureState(ps)
    return ConcurrenceVector(ps.dim_a, ps.dim_b, pure_components(ps.coeffs))


def norm_sq(cv) -> float:
    """Squared norm ``sum |C_ab|^2`` of a concurrence vector (or raw array)."""
    comps = cv.components if isinstance(cv, ConcurrenceVector) else np.asarray(cv)
    return float(np.sum(np.abs(comps) ** 2))


def concurrence_norm(ps: PureState) -> float:
    return concurrence_vector_pure(ps).norm


def _subnormalized_eigenvectors(rho: DensityMatrix) -> np.ndarray:
    p, e = rho.spectrum()
    if p[0] < -CLIP_TOL:
        raise DensityMatrixError(f"density matrix has negative eigenvalue {p[0]:.3e}")
    # eigenvalues at roundoff level are exact zeros; keeping them would feed
    # sqrt(eps) ~ 1e-8 noise into the lambda spectrum
    p = np.where(p < RANK_TOL, 0.0, p)
    return e * np.sqrt(p)


def _root_index(n: int, root) -> int:
    roots = positive_roots(n)
    if isinstance(root, Root):
        return roots.index(root)
    k = int(root)
    if not 0 <= k < len(roots):
        raise IndexError(f"root index {k} out of range for N={n}")
    return k


def tau_matrix(rho: DensityMatrix, alpha, beta, vectors: np.ndarray | None = None) -> np.ndarray:
    """Symmetric matrix ``tau_ij = <v_i| F_alpha (x) F_beta |v_j*>``.

    ``alpha`` and ``beta`` are positive roots or their canonical indices.  The
    full spectrum of ``rho`` is used; zero eigenvalues give zero rows.
    """
    if not isinstance(rho, DensityMatrix):
        raise DensityMatrixError(f"expected a DensityMatrix, got {type(rho).__name__}")
    _check_dims(rho.dim_a, rho.dim_b)
    ia, ib = _root_index(rho.dim_a, alpha), _root_index(rho.dim_b, beta)
    if vectors is None:
        vectors = _subnormalized_eigenvectors(rho)
    flip = np.kron(flip_stack(rho.dim_a)[ia], flip_stack(rho.dim_b)[ib])
    return vectors.conj().T @ flip @ vectors.conj()


def lambda_spectrum(tau: np.ndarray) -> np.ndarray:
    """Descending square roots of the eigenvalues of ``tau tau*``.

    For symmetric ``tau`` these are its singular values.  They are read off
    the Hermitian embedding ``[[0, tau], [tau^H, 0]]`` (eigenvalues
    ``+-sigma``), which avoids square roots of roundoff-level eigenvalues.
    """
    tau = np.asarray(tau, dtype=complex)
    n = tau.shape[0]
    asym = float(np.max(np.abs(tau - tau.T))) if n else 0.0
    if asym > CLIP_TOL * max(1.0, float(np.max(np.abs(tau)))):
        raise NumericalError(f"tau is not symmetric (deviation {asym:.3e})", residual=asym)
    emb = np.zeros((2 * n, 2 * n), dtype=complex)
    emb[:n, n:] = tau
    emb[n:, :n] = tau.conj().T
    w = jacobi_eigvalsh(emb)
    return np.clip(w[::-1][:n], 0.0, None)


def _component_from_tau(tau: np.ndarray) -> float:
    lam = lambda_spectrum(tau)
    return max(0.0, float(lam[0] - lam[1:].sum()))


def mixed_component(rho: DensityMatrix, alpha, beta) -> float:
    """``max(0, lambda_1 - sum_{i>1} lambda_i)`` for one root pair."""
    return _component_from_tau(tau_matrix(rho, alpha, beta))


def concurrence_vector_mixed(rho: DensityMatrix) -> ConcurrenceVector:
    """Concurrence vector of a density matrix, one component per root pair."""
    if not isinstance(rho, DensityMatrix):
        raise DensityMatrixError(f"expected a DensityMatrix, got {type(rho).__name__}")
    _check_dims(rho.dim_a, rho.dim_b)
    vectors = _subnormalized_eigenvectors(rho)
    fa, fb = flip_stack(rho.dim_a), flip_stack(rho.dim_b)
    vc = vectors.conj()
    comps = []
    for ma in fa:
        for mb in fb:
            tau = vc.T @ np.kron(ma, mb) @ vc
            comps.append(_component_from_tau(tau))
    return ConcurrenceVector(rho.dim_a, rho.dim_b, np.array(comps), mixed=True)
