"""Entanglement of subspaces spanned by a few orthonormal states.

Concurrence components are quadratic in the amplitudes.  For a real
superposition ``sum c_mu |psi_mu>`` the component of root pair ``(a, b)`` is

    sum_mu c_mu^2 C_mu[a, b] + sum_{mu != nu} c_mu c_nu X_{mu nu}[a, b]

with cross overlaps ``X_{mu nu} = <psi_mu| F_a (x) F_b |psi_nu*>``.  When the
cross overlaps vanish in every slot where some basis state has a nonzero
component, and the nonzero components share one sign per slot, no real
superposition can make all components vanish: the subspace is entangled
everywhere.  Mixed signs leave room for separable states (an entanglement
edge).

The concurrence surface of a three-state basis is ``r(theta, phi) = |C|`` of
``sin t cos p |b1> + sin t sin p |b2> + cos t |b3>``; its enclosed volume is
``(1/3) int r^3 sin t dt dp``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from .concurrence import flip_overlaps, pure_components
from .errors import InvalidDimensionError
from .states import PureState, catalog_basis, catalog_state, gram_matrix

ORTHO_TOL = 1e-10
DELTA_TOL = 1e-10
ZERO_TOL = 1e-10
EDGE_TOL = 1e-8
CHUNK = 8192


class SubspaceBasis:
    """Two or three orthonormal pure states of a common shape."""

    def __init__(self, states: Sequence[PureState], names: Sequence[str] | None = None):
        states = [s if isinstance(s, PureState) else PureState(s) for s in states]
        if not 2 <= len(states) <= 3:
            raise ValueError(f"a subspace basis has 2 or 3 states, got {len(states)}")
        shapes = {(s.dim_a, s.dim_b) for s in states}
        if len(shapes) != 1:
            raise InvalidDimensionError(f"basis states have different shapes: {sorted(shapes)}")
        dev = float(np.max(np.abs(gram_matrix(states) - np.eye(len(states)))))
        if dev > ORTHO_TOL:
            raise ValueError(f"basis is not orthonormal (Gram deviation {dev:.3e})")
        self.states = tuple(states)
        self.names = tuple(names) if names is not None else None

    @classmethod
    def from_catalog(cls, source) -> SubspaceBasis:
        """From a named basis (``"so3.pentad"``) or a list of catalog names."""
        if isinstance(source, str):
            return cls(catalog_basis(source), names=[source])
        return cls([catalog_state(n) for n in source], names=list(source))

    @property
    def coeffs(self) -> np.ndarray:
        return np.array([s.coeffs for s in self.states])

    def __len__(self):
        return len(self.states)


def _as_basis(basis) -> SubspaceBasis:
    if isinstance(basis, SubspaceBasis):
        return basis
    if isinstance(basis, str) or (basis and isinstance(basis[0], str)):
        return SubspaceBasis.from_catalog(basis)
    return SubspaceBasis(basis)


# --------------------------------------------------------------------------
# orthogonality of flipped states and the sign criterion

@dataclass(frozen=True, eq=False)
class DeltaReport:
    """Overlaps ``X[k, mu, nu] = <psi_mu| F (x) F |psi_nu*>`` for slot ``k``.

    ``holds`` requires every off-diagonal overlap to vanish;
    ``holds_on_support`` only looks at slots where some basis state has a
    nonzero component, which is what the sign criterion needs.
    """

    overlaps: np.ndarray
    violations: np.ndarray
    max_off_diagonal: float
    max_off_diagonal_on_support: float
    support: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return self.max_off_diagonal < DELTA_TOL

    @property
    def holds_on_support(self) -> bool:
        return self.max_off_diagonal_on_support < DELTA_TOL

    @property
    def components(self) -> np.ndarray:
        """Concurrence vectors of the basis states, shape ``(n, slots)``."""
        n = self.overlaps.shape[1]
        return np.array([self.overlaps[:, m, m] for m in range(n)])


def delta_condition(basis) -> DeltaReport:
    """Evaluate the cross overlaps of flipped basis states for every root pair.

    ``violations[mu, nu]`` is True when some slot has
    ``|X[k, mu, nu]| >= 1e-10`` for ``mu != nu``.
    """
    b = _as_basis(basis)
    a = b.coeffs
    n = len(b)
    x = flip_overlaps(a[:, None], a[None, :])  # (n, n, slots)
    x = np.moveaxis(x, -1, 0)
    off = np.abs(x) * (1 - np.eye(n))[None]
    diag = np.abs(np.einsum("kmm->km", x))
    support = tuple(int(k) for k in np.flatnonzero(diag.max(axis=1) > ZERO_TOL))
    on_support = off[list(support)] if support else np.zeros((1, n, n))
    return DeltaReport(
        overlaps=x,
        violations=off.max(axis=0) >= DELTA_TOL,
        max_off_diagonal=float(off.max()),
        max_off_diagonal_on_support=float(on_support.max()),
        support=support,
    )


class Verdict(str, enum.Enum):
    FULLY_ENTANGLED = "FullyEntangled"
    EDGE_POSSIBLE = "EdgePossible"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class SignCriterionResult:
    verdict: Verdict
    reason: str


def sign_criterion(basis) -> SignCriterionResult:
    """Decide from component signs whether every real superposition is entangled.

    * ``Inconclusive`` if cross overlaps survive on the support slots, or if a
      nonzero component carries a complex phase.
    * ``EdgePossible`` if a basis state is itself separable or some slot holds
      components of both signs.
    * ``FullyEntangled`` otherwise.
    """
    b = _as_basis(basis)
    delta = delta_condition(b)
    if not delta.holds_on_support:
        return SignCriterionResult(
            Verdict.INCONCLUSIVE,
            f"cross overlaps up to {delta.max_off_diagonal_on_support:.3g} on the support slots",
        )
    comps = delta.components
    mags = np.abs(comps)
    if np.any(mags.max(axis=1) <= ZERO_TOL):
        return SignCriterionResult(Verdict.EDGE_POSSIBLE, "a basis state is separable")
    nonzero = mags > ZERO_TOL
    if np.any(np.abs(comps.imag[nonzero]) >= ZERO_TOL):
        return SignCriterionResult(Verdict.INCONCLUSIVE, "components carry complex phases")
    for k in range(comps.shape[1]):
        vals = comps[nonzero[:, k], k].real
        if vals.size and vals.min() < 0 < vals.max():
            return SignCriterionResult(Verdict.EDGE_POSSIBLE, f"slot {k} has components of both signs")
    return SignCriterionResult(Verdict.FULLY_ENTANGLED, "nonzero components share one sign per slot")


# --------------------------------------------------------------------------
# concurrence surfaces

@dataclass(frozen=True)
class SurfaceSample:
    theta: float
    phi: float
    radius: float


@dataclass(frozen=True, eq=False)
class Surface:
    """Radius ``r[i, j]`` at ``(theta[i], phi[j])``; theta includes both poles,
    phi is periodic and excludes ``2 pi``."""

    theta: np.ndarray
    phi: np.ndarray
    radius: np.ndarray

    def samples(self) -> Iterator[SurfaceSample]:
        for i, t in enumerate(self.theta):
            for j, p in enumerate(self.phi):
                yield SurfaceSample(float(t), float(p), float(self.radius[i, j]))

    def __len__(self):
        return self.radius.size


def _norms(coeffs: np.ndarray) -> np.ndarray:
    """Concurrence norms of a batch of coefficient matrices ``(M, N_A, N_B)``."""
    out = np.empty(coeffs.shape[0])
    for start in range(0, coeffs.shape[0], CHUNK):
        c = pure_components(coeffs[start:start + CHUNK])
        out[start:start + CHUNK] = np.sqrt(np.sum(np.abs(c) ** 2, axis=-1))
    return out


def _check_three(b: SubspaceBasis) -> None:
    if len(b) != 3:
        raise ValueError("concurrence surfaces need a basis of three states")


def surface_radius(basis, theta, phi) -> np.ndarray:
    """``|C|`` at arbitrary angles (broadcast)."""
    b = _as_basis(basis)
    _check_three(b)
    theta, phi = np.broadcast_arrays(np.asarray(theta, float), np.asarray(phi, float))
    c = np.stack(
        [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)], axis=-1
    ).reshape(-1, 3)
    coeffs = np.einsum("mk,kij->mij", c, b.coeffs)
    return _norms(coeffs).reshape(theta.shape)


def surface(basis, n_theta: int = 181, n_phi: int = 360) -> Surface:
    """Sample the concurrence surface on a regular grid."""
    if n_theta < 2 or n_phi < 2:
        raise ValueError("grid sizes must be >= 2")
    theta = np.linspace(0.0, np.pi, n_theta)
    phi = 2.0 * np.pi * np.arange(n_phi) / n_phi
    t, p = np.meshgrid(theta, phi, indexing="ij")
    return Surface(theta, phi, surface_radius(basis, t, p))


def enclosed_volume(basis, n_theta: int = 400, n_phi: int = 400) -> float:
    """Volume inside the concurrence surface.

    Composite trapezoid rule in theta on the sample grid (the integrand
    vanishes at the poles) and the periodic rectangle rule in phi.
    """
    s = basis if isinstance(basis, Surface) else surface(basis, n_theta, n_phi)
    integrand = s.radius ** 3 * np.sin(s.theta)[:, None]
    dtheta = s.theta[1] - s.theta[0]
    dphi = 2.0 * np.pi / len(s.phi)
    w = np.full(len(s.theta), dtheta)
    w[[0, -1]] *= 0.5
    return float(w @ integrand.sum(axis=1) * dphi / 3.0)


# --------------------------------------------------------------------------
# entanglement edge of the SU(3) hexad family

def hexad_family() -> tuple[np.ndarray, np.ndarray]:
    """Unnormalized coefficient matrices of ``psi+_1 + psi+_2 + psi+_3`` and
    ``|11> + |22> + |33>``."""
    first = sum(catalog_state(f"su3.psi+{k}").coeffs for k in (1, 2, 3))
    second = np.eye(3, dtype=complex)
    return first, second


@dataclass(frozen=True, eq=False)
class EdgeScan:
    """Rows ``(p, q, |C|)`` along the normalization curve plus refined zeros.

    ``p`` and ``q`` are the coefficients in front of the two (unnormalized)
    family members, scaled so the state has unit norm.
    """

    points: np.ndarray
    zeros: np.ndarray

    @property
    def zero_ratios(self) -> np.ndarray:
        """``p / q`` at each zero; invariant under rescaling of the state."""
        return self.zeros[:, 0] / self.zeros[:, 1]


def _family_point(first, second, t):
    direction = np.cos(t) * first + np.sin(t) * second
    scale = 1.0 / np.linalg.norm(direction)
    return np.cos(t) * scale, np.sin(t) * scale, direction * scale


def edge_scan(n_points: int = 720, first=None, second=None, tol: float = EDGE_TOL) -> EdgeScan:
    """Scan ``|C|`` over normalized states ``p * first + q * second``.

    The direction ``(cos t, sin t)`` runs over half a turn (the other half
    repeats the states up to a global sign).  Grid minima are refined by a
    bounded scalar minimization; refined points with ``|C| < tol`` form the
    zero locus.
    """
    if first is None or second is None:
        first, second = hexad_family()
    first = np.asarray(first, complex)
    second = np.asarray(second, complex)
    if n_points < 3:
        raise ValueError("n_points must be >= 3")
    ts = np.pi * np.arange(n_points) / n_points
    rows = []
    coeffs = []
    for t in ts:
        p, q, a = _family_point(first, second, t)
        rows.append((p, q))
        coeffs.append(a)
    norms = _norms(np.array(coeffs))
    points = np.column_stack([np.array(rows), norms])

    def norm_at(t):
        return float(_norms(_family_point(first, second, t)[2][None])[0])

    # |C| has a cusp at a zero; |C|^2 is smooth there, which suits Brent's
    # parabolic steps
    def norm_sq_at(t):
        return norm_at(t) ** 2

    zeros = []
    step = ts[1] - ts[0]
    for i in range(n_points):
        left, right = norms[i - 1], norms[(i + 1) % n_points]
        if norms[i] <= left and norms[i] <= right:
            # minimize over an offset from the grid point: the bounded method
            # has a relative x tolerance, so small offsets resolve finer; a
            # second narrow pass recentres on the first estimate
            t0 = float(ts[i])
            for width in (step, 1e-6):
                res = minimize_scalar(
                    lambda s, c=t0: norm_sq_at(c + s), bounds=(-width, width),
                    method="bounded", options={"xatol": 1e-15},
                )
                t0 += float(res.x)
            t0 %= np.pi
            if norm_at(t0) < tol and not any(abs(t0 - z) < 1e-9 for z in zeros):
                zeros.append(t0)
    zero_rows = []
    for t0 in zeros:
        p, q, _ = _family_point(first, second, t0)
        zero_rows.append((p, q, norm_at(t0)))
    return EdgeScan(points, np.array(zero_rows).reshape(-1, 3))


def edge_grid(p_values, q_values, first=None, second=None) -> np.ndarray:
    """``|C|`` on a raw ``(p, q)`` grid, each point normalized before evaluation.

    Returns an array of shape ``(len(p_values), len(q_values))``; the origin,
    which has no normalized state, is NaN.
    """
    if first is None or second is None:
        first, second = hexad_family()
    p = np.asarray(p_values, float)
    q = np.asarray(q_values, float)
    P, Q = np.meshgrid(p, q, indexing="ij")
    a = P[..., None, None] * first + Q[..., None, None] * second
    norm = np.linalg.norm(a.reshape(a.shape[:2] + (-1,)), axis=-1)
    out = np.full(P.shape, np.nan)
    ok = norm > 0
    out[ok] = _norms(a[ok] / norm[ok][:, None, None])
    return out
