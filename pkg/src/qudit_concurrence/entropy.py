"""Entropies of pure bipartite states and their relation to the concurrence norm.

For a pure state the squared concurrence norm is ``4 e2`` where ``e2`` is the
second elementary symmetric polynomial of the Schmidt spectrum, so the
reduced density matrix has characteristic polynomial

    lambda^2 - lambda + |C|^2/4                        (2 x N_B)
    lambda^3 - lambda^2 + (|C|^2/4) lambda - det rho   (3 x 3)

and the von Neumann entropy of a qubit-qudit pair is a function of ``|C|``
alone.  For two qutrits it also depends on ``det rho_B``.  All logarithms are
base 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .concurrence import concurrence_vector_pure
from .errors import DomainError, InvalidDimensionError
from .linalg import jacobi_eigvalsh
from .states import PureState, reduced_density

MAX_QUTRIT_NORM = np.sqrt(4.0 / 3.0)
IMAG_TOL = 1e-9
SPECTRUM_TOL = 1e-9


@dataclass(frozen=True)
class EntropyReport:
    von_neumann: float
    linear: float
    schmidt_squares: tuple[float, ...]
    det_rhoB: float


def shannon_bits(probs) -> float:
    """``-sum p log2 p`` with ``0 log 0 = 0``; tiny negatives are treated as zero."""
    p = np.clip(np.asarray(probs, dtype=float), 0.0, None)
    p = p[p > 0]
    return float(-np.sum(p * np.log2(p)))


def binary_entropy(x: float) -> float:
    return shannon_bits([x, 1.0 - x])


def schmidt_squares(ps: PureState, side: str = "B") -> np.ndarray:
    """Eigenvalues of the reduced density matrix, descending, clipped at zero."""
    w = jacobi_eigvalsh(reduced_density(ps, side))
    return np.clip(w[::-1], 0.0, None)


def entropy_report(ps: PureState) -> EntropyReport:
    """Von Neumann and linear entropy of ``ps`` from the spectrum of ``rho_B``.

    >>> from qudit_concurrence.states import catalog_state
    >>> r = entropy_report(catalog_state("bell.psi-"))
    >>> round(r.von_neumann, 12), round(r.linear, 12)
    (1.0, 0.5)
    """
    if not isinstance(ps, PureState):
        ps = PureState(ps)
    rho_b = reduced_density(ps, "B")
    k2 = schmidt_squares(ps, "B")
    linear = 1.0 - float(np.real(np.trace(rho_b @ rho_b)))
    det_b = max(float(np.prod(k2)), 0.0)
    return EntropyReport(shannon_bits(k2), linear, tuple(float(x) for x in k2), det_b)


def _elementary_symmetric(m: np.ndarray, k: int) -> float:
    """Sum of the k x k principal minors of ``m``."""
    n = m.shape[0]
    total = 0.0
    for idx in itertools.combinations(range(n), k):
        total += np.linalg.det(m[np.ix_(idx, idx)]).real
    return float(total)


def secular_coefficients(ps: PureState, side: str = "B") -> np.ndarray:
    """Coefficients (highest power first) of the characteristic polynomial of a
    reduced density matrix written in terms of the concurrence norm.

    The leading terms are ``lambda^n - lambda^{n-1} + (|C|^2/4) lambda^{n-2}``;
    for n >= 3 the remaining elementary symmetric polynomials (``det rho`` for
    n = 3) come from principal minors.
    """
    c2 = concurrence_vector_pure(ps).norm_sq
    rho = reduced_density(ps, side)
    n = rho.shape[0]
    coeffs = [1.0, -1.0, c2 / 4.0]
    for k in range(3, n + 1):
        coeffs.append((-1) ** k * _elementary_symmetric(rho, k))
    return np.array(coeffs[: n + 1])


def check_secular(ps: PureState) -> float:
    """Largest ``|P(kappa^2)|`` over the Schmidt squares of either side.

    Both reduced density matrices are tested when their dimension is at least
    2; ``P`` is the polynomial from :func:`secular_coefficients`.
    """
    if not isinstance(ps, PureState):
        ps = PureState(ps)
    if ps.dim_a < 2 or ps.dim_b < 2:
        raise InvalidDimensionError("secular equation needs both dimensions >= 2")
    worst = 0.0
    for side in ("A", "B"):
        coeffs = secular_coefficients(ps, side)
        k2 = jacobi_eigvalsh(reduced_density(ps, side))
        worst = max(worst, float(np.max(np.abs(np.polyval(coeffs, k2)))))
    return worst


def qubit_schmidt_squares(norm_c: float) -> tuple[float, float]:
    """``(1 +- sqrt(1 - |C|^2)) / 2``."""
    if not 0.0 <= norm_c <= 1.0 + 1e-12:
        raise DomainError(f"|C| = {norm_c} outside [0, 1]")
    r = np.sqrt(max(1.0 - norm_c * norm_c, 0.0))
    return (1 + r) / 2, (1 - r) / 2


def entropy_from_norm_qubit(norm_c: float) -> float:
    """Von Neumann entropy of a 2 x N_B pure state from its concurrence norm."""
    return binary_entropy(qubit_schmidt_squares(norm_c)[1])


def _cardano_roots(norm_c: float, det_b: float) -> np.ndarray:
    c2 = norm_c * norm_c
    p = c2 / 4.0 - 1.0 / 3.0
    q = det_b + 2.0 / 27.0 - c2 / 12.0
    d = q * q / 4.0 + p ** 3 / 27.0
    # repeated roots: the discriminant is pure cancellation noise
    if abs(d) <= 64 * np.finfo(float).eps * (q * q / 4.0 + abs(p) ** 3 / 27.0):
        d = 0.0
    disc = np.sqrt(complex(d))
    u = complex(q / 2.0 + disc) ** (1.0 / 3.0)
    if abs(u) > 1e-300:
        v = -p / (3.0 * u)
    else:
        v = complex(q / 2.0 - disc) ** (1.0 / 3.0)
    w = np.exp(2j * np.pi / 3.0)
    xp = 1.0 / 3.0 + w * u + w.conjugate() * v
    xm = 1.0 / 3.0 + w.conjugate() * u + w * v
    return np.array([xp, xm, 1.0 - xp - xm])


def qutrit_schmidt_squares(norm_c: float, det_b: float) -> tuple[float, float, float]:
    """Schmidt squares of a 3 x 3 state from ``|C|`` and ``det rho_B`` (Cardano).

    With ``p = |C|^2/4 - 1/3`` and ``q = det rho_B + 2/27 - |C|^2/12`` the
    shifted variable ``t = lambda - 1/3`` solves ``t^3 + p t - q = 0``, so

        x+- = 1/3 + w^{+-1} u + w^{-+1} v,
        u = cbrt(q/2 + sqrt(q^2/4 + p^3/27)),   u v = -p/3,

    with ``w = exp(2 pi i / 3)``.  The third value is ``1 - x+ - x-``.

    Near a triple root (``|C|^2 -> 4/3``) the roots are cube-root sensitive to
    rounding in the inputs, so an imaginary residue above 1e-9 on a feasible
    input pair is resolved with the trigonometric form instead.

    Raises
    ------
    DomainError
        If no qutrit spectrum has this ``|C|`` and ``det rho_B``.
    """
    lo, hi = det_interval(norm_c)
    if not lo - SPECTRUM_TOL <= det_b <= hi + SPECTRUM_TOL:
        raise DomainError(
            f"det rho_B = {det_b} is infeasible for |C| = {norm_c}; "
            f"allowed range [{lo:.6g}, {hi:.6g}]"
        )
    roots = _cardano_roots(norm_c, det_b)
    if np.max(np.abs(roots.imag)) > IMAG_TOL:
        real = cubic_spectrum(norm_c, min(max(det_b, lo), hi))
    else:
        real = roots.real
    if real.min() < -SPECTRUM_TOL or real.max() > 1.0 + SPECTRUM_TOL:
        raise DomainError(f"(|C| = {norm_c}, det = {det_b}) gives roots {real} outside [0, 1]")
    return tuple(float(x) for x in sorted(real, reverse=True))


def entropy_from_norm_qutrit(norm_c: float, det_b: float) -> float:
    """Von Neumann entropy of a 3 x 3 pure state from ``|C|`` and ``det rho_B``."""
    return shannon_bits(qutrit_schmidt_squares(norm_c, det_b))


def det_interval(norm_c: float) -> tuple[float, float]:
    """Range of ``det rho_B`` compatible with a qutrit spectrum of given ``|C|``.

    The extremes are reached at spectra with a repeated value
    ``(x, x, 1 - 2x)``, where ``|C|^2/4 = 2x - 3x^2``.
    """
    if not 0.0 <= norm_c <= MAX_QUTRIT_NORM + SPECTRUM_TOL:
        raise DomainError(f"|C| = {norm_c} outside [0, sqrt(4/3)]")
    e2 = norm_c * norm_c / 4.0
    r = np.sqrt(max(1.0 - 3.0 * e2, 0.0))
    dets = [x * x * (1 - 2 * x) for x in ((1 + r) / 3.0, (1 - r) / 3.0)]
    return max(min(dets), 0.0), max(max(dets), 0.0)


def cubic_spectrum(norm_c: float, det_b: float) -> np.ndarray:
    """Roots of ``lambda^3 - lambda^2 + (|C|^2/4) lambda - det`` by the
    trigonometric method, descending.  Arguments are assumed feasible; values
    are clipped into range for robustness at the boundary."""
    e2 = norm_c * norm_c / 4.0
    p = e2 - 1.0 / 3.0
    q = det_b + 2.0 / 27.0 - e2 / 3.0
    if p >= 0.0:
        return np.full(3, 1.0 / 3.0)
    m = 2.0 * np.sqrt(-p / 3.0)
    arg = np.clip(-3.0 * q / (p * m), -1.0, 1.0)
    phi = np.arccos(arg) / 3.0
    t = m * np.cos(phi - 2.0 * np.pi * np.arange(3) / 3.0)
    return np.sort(np.clip(t + 1.0 / 3.0, 0.0, 1.0))[::-1]


def entropy_bounds(norm_c: float, grid: int = 201) -> tuple[float, float]:
    """Infimum and supremum of the qutrit von Neumann entropy at fixed ``|C|``.

    ``det rho_B`` is scanned over its feasible interval on ``grid`` points.
    """
    if grid < 1:
        raise ValueError("grid must be a positive integer")
    lo, hi = det_interval(norm_c)
    dets = np.linspace(lo, hi, grid) if grid > 1 else np.array([lo])
    values = [shannon_bits(cubic_spectrum(norm_c, d)) for d in dets]
    return min(values), max(values)


def entropy_envelope(norms, grid: int = 201) -> np.ndarray:
    """Rows ``(|C|, infimum, supremum)`` for each value in ``norms``."""
    rows = [(c,) + entropy_bounds(c, grid) for c in norms]
    return np.array(rows)
