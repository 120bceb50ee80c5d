"""Fundamental representation of A_{N-1}: Cartan generators and ladder operators.

Basis states ``|1>, ..., |N>`` (0-based indices ``0 .. N-1`` in arrays) are
generated from the highest-weight state by the simple lowering operators,
``E_{-alpha_k} |k> = |k+1>``.  The raising operator of a positive root
``alpha_i + ... + alpha_j`` maps ``|j+1>`` to ``|i>``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .roots import Root, fundamental_weights, positive_roots

COMMUTATOR_TOL = 1e-12


@dataclass(frozen=True)
class LadderSet:
    """Matrices of the fundamental representation for dimension N.

    ``raising[k]`` and ``lowering[k]`` belong to ``roots[k]``, the k-th
    positive root in canonical order.
    """

    dimension: int
    roots: tuple[Root, ...]
    cartan: tuple[np.ndarray, ...]
    raising: tuple[np.ndarray, ...]
    lowering: tuple[np.ndarray, ...]

    def operator(self, root: Root) -> np.ndarray:
        """``E_root`` for any nonzero root, positive or negative."""
        for k, r in enumerate(self.roots):
            if r == root:
                return self.raising[k]
            if -r == root:
                return self.lowering[k]
        raise KeyError(f"{root.label()} is not a root of A_{self.dimension - 1}")


@dataclass(frozen=True)
class FlipOperator:
    """``F_alpha = E_alpha - E_{-alpha}``, a real antisymmetric matrix."""

    root_index: int
    root: Root
    matrix: np.ndarray


@dataclass
class CommutatorReport:
    """Outcome of :func:`verify_commutators`.

    ``sign_table`` maps ``(label_a, label_b)`` to the sign ``s`` found in
    ``[E_a, E_b] = s E_{a+b}``.
    """

    max_residual: float
    violations: list[str] = field(default_factory=list)
    sign_table: dict[tuple[str, str], int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations


def _unit(N: int, row: int, col: int) -> np.ndarray:
    m = np.zeros((N, N))
    m[row, col] = 1.0
    return m


def build_ladder_set(N: int) -> LadderSet:
    """Construct ``H_i`` and ``E_{+-alpha}`` for the N-dimensional irrep.

    >>> ls = build_ladder_set(3)
    >>> np.diag(ls.cartan[0]).tolist()
    [0.5, -0.5, 0.0]
    """
    roots = positive_roots(N)
    weights = fundamental_weights(N)
    cartan = tuple(
        np.diag([float(w.covariant[i]) for w in weights]) for i in range(N - 1)
    )
    raising = []
    for r in roots:
        i, j = r.span
        raising.append(_unit(N, i, j + 1))
    raising = tuple(raising)
    lowering = tuple(e.T.copy() for e in raising)
    return LadderSet(N, roots, cartan, raising, lowering)


def flip_operators(ls: LadderSet) -> list[FlipOperator]:
    """One ``F_alpha`` per positive root, in canonical root order."""
    return [
        FlipOperator(k, r, ls.raising[k] - ls.lowering[k])
        for k, r in enumerate(ls.roots)
    ]


def flip_stack(N: int) -> np.ndarray:
    """All flip matrices of dimension N stacked into shape ``(R, N, N)``."""
    return np.array([f.matrix for f in flip_operators(build_ladder_set(N))])


def _comm(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def verify_commutators(ls: LadderSet, tol: float = COMMUTATOR_TOL) -> CommutatorReport:
    """Check the Cartan-Weyl commutation relations on ``ls``.

    Relations checked, over all nonzero roots ``a, b``:

    * ``[H_i, H_j] = 0``
    * ``[H_j, E_a] = (a)_j E_a`` with covariant components ``(a)_j``
    * ``[E_a, E_{-a}] = 2 (a)^i H_i`` with contravariant components ``(a)^i``
    * ``[E_a, E_b] = +-E_{a+b}`` when ``a + b`` is a root; the sign depends on
      the matrix placement and is recorded in ``sign_table``
    * ``[E_a, E_b] = 0`` when ``a + b`` is neither a root nor zero
    """
    report = CommutatorReport(0.0)

    def record(name: str, residual: np.ndarray) -> None:
        r = float(np.max(np.abs(residual))) if residual.size else 0.0
        report.max_residual = max(report.max_residual, r)
        if r > tol:
            report.violations.append(f"{name} (residual {r:.3e})")

    H = ls.cartan
    for i, j in itertools.combinations_with_replacement(range(len(H)), 2):
        record(f"[H{i + 1},H{j + 1}]=0", _comm(H[i], H[j]))

    signed = [(r, ls.raising[k]) for k, r in enumerate(ls.roots)]
    signed += [(-r, ls.lowering[k]) for k, r in enumerate(ls.roots)]

    for a, Ea in signed:
        for j, Hj in enumerate(H):
            record(
                f"[H{j + 1},E_{a.label()}]=(a)_{j + 1}E",
                _comm(Hj, Ea) - float(a.covariant[j]) * Ea,
            )

    for k, a in enumerate(ls.roots):
        rhs = 2 * sum(float(c) * Hi for c, Hi in zip(a.contravariant, H))
        record(
            f"[E_{a.label()},E_-{a.label()}]=2(a)^iH_i",
            _comm(ls.raising[k], ls.lowering[k]) - rhs,
        )

    by_coeffs = {r.coeffs: (r, E) for r, E in signed}
    for (a, Ea), (b, Eb) in itertools.permutations(signed, 2):
        coeffs = tuple(x + y for x, y in zip(a.coeffs, b.coeffs))
        if not any(coeffs):
            continue
        c = _comm(Ea, Eb)
        name = f"[E_{a.label()},E_{b.label()}]"
        if coeffs in by_coeffs:
            total, Eab = by_coeffs[coeffs]
            plus, minus = c - Eab, c + Eab
            if np.max(np.abs(plus)) <= np.max(np.abs(minus)):
                report.sign_table[(a.label(), b.label())] = 1
                record(name + f"=+E_{total.label()}", plus)
            else:
                report.sign_table[(a.label(), b.label())] = -1
                record(name + f"=-E_{total.label()}", minus)
        else:
            record(name + "=0", c)
    return report
