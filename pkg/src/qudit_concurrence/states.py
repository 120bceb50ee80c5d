"""Bipartite pure states, density matrices and the catalog of named states.

A pure state on ``N_A x N_B`` is stored as its coefficient matrix
``a[mu, j]`` in ``|psi> = sum a[mu, j] |mu> (x) |j>``; arrays are 0-based, the
printed labels ``|1>, |2>, ...`` are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DensityMatrixError, InvalidDimensionError, NormalizationError
from .linalg import jacobi_eigh

NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalized bipartite pure state given by its coefficient matrix."""

    coeffs: np.ndarray

    def __post_init__(self):
        a = np.array(self.coeffs, dtype=complex)
        if a.ndim != 2 or min(a.shape) < 1:
            raise InvalidDimensionError(f"coefficient matrix must be 2-D, got shape {a.shape}")
        norm_sq = float(np.sum(np.abs(a) ** 2))
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise NormalizationError(
                f"state is not normalized: sum |a|^2 = {norm_sq:.15g} "
                f"(off by {abs(norm_sq - 1.0):.3e})"
            )
        a.setflags(write=False)
        object.__setattr__(self, "coeffs", a)

    @classmethod
    def normalized(cls, coeffs) -> PureState:
        """Build a state after rescaling ``coeffs`` to unit norm.

        Zero vectors are rejected rather than silently accepted.
        """
        a = np.array(coeffs, dtype=complex)
        norm = np.linalg.norm(a)
        if norm == 0.0:
            raise NormalizationError("cannot normalize the zero vector")
        return cls(a / norm)

    @classmethod
    def from_terms(cls, dim_a: int, dim_b: int, terms: Iterable[tuple[complex, int, int]]) -> PureState:
        """Normalized state from ``(amplitude, i, j)`` triples with 1-based ``i, j``."""
        a = np.zeros((dim_a, dim_b), dtype=complex)
        for amp, i, j in terms:
            a[i - 1, j - 1] += amp
        return cls.normalized(a)

    @classmethod
    def product(cls, phi_a, phi_b) -> PureState:
        """``|phi_a> (x) |phi_b>``, each factor normalized first."""
        u = np.asarray(phi_a, dtype=complex)
        v = np.asarray(phi_b, dtype=complex)
        return cls.normalized(np.outer(u, v))

    @classmethod
    def from_vector(cls, vec, dim_a: int, dim_b: int) -> PureState:
        """From a joint-space vector in ``|mu> (x) |j>`` (row-major) order."""
        return cls(np.asarray(vec, dtype=complex).reshape(dim_a, dim_b))

    @property
    def dim_a(self) -> int:
        return self.coeffs.shape[0]

    @property
    def dim_b(self) -> int:
        return self.coeffs.shape[1]

    @property
    def vector(self) -> np.ndarray:
        return self.coeffs.reshape(-1)

    def __repr__(self):
        return f"PureState({self.dim_a}x{self.dim_b})"


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite operator on ``N_A N_B``."""

    matrix: np.ndarray
    dim_a: int
    dim_b: int

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        n = self.dim_a * self.dim_b
        if self.dim_a < 1 or self.dim_b < 1 or m.shape != (n, n):
            raise InvalidDimensionError(
                f"matrix of shape {m.shape} does not match dims {self.dim_a}x{self.dim_b}"
            )
        herm = float(np.max(np.abs(m - m.conj().T)))
        if herm > HERMITIAN_TOL:
            raise DensityMatrixError(f"matrix is not Hermitian (max deviation {herm:.3e})")
        tr = np.trace(m).real
        if abs(tr - 1.0) > TRACE_TOL:
            raise DensityMatrixError(f"trace is {tr:.15g}, expected 1")
        w = jacobi_eigh(m, vectors=False)
        if w[0] < -PSD_TOL:
            raise DensityMatrixError(f"matrix has negative eigenvalue {w[0]:.3e}")
        m = 0.5 * (m + m.conj().T)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.dim_a * self.dim_b

    def spectrum(self):
        """Eigenvalues (ascending) and eigenvectors of the density matrix."""
        return jacobi_eigh(self.matrix)

    def __repr__(self):
        return f"DensityMatrix({self.dim_a}x{self.dim_b})"


def reduced_density(ps: PureState, side: str = "B") -> np.ndarray:
    """Reduced density matrix: ``a a^dagger`` for side A, ``a^dagger a`` for B.

    >>> phi = PureState.from_terms(3, 3, [(1, 1, 1), (1, 2, 2), (1, 3, 3)])
    >>> np.allclose(reduced_density(phi, "B"), np.eye(3) / 3)
    True
    """
    if not isinstance(ps, PureState):
        ps = PureState(ps)
    a = ps.coeffs
    side = side.upper()
    if side == "A":
        return a @ a.conj().T
    if side == "B":
        return a.conj().T @ a
    raise ValueError(f"side must be 'A' or 'B', got {side!r}")


def make_density(source) -> DensityMatrix:
    """Density matrix of a pure state or of a weighted mixture.

    Parameters
    ----------
    source : PureState or sequence of (weight, PureState)
        Weights must be nonnegative and sum to one within 1e-12.
    """
    if isinstance(source, PureState):
        source = [(1.0, source)]
    source = list(source)
    if not source:
        raise ValueError("empty mixture")
    weights = np.array([float(w) for w, _ in source])
    if np.any(weights < 0):
        raise ValueError(f"negative mixture weight {weights.min()}")
    if abs(weights.sum() - 1.0) > 1e-12:
        raise ValueError(f"mixture weights sum to {weights.sum():.15g}, expected 1")
    da, db = source[0][1].dim_a, source[0][1].dim_b
    rho = np.zeros((da * db, da * db), dtype=complex)
    for w, ps in source:
        if (ps.dim_a, ps.dim_b) != (da, db):
            raise InvalidDimensionError("mixture components have different shapes")
        v = ps.vector
        rho += w * np.outer(v, v.conj())
    return DensityMatrix(rho, da, db)


def maximally_mixed(dim_a: int, dim_b: int) -> DensityMatrix:
    n = dim_a * dim_b
    return DensityMatrix(np.eye(n) / n, dim_a, dim_b)


def werner(p: float) -> DensityMatrix:
    """Two-qubit Werner state ``p |psi-><psi-| + (1 - p) I/4``."""
    psi = catalog_state("bell.psi-").vector
    rho = p * np.outer(psi, psi.conj()) + (1 - p) * np.eye(4) / 4
    return DensityMatrix(rho, 2, 2)


# --------------------------------------------------------------------------
# catalog

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    state: PureState
    expected_concurrence: tuple[complex, ...] | None = None
    description: str = ""


_W = np.exp(2j * np.pi / 3)
_WB = _W.conjugate()
_T = 2 / 3


def _su3_entries() -> list[CatalogEntry]:
    s = lambda terms: PureState.from_terms(3, 3, terms)  # noqa: E731
    out = [
        CatalogEntry("su3.phi1", s([(1, 1, 1), (1, 2, 2), (1, 3, 3)]),
                     (_T, 0, 0, 0, _T, 0, 0, 0, _T), "(|11>+|22>+|33>)/sqrt3"),
        CatalogEntry("su3.phi2", s([(1, 1, 1), (_W, 2, 2), (_WB, 3, 3)]),
                     (_T * _WB, 0, 0, 0, _T, 0, 0, 0, _T * _W),
                     "(|11>+w|22>+w*|33>)/sqrt3"),
        CatalogEntry("su3.phi3", s([(1, 1, 1), (_WB, 2, 2), (_W, 3, 3)]),
                     (_T * _W, 0, 0, 0, _T, 0, 0, 0, _T * _WB),
                     "(|11>+w*|22>+w|33>)/sqrt3"),
    ]
    for sign, tag in ((1, "+"), (-1, "-")):
        c = -sign
        out += [
            CatalogEntry(f"su3.psi{tag}1", s([(1, 1, 2), (sign, 2, 1)]),
                         (c, 0, 0, 0, 0, 0, 0, 0, 0), f"(|12>{tag}|21>)/sqrt2"),
            CatalogEntry(f"su3.psi{tag}2", s([(1, 2, 3), (sign, 3, 2)]),
                         (0, 0, 0, 0, c, 0, 0, 0, 0), f"(|23>{tag}|32>)/sqrt2"),
            CatalogEntry(f"su3.psi{tag}3", s([(1, 1, 3), (sign, 3, 1)]),
                         (0, 0, 0, 0, 0, 0, 0, 0, c), f"(|13>{tag}|31>)/sqrt2"),
        ]
    # qutrit generalized Bell basis: shift 1 (phi4..6) and shift 2 (phi7..9)
    phases = ((1, 1, 1), (1, _W, _WB), (1, _WB, _W))
    shifted = {
        1: ((1, 2), (2, 3), (3, 1)),
        2: ((2, 1), (3, 2), (1, 3)),
    }
    n = 4
    for shift in (1, 2):
        for ph in phases:
            terms = [(f, i, j) for f, (i, j) in zip(ph, shifted[shift])]
            expected = (0, _T, 0, 0, 0, -_T, -_T, 0, 0) if n == 4 else None
            out.append(CatalogEntry(f"su3.phi{n}", s(terms), expected))
            n += 1
    return out


# spin labels m = 1, 0, -1 map to basis indices 1, 2, 3
_M = {1: 1, 0: 2, -1: 3}


def _so3_entries() -> list[CatalogEntry]:
    def s(terms):
        return PureState.from_terms(3, 3, [(c, _M[m1], _M[m2]) for c, m1, m2 in terms])

    out = []
    for sign, tag in ((1, "+"), (-1, "-")):
        c = -sign
        out += [
            CatalogEntry(f"so3.chi{tag}1", s([(1, 0, 1), (sign, 1, 0)]),
                         (c, 0, 0, 0, 0, 0, 0, 0, 0), f"(|0 1>{tag}|1 0>)/sqrt2"),
            CatalogEntry(f"so3.chi{tag}m1", s([(1, -1, 0), (sign, 0, -1)]),
                         (0, 0, 0, 0, c, 0, 0, 0, 0), f"(|-1 0>{tag}|0 -1>)/sqrt2"),
        ]
    out += [
        CatalogEntry("so3.chi+0", s([(1, -1, 1), (2, 0, 0), (1, 1, -1)]),
                     (0, -_T, 0, -_T, 0, 0, 0, 0, -1 / 3),
                     "(|-1 1>+2|0 0>+|1 -1>)/sqrt6"),
        CatalogEntry("so3.chi-0", s([(1, -1, 1), (-1, 1, -1)]),
                     (0, 0, 0, 0, 0, 0, 0, 0, 1), "(|-1 1>-|1 -1>)/sqrt2"),
        CatalogEntry("so3.chi00", s([(1, -1, 1), (-1, 0, 0), (1, 1, -1)]),
                     (0, _T, 0, _T, 0, 0, 0, 0, -_T), "(|-1 1>-|0 0>+|1 -1>)/sqrt3"),
        CatalogEntry("so3.phi+", s([(1, 1, 1), (1, -1, -1)]),
                     (0, 0, 0, 0, 0, 0, 0, 0, 1), "(|1 1>+|-1 -1>)/sqrt2"),
        CatalogEntry("so3.phi-", s([(1, 1, 1), (-1, -1, -1)]),
                     (0, 0, 0, 0, 0, 0, 0, 0, -1), "(|1 1>-|-1 -1>)/sqrt2"),
    ]
    return out


def _bell_entries() -> list[CatalogEntry]:
    s = lambda terms: PureState.from_terms(2, 2, terms)  # noqa: E731
    return [
        CatalogEntry("bell.phi+", s([(1, 1, 1), (1, 2, 2)]), (1,), "(|uu>+|dd>)/sqrt2"),
        CatalogEntry("bell.phi-", s([(1, 1, 1), (-1, 2, 2)]), (-1,), "(|uu>-|dd>)/sqrt2"),
        CatalogEntry("bell.psi+", s([(1, 1, 2), (1, 2, 1)]), (-1,), "(|ud>+|du>)/sqrt2"),
        CatalogEntry("bell.psi-", s([(1, 1, 2), (-1, 2, 1)]), (1,), "(|ud>-|du>)/sqrt2"),
    ]


_CATALOG: dict[str, CatalogEntry] | None = None


def _catalog_map() -> dict[str, CatalogEntry]:
    global _CATALOG
    if _CATALOG is None:
        entries = _su3_entries() + _so3_entries() + _bell_entries()
        _CATALOG = {e.name: e for e in entries}
    return _CATALOG


def catalog() -> list[CatalogEntry]:
    """Every named state, in a fixed order."""
    return list(_catalog_map().values())


def catalog_entry(name: str) -> CatalogEntry:
    try:
        return _catalog_map()[name]
    except KeyError:
        raise KeyError(f"unknown catalog state {name!r}") from None


def catalog_state(name: str) -> PureState:
    return catalog_entry(name).state


# orthonormal families of catalog states
FAMILIES: dict[str, tuple[str, ...]] = {
    "su3": ("su3.phi1", "su3.phi2", "su3.phi3", "su3.psi+1", "su3.psi+2", "su3.psi+3",
            "su3.psi-1", "su3.psi-2", "su3.psi-3"),
    "su3.bell": tuple(f"su3.phi{k}" for k in range(1, 10)),
    "so3": ("so3.chi+1", "so3.chi+0", "so3.chi+m1", "so3.phi+", "so3.phi-",
            "so3.chi-1", "so3.chi-0", "so3.chi-m1", "so3.chi00"),
    "bell": ("bell.phi+", "bell.phi-", "bell.psi+", "bell.psi-"),
}


def family_states(family: str) -> list[PureState]:
    return [catalog_state(n) for n in FAMILIES[family]]


# three-state bases used for subspace analysis
BASES: dict[str, tuple[str, ...]] = {
    "su3.psi-": ("su3.psi-1", "su3.psi-2", "su3.psi-3"),
    "su3.psi+": ("su3.psi+1", "su3.psi+2", "su3.psi+3"),
    "su3.phi": ("su3.phi1", "su3.phi2", "su3.phi3"),
    "so3.triplet": ("so3.chi-1", "so3.chi-0", "so3.chi-m1"),
    "so3.pentad": ("so3.chi+1", "so3.chi+0", "so3.chi+m1"),
    "so3.singlet-phi": ("so3.chi00", "so3.phi+", "so3.phi-"),
}


def catalog_basis(name: str) -> list[PureState]:
    """States of a named basis such as ``"so3.pentad"``."""
    try:
        names = BASES[name]
    except KeyError:
        raise KeyError(f"unknown basis {name!r}; known: {', '.join(BASES)}") from None
    return [catalog_state(n) for n in names]


def gram_matrix(states: Sequence[PureState]) -> np.ndarray:
    vecs = np.array([s.vector for s in states])
    return vecs.conj() @ vecs.T
