"""Root system of the A_{N-1} Lie algebra (the algebra of SU(N)).

Roots are expanded over the simple roots ``alpha_1 ... alpha_{N-1}``.  The
expansion coefficients are the contravariant components; the covariant
components follow from the Dynkin diagram with simple roots normalized to unit
length, which puts ``1`` on the diagonal and ``-1/2`` between neighbours::

    alpha_1     = [1, -1/2, 0, ..., 0]
    alpha_2     = [-1/2, 1, -1/2, 0, ..., 0]
    ...
    alpha_{N-1} = [0, ..., 0, -1/2, 1]

All components are kept as :class:`fractions.Fraction` so the algebra layer is
exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidDimensionError

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Root:
    """A root of A_{N-1}.

    Attributes
    ----------
    coeffs : tuple of int
        Expansion over the simple roots (contravariant components).  Positive
        roots are contiguous runs of ones, negative roots runs of minus ones.
    covariant : tuple of Fraction
        Covariant components ``[alpha]_j``; these are the eigenvalues of
        ``ad(H_j)`` on ``E_alpha``.
    """

    coeffs: tuple[int, ...]
    covariant: tuple[Fraction, ...]

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    @property
    def contravariant(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c) for c in self.coeffs)

    @property
    def is_positive(self) -> bool:
        return any(self.coeffs) and all(c >= 0 for c in self.coeffs)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def span(self) -> tuple[int, int]:
        """0-based ``(start, end)`` of the run of simple roots, inclusive."""
        nz = [k for k, c in enumerate(self.coeffs) if c]
        return nz[0], nz[-1]

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.coeffs), tuple(-c for c in self.covariant))

    def __add__(self, other: Root) -> Root:
        return Root(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
            tuple(a + b for a, b in zip(self.covariant, other.covariant)),
        )

    def label(self) -> str:
        """Human-readable name such as ``a1+a2`` or ``-a3``."""
        if not any(self.coeffs):
            return "0"
        i, j = self.span
        sign = "" if self.coeffs[i] > 0 else "-"
        if i == j:
            return f"{sign}a{i + 1}"
        run = "+".join(f"a{k + 1}" for k in range(i, j + 1))
        return f"-({run})" if sign else run


@dataclass(frozen=True)
class Weight:
    """Covariant components of a weight of the fundamental representation."""

    covariant: tuple[Fraction, ...]


def _check_dim(N: int) -> None:
    if int(N) != N or N < 2:
        raise InvalidDimensionError(f"dimension must be an integer >= 2, got {N!r}")


def simple_root_table(N: int) -> list[tuple[Fraction, ...]]:
    """Covariant components of the N-1 simple roots, one row per root."""
    _check_dim(N)
    n = N - 1
    rows = []
    for k in range(n):
        row = [Fraction(0)] * n
        row[k] = Fraction(1)
        if k > 0:
            row[k - 1] = -HALF
        if k < n - 1:
            row[k + 1] = -HALF
        rows.append(tuple(row))
    return rows


@lru_cache(maxsize=None)
def simple_roots(N: int) -> tuple[Root, ...]:
    """The N-1 simple roots of A_{N-1}.

    >>> [str(c) for c in simple_roots(3)[0].covariant]
    ['1', '-1/2']
    """
    table = simple_root_table(N)
    return tuple(
        Root(tuple(int(k == i) for k in range(N - 1)), table[i]) for i in range(N - 1)
    )


def root_from_run(N: int, start: int, end: int) -> Root:
    """Positive root ``alpha_start + ... + alpha_end`` (0-based, inclusive)."""
    simple = simple_roots(N)
    if not 0 <= start <= end < N - 1:
        raise ValueError(f"invalid run ({start}, {end}) for N={N}")
    root = simple[start]
    for k in range(start + 1, end + 1):
        root = root + simple[k]
    return root


@lru_cache(maxsize=None)
def positive_roots(N: int) -> tuple[Root, ...]:
    """All N(N-1)/2 positive roots in canonical order.

    The order is by height, then by starting simple root.  For N = 3 this gives
    ``(alpha_1, alpha_2, alpha_1 + alpha_2)``, the slot order in which the
    concurrence vectors of two qutrits are usually written.
    """
    _check_dim(N)
    runs = [(i, j) for i in range(N - 1) for j in range(i, N - 1)]
    runs.sort(key=lambda r: (r[1] - r[0], r[0]))
    return tuple(root_from_run(N, i, j) for i, j in runs)


def all_roots(N: int) -> tuple[Root, ...]:
    """Positive roots followed by their negatives (the nonzero roots)."""
    pos = positive_roots(N)
    return pos + tuple(-r for r in pos)


def is_root(root: Root) -> bool:
    """True when ``root`` is a nonzero root of A_{N-1}."""
    c = root.coeffs
    if not any(c):
        return False
    sign = 1 if max(c) > 0 else -1
    if any(x not in (0, sign) for x in c):
        return False
    nz = [k for k, x in enumerate(c) if x]
    return nz[-1] - nz[0] + 1 == len(nz)


@lru_cache(maxsize=None)
def fundamental_weights(N: int) -> tuple[Weight, ...]:
    """Weights of the N basis states of the fundamental representation.

    Starting from the highest weight ``[1/2, 0, ..., 0]`` each next weight is
    obtained by subtracting the covariant components of the next simple root,
    mirroring the lowering chain ``|1> -> |2> -> ... -> |N>``.
    """
    table = simple_root_table(N)
    w = [Fraction(0)] * (N - 1)
    w[0] = HALF
    weights = [Weight(tuple(w))]
    for k in range(N - 1):
        w = [a - b for a, b in zip(w, table[k])]
        weights.append(Weight(tuple(w)))
    return tuple(weights)
