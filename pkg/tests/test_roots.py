from fractions import Fraction

import numpy as np
import pytest

from qudit_concurrence.errors import InvalidDimensionError
from qudit_concurrence.roots import (
    all_roots,
    fundamental_weights,
    is_root,
    positive_roots,
    root_from_run,
    simple_root_table,
    simple_roots,
)

H = Fraction(1, 2)
DIMS = range(2, 9)


def cartan_matrix(n):
    """A_{n-1} Cartan matrix: 2 on the diagonal, -1 between neighbours."""
    r = n - 1
    return 2 * np.eye(r) - np.eye(r, k=1) - np.eye(r, k=-1)


@pytest.mark.parametrize("n", DIMS)
def test_simple_root_table_is_half_cartan_matrix(n):
    table = np.array(simple_root_table(n), dtype=float)
    np.testing.assert_array_equal(table, cartan_matrix(n) / 2)


def test_n3_table():
    assert simple_root_table(3) == [(1, -H), (-H, 1)]


@pytest.mark.parametrize("n", DIMS)
def test_positive_root_count(n):
    assert len(positive_roots(n)) == n * (n - 1) // 2
    assert len(all_roots(n)) == n * (n - 1)


def test_n3_canonical_order():
    labels = [r.label() for r in positive_roots(3)]
    assert labels == ["a1", "a2", "a1+a2"]
    assert positive_roots(3)[2].covariant == (H, H)


def test_n4_order_by_height():
    labels = [r.label() for r in positive_roots(4)]
    assert labels == ["a1", "a2", "a3", "a1+a2", "a2+a3", "a1+a2+a3"]


@pytest.mark.parametrize("n", DIMS)
def test_covariant_is_sum_of_simple(n):
    simple = simple_roots(n)
    for r in positive_roots(n):
        i, j = r.span
        expected = [sum(simple[k].covariant[c] for k in range(i, j + 1)) for c in range(n - 1)]
        assert list(r.covariant) == expected


@pytest.mark.parametrize("n", DIMS)
def test_roots_have_unit_length(n):
    # (alpha, alpha) = covariant . contravariant = 1 with the half-Cartan metric
    for r in all_roots(n):
        assert sum(a * b for a, b in zip(r.covariant, r.contravariant)) == 1


@pytest.mark.parametrize("n", DIMS)
def test_weights_sum_to_zero(n):
    w = fundamental_weights(n)
    assert len(w) == n
    assert all(sum(x.covariant[c] for x in w) == 0 for c in range(n - 1))


@pytest.mark.parametrize("n", DIMS)
def test_weight_differences_are_simple_roots(n):
    w = fundamental_weights(n)
    simple = simple_roots(n)
    for k in range(n - 1):
        diff = tuple(a - b for a, b in zip(w[k].covariant, w[k + 1].covariant))
        assert diff == simple[k].covariant


def test_known_weights():
    assert [x.covariant for x in fundamental_weights(2)] == [(H,), (-H,)]
    assert [x.covariant for x in fundamental_weights(3)] == [(H, 0), (-H, H), (0, -H)]
    assert fundamental_weights(4)[0].covariant == (H, 0, 0)
    assert fundamental_weights(4)[3].covariant == (0, 0, -H)


def test_root_arithmetic():
    a1, a2 = simple_roots(3)
    s = a1 + a2
    assert s == root_from_run(3, 0, 1)
    assert is_root(s)
    assert not is_root(a1 + a1)
    assert (-s).label() == "-(a1+a2)"
    assert not (-s).is_positive
    assert s.height == 2


@pytest.mark.parametrize("n", [1, 0, -3])
def test_invalid_dimension(n):
    with pytest.raises(InvalidDimensionError):
        positive_roots(n)
    with pytest.raises(InvalidDimensionError):
        fundamental_weights(n)
