from itertools import combinations_with_replacement, product

import pytest

from crystal.geometric import FactorType, eps, phi
from crystal.tropical import (
    TropicalPoint, counts_row, jdt_r_oracle, rectify, row_counts, trop_e, trop_e_geometric, trop_eps_phi, trop_r,
)
from errors import InvalidNetwork, PatternMismatch
from moves.grid_moves import whirl_curl_weights
from scalars.field_tropical import MinPlus

M, N = FactorType.M, FactorType.N

MIXED = TropicalPoint(((M, (2, 0, 1)), (N, (1, 0, 2)), (M, (0, 3, 0))))


def bounded_vectors(length, budget):
    """Nonnegative integer vectors of the given length with entry sum at most budget"""
    if length == 0:
        yield ()
        return
    for first in range(budget + 1):
        for rest in bounded_vectors(length - 1, budget - first):
            yield (first,) + rest


def rows(n, max_length):
    return [row for length in range(1, max_length + 1)
            for row in combinations_with_replacement(range(1, n + 1), length)]


def missing_counts(columns, n):
    """x[j] of an (n-1)-row tableau: the number of columns without the entry j+1"""
    return tuple(sum(1 for column in columns if value not in column) for value in range(1, n + 1))


def test_eps_phi_are_tropical_geometric_ones():
    geometric = MIXED.to_geometric()
    for i in range(3):
        expected = (eps(geometric, i).to_int(), phi(geometric, i).to_int())
        assert trop_eps_phi(MIXED, i) == expected


def test_kashiwara_operators_are_tropical_geometric_ones():
    for i in range(3):
        if trop_eps_phi(MIXED, i)[0] == 0:
            assert trop_e(MIXED, i) is None
            continue
        moved = trop_e(MIXED, i)
        assert moved == trop_e_geometric(MIXED, i)
        assert trop_eps_phi(moved, i)[0] == trop_eps_phi(MIXED, i)[0] - 1


def test_kashiwara_operator_on_rows():
    b = TropicalPoint(((M, (1, 1)), (M, (0, 1))))
    assert trop_eps_phi(b, 0) == (2, 1)
    assert trop_e(b, 0) == TropicalPoint(((M, (2, 0)), (M, (0, 1))))


def test_row_insertion():
    assert rectify((2, 1, 1)) == ((1, 1), (2,))
    assert rectify((3, 1, 2)) == ((1, 2), (3,))
    assert row_counts((1, 1, 3), 3) == (2, 0, 1)
    assert counts_row((2, 0, 1)) == (1, 1, 3)
    with pytest.raises(PatternMismatch):
        row_counts((4,), 3)


def test_jdt_oracle():
    assert jdt_r_oracle((2,), (1, 1)) == ((1, 2), (1,))
    with pytest.raises(PatternMismatch):
        jdt_r_oracle((2, 1), (1,))


@pytest.mark.parametrize("left, right, n", [
    ((1, 1), (2,), 2),
    ((2,), (1,), 2),
    ((1, 3), (2,), 3),
])
def test_tropical_r_matches_the_oracle(left, right, n):
    b = TropicalPoint(((M, row_counts(left, n)), (M, row_counts(right, n))))
    top, bottom = jdt_r_oracle(right, left)
    assert trop_r(b, 0) == TropicalPoint(((M, row_counts(bottom, n)), (M, row_counts(top, n))))


def test_tropical_r_matches_the_oracle_on_all_small_rows():
    checked = 0
    for left, right in product(rows(3, 5), repeat=2):
        if len(left) + len(right) > 6:
            continue
        b = TropicalPoint(((M, row_counts(left, 3)), (M, row_counts(right, 3))))
        top, bottom = jdt_r_oracle(right, left)
        assert trop_r(b, 0) == TropicalPoint(((M, row_counts(bottom, 3)), (M, row_counts(top, 3)))), (left, right)
        checked += 1
    assert checked == 757


@pytest.mark.parametrize("size", [2, 3])
def test_kashiwara_operators_agree_on_all_small_points(size):
    for kinds in product((M, N), repeat=size):
        for values in bounded_vectors(3 * size, 5):
            b = TropicalPoint(tuple((kind, values[3 * k:3 * k + 3]) for k, kind in enumerate(kinds)))
            for i in range(3):
                eps_i, phi_i = trop_eps_phi(b, i)
                moved = trop_e(b, i)
                if eps_i == 0:
                    assert moved is None
                    continue
                assert moved == trop_e_geometric(b, i), (b, i)
                assert trop_eps_phi(moved, i) == (eps_i - 1, phi_i + 1)


def test_tropical_r_swaps_mixed_types():
    b = TropicalPoint(((N, (1, 1, 1)), (M, (0, 3, 0))))
    swapped = trop_r(b, 0)
    assert swapped == TropicalPoint(((M, (1, 2, 0)), (N, (2, 0, 1))))
    assert trop_r(swapped, 0) == b


def test_row_and_two_row_tableau_swap():
    # row 122 next to the tableau with columns 12, 23, 23
    row, columns = (1, 2, 2), [(1, 2), (2, 3), (2, 3)]
    b = TropicalPoint(((M, row_counts(row, 3)), (N, missing_counts(columns, 3))))
    assert b == TropicalPoint(((M, (1, 2, 0)), (N, (2, 0, 1))))
    swapped = trop_r(b, 0)
    assert swapped == TropicalPoint(((N, missing_counts([(1, 2), (1, 3), (2, 3)], 3)),
                                     (M, row_counts((2, 2, 2), 3))))
    # both skew tableaux rectify to the same straight shape
    rectified = ((1, 1, 2, 2, 2, 2), (2, 3, 3))
    assert rectify((1, 2, 2, 2, 3, 3, 1, 2, 2)) == rectified
    assert rectify((2, 3, 3, 1, 1, 2, 2, 2, 2)) == rectified


def test_tropical_whirl_curl_weights():
    x = tuple(MinPlus(v) for v in (1, 2, 0))
    y = tuple(MinPlus(v) for v in (2, 0, 1))
    curl, whirl = whirl_curl_weights(x, y)
    assert curl[0] == MinPlus(1)
    assert [v.to_int() for v in curl] == [1, 1, 1]
    assert [v.to_int() for v in whirl] == [0, 3, 0]


def test_negative_counts_are_rejected():
    with pytest.raises(InvalidNetwork):
        TropicalPoint(((M, (1, -1)),))
