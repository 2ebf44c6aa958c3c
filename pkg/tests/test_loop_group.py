from random import Random

import pytest
from sympy.polys.domains import QQ

from errors import NotReducedWord
from loop_group import affine_perm
from loop_group.factorization import grid_for_phi, grid_matrix, phi_abw, phi_params, tnn_window_check, wire_endpoints
from loop_group.loop_element import LoopElement, chevalley, curl_matrix, whirl_matrix
from tests.conftest import random_grid, rationals


def test_whirl_and_curl_entries(qq_field, rng):
    x = rationals(rng, 3)
    m = whirl_matrix(x, qq_field)
    assert m.periodic_entry(2, 3) == x[2]
    assert m.periodic_entry(1, 3) == QQ(0)
    n = curl_matrix(x, qq_field)
    assert n.periodic_entry(0, 2) == x[0] * x[1]
    assert n.periodic_entry(1, 4) == x[0] * x[1] * x[2]
    assert n.periodic_entry(2, 1) == QQ(0)


def test_chevalley_generators(qq_field):
    u = chevalley(3, 3, QQ(5), qq_field)
    assert u.periodic_entry(2, 3) == QQ(5)
    assert u.periodic_entry(5, 6) == QQ(5)
    assert u * chevalley(3, 3, QQ(-5), qq_field) == LoopElement.identity(3, qq_field)


def test_conjugate_shift(qq_field, rng):
    m = whirl_matrix(rationals(rng, 3), qq_field)
    shifted = m.conjugate_shift(1)
    for i in range(3):
        assert shifted.periodic_entry(i + 1, i + 2) == m.periodic_entry(i, i + 1)


def test_phi_matches_the_grid(qq_field, rng):
    a_params = [rationals(rng, 3)]
    b_params = [rationals(rng, 3), rationals(rng, 3)]
    word = [1, 2]
    c_params = list(rationals(rng, 2))
    grid = grid_for_phi(a_params, b_params, word, c_params, 3, qq_field)
    assert grid_matrix(grid) == phi_abw(a_params, b_params, word, c_params, 3, qq_field)
    recovered = phi_params(grid)
    assert [list(p) for p in recovered[0]] == [list(p) for p in a_params]
    assert [list(p) for p in recovered[1]] == [list(p) for p in b_params]
    assert recovered[2] == word
    assert recovered[3] == c_params


def test_phi_needs_a_reduced_word(qq_field):
    with pytest.raises(NotReducedWord):
        phi_abw([], [], [1, 1], [QQ(1), QQ(2)], 3, qq_field)


def test_positive_grids_are_totally_nonnegative(rng):
    grid = random_grid(rng, 3, "WXCXW", letters=[1, 0])
    y = grid_matrix(grid)
    assert y.is_unipotent()
    assert tnn_window_check(y, 3, [0, 1, 2])


@pytest.mark.parametrize("seed", range(50))
def test_random_positive_grids_are_totally_nonnegative(seed):
    rng = Random(seed)
    n = rng.choice([2, 3])
    kinds = "".join(rng.choice("WCX") for _ in range(rng.randint(2, 5)))
    letters = [rng.randrange(n) for _ in kinds]
    y = grid_matrix(random_grid(rng, n, kinds, letters=letters))
    assert tnn_window_check(y, 3, [0, 1])


def test_negative_weights_are_caught(qq_field):
    y = chevalley(3, 1, QQ(-1), qq_field)
    assert not tnn_window_check(y, 2, [0])


def test_affine_permutations():
    assert affine_perm.simple_reflection(3, 0) == (0, 2, 4)
    assert affine_perm.length(affine_perm.simple_reflection(3, 0)) == 1
    assert affine_perm.is_reduced(3, [1, 2, 1])
    assert affine_perm.is_reduced(3, [0, 1, 2, 0])
    assert not affine_perm.is_reduced(3, [1, 1])
    w = affine_perm.word_to_window(3, [1, 2, 0])
    assert affine_perm.compose(w, affine_perm.inverse(w)) == affine_perm.identity(3)
    assert sum(w) == sum(affine_perm.identity(3))


def test_wire_endpoints_of_a_single_crossing(rng):
    grid = random_grid(rng, 3, "X", letters=[1])
    assert wire_endpoints(grid) == (2, 1, 3)
