from itertools import product

import pytest
from sympy.polys.domains import QQ

from crystal.geometric import CrystalPoint, FactorType, e_c, eps, gamma, phi, r_matrix, weyl_s
from errors import InvalidNetwork
from scalars.field_domain import SymbolicField
from tests.conftest import rationals

M, N = FactorType.M, FactorType.N


def random_point(rng, kinds, field, n=3):
    return CrystalPoint(tuple((kind, rationals(rng, n)) for kind in kinds), field)


def test_two_factor_eps_phi(qq_field):
    point = CrystalPoint(((M, (QQ(1), QQ(2))), (M, (QQ(3), QQ(4)))), qq_field)
    assert eps(point, 0) == QQ(8, 5)
    assert phi(point, 0) == QQ(3, 5)
    assert gamma(point, 0) == QQ(3, 8)


def test_dual_factor_swaps_eps_and_phi(qq_field):
    x = (QQ(1), QQ(2), QQ(5))
    assert eps(CrystalPoint(((M, x),), qq_field), 1) == phi(CrystalPoint(((N, x),), qq_field), 1)
    assert phi(CrystalPoint(((M, x),), qq_field), 2) == QQ(5)


@pytest.mark.parametrize("kinds", ["M", "MM", "MNM", "NNM", "NMN"])
def test_crystal_axioms(rng, qq_field, kinds):
    point = random_point(rng, kinds, qq_field)
    c, d = QQ(3, 2), QQ(5, 7)
    for i in range(3):
        moved = e_c(point, i, c)
        assert eps(moved, i) == eps(point, i) / c
        assert phi(moved, i) == phi(point, i) * c
        assert e_c(moved, i, d).equals(e_c(point, i, c * d))
        assert e_c(point, i, QQ(1)).equals(point)


@pytest.mark.parametrize("kinds", ["MM", "MNM", "NNM"])
def test_weyl_reflections_are_involutions(rng, qq_field, kinds):
    point = random_point(rng, kinds, qq_field)
    for i in range(3):
        once = weyl_s(point, i)
        assert gamma(once, i) == 1 / gamma(point, i)
        assert weyl_s(once, i).equals(point)


@pytest.mark.parametrize("kinds", ["MM", "NN", "MN", "NM"])
def test_r_matrix_is_a_crystal_isomorphism(rng, qq_field, kinds):
    point = random_point(rng, kinds, qq_field)
    swapped = r_matrix(point, 0)
    assert swapped.kinds() == tuple(reversed(kinds))
    assert r_matrix(swapped, 0).equals(point)
    for i in range(3):
        assert eps(swapped, i) == eps(point, i)
        assert phi(swapped, i) == phi(point, i)
        assert r_matrix(e_c(point, i, QQ(2)), 0).equals(e_c(swapped, i, QQ(2)))


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("kinds", ["".join(p) for p in product("MN", repeat=3)])
def test_r_matrix_braid_relation(rng, qq_field, n, kinds):
    point = random_point(rng, kinds, qq_field, n)
    left = r_matrix(r_matrix(r_matrix(point, 0), 1), 0)
    right = r_matrix(r_matrix(r_matrix(point, 1), 0), 1)
    assert left.equals(right)


@pytest.mark.parametrize("kinds", ["M", "MN", "MNM", "NNM"])
def test_verma_relation(rng, qq_field, kinds):
    point = random_point(rng, kinds, qq_field)
    c, d = QQ(3, 2), QQ(5, 7)
    for i in range(3):
        j = (i + 1) % 3
        left = e_c(e_c(e_c(point, i, d), j, c * d), i, c)
        right = e_c(e_c(e_c(point, j, c), i, c * d), j, d)
        assert left.equals(right)


def test_gamma_scales_by_the_cartan_matrix(rng, qq_field):
    point = random_point(rng, "MNM", qq_field, 4)
    c = QQ(3, 2)
    scale = {0: c * c, 1: 1 / c, 2: QQ(1), 3: 1 / c}
    for i in range(4):
        moved = e_c(point, i, c)
        for j in range(4):
            assert gamma(moved, j) == scale[(j - i) % 4] * gamma(point, j)


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("kinds", ["MM", "MNM", "NMN"])
def test_weyl_braid_relation(rng, qq_field, n, kinds):
    point = random_point(rng, kinds, qq_field, n)
    for i in range(n):
        j = (i + 1) % n
        assert weyl_s(weyl_s(weyl_s(point, i), j), i).equals(weyl_s(weyl_s(weyl_s(point, j), i), j))


def test_eps_phi_of_a_mixed_triple():
    field = SymbolicField([f"{letter}{r}" for letter in "abc" for r in range(3)])
    a, b, c = ([field.gen(f"{letter}{r}") for r in range(3)] for letter in "abc")
    point = CrystalPoint(((M, a), (N, b), (M, c)), field)
    for i in range(3):
        k = (i + 1) % 3
        denominator = b[k] * c[i] + a[k] * c[i] + a[k] * b[i]
        assert field.equal(phi(point, i), a[i] * b[k] * c[i] / denominator)
        assert field.equal(eps(point, i), a[k] * b[i] * c[k] / denominator)


def test_points_reject_bad_factors(qq_field):
    with pytest.raises(InvalidNetwork):
        CrystalPoint(((M, (QQ(1), QQ(0))),), qq_field)
    with pytest.raises(InvalidNetwork):
        CrystalPoint(((M, (QQ(1), QQ(2))), (N, (QQ(1),))), qq_field)
    with pytest.raises(InvalidNetwork):
        r_matrix(CrystalPoint(((M, (QQ(1), QQ(2))),), qq_field), 0)
