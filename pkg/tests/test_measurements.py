import pytest
from sympy.polys.domains import QQ

from errors import TrivialHomologyClass
from loop_group.factorization import grid_matrix
from measurements.boundary_matrix import boundary_matrix
from measurements.genfun import boundary_genfun, cycle_genfun, one_vertex_torus_table, one_vertex_torus_value
from measurements.lindstrom import lindstrom_matrix, noncrossing_families
from measurements.walks import (
    boundary_measurement, cycle_measurement, cycle_measurement_series, measurement_degree,
    underway_cycle_measurement,
)
from moves.grid_moves import apply_yb
from network.grid import Cross, GridNetwork, grid_to_network
from scalars.field_domain import SymbolicField
from scalars.linalg import determinant
from scalars.poly1 import Poly1, RatFun1
from tests.conftest import random_grid


def test_boundary_measurement_of_two_curls(two_curl_grid, two_curl_field):
    net = grid_to_network(two_curl_grid)
    x, y = two_curl_field.gen("x"), two_curl_field.gen("y")
    assert two_curl_field.equal(boundary_measurement(net, "L0", "R0", (3,)), x + y)
    assert two_curl_field.equal(boundary_measurement(net, "L0", "R0", (2,)), two_curl_field.one())
    assert two_curl_field.is_zero(boundary_measurement(net, "L0", "R0", (1,)))


def test_cycle_measurement_of_two_curls(two_curl_grid, two_curl_field):
    net = grid_to_network(two_curl_grid)
    x, y = two_curl_field.gen("x"), two_curl_field.gen("y")
    half = two_curl_field.from_rational(1, 2)
    assert two_curl_field.equal(cycle_measurement(net, (1,)), x + y)
    assert two_curl_field.equal(cycle_measurement(net, (2,)), half * x ** 2 + half * y ** 2)
    assert two_curl_field.equal(cycle_measurement_series(net, (2,)), half * x ** 2 + half * y ** 2)


def test_genfun_of_two_curls(two_curl_grid, two_curl_field):
    field = two_curl_field
    x, y = field.gen("x"), field.gen("y")
    expected = RatFun1(Poly1.monomial(field, 2),
                       Poly1(field, [field.one(), -x]) * Poly1(field, [field.one(), -y]))
    assert boundary_genfun(grid_to_network(two_curl_grid), "L0", "R0") == expected


def test_cycle_genfun_coefficients(two_curl_grid, two_curl_field):
    field = two_curl_field
    x, y = field.gen("x"), field.gen("y")
    third = field.from_rational(1, 3)
    coefficients = cycle_genfun(grid_to_network(two_curl_grid), 3)
    assert field.equal(coefficients[0], x + y)
    assert field.equal(coefficients[2], third * x ** 3 + third * y ** 3)


@pytest.mark.parametrize("m, n", [(0, 1), (0, 3), (1, 1), (1, 3), (2, 2), (2, 3), (3, 3), (2, 1)])
def test_one_vertex_torus(one_vertex_torus, m, n):
    expected = one_vertex_torus_value(n, m) * QQ(2) ** (n - m) if n >= m else QQ(0)
    assert cycle_measurement(one_vertex_torus, (m, n)) == expected


def test_one_vertex_torus_table():
    table = one_vertex_torus_table(6)
    assert table[3][6] == QQ(10, 3)
    assert table[0][4] == QQ(1, 4)
    assert table[4][2] == QQ(0)


def test_trivial_class_is_rejected(two_curl_grid):
    with pytest.raises(TrivialHomologyClass):
        cycle_measurement(grid_to_network(two_curl_grid), (0,))


def test_engines_agree(rng):
    net = grid_to_network(random_grid(rng, 3, "CXWX", letters=[1, 3]))
    for h in [(0,), (1,), (2,)]:
        assert boundary_measurement(net, "L0", "R1", h) == boundary_measurement(net, "L0", "R1", h, engine="series")


def test_boundary_matrix_is_the_column_product(rng):
    for kinds, letters in [("WXC", [2]), ("CCX", [1]), ("XWWX", [3, 1]), ("CWXC", [3])]:
        grid = random_grid(rng, 3, kinds, letters=letters)
        assert boundary_matrix(grid_to_network(grid)) == grid_matrix(grid)


def test_mixed_boundary_matrix(mixed_grid, mixed_field):
    g = mixed_field.gen
    p, q, r, s, t, u, v, w = (g(name) for name in "pqrstuvw")
    y = boundary_matrix(grid_to_network(mixed_grid))
    expected = {
        (0, 1): p + t + w,
        (1, 2): q + u,
        (2, 3): r + s + v,
        (0, 2): (p + t + w) * u,
        (1, 3): q * s + q * v + u * v,
    }
    for (i, j), value in expected.items():
        assert mixed_field.equal(y.periodic_entry(i, j), value)


def test_measurement_degree_of_two_curls(two_curl_grid):
    net = grid_to_network(two_curl_grid)
    assert measurement_degree(net, (2,)) == 2


def test_underway_cycles_of_whirls(rng):
    grid = random_grid(rng, 2, "WW")
    net = grid_to_network(grid)
    radii = [c.radius(grid.field) for c in grid.columns]
    assert underway_cycle_measurement(net, (1,)) == sum(radii)
    assert underway_cycle_measurement(net, (2,)) == sum(r ** 2 for r in radii) / 2


def test_single_lindstrom_entry_is_a_boundary_measurement(two_curl_grid, two_curl_field):
    net = grid_to_network(two_curl_grid)
    x, y = two_curl_field.gen("x"), two_curl_field.gen("y")
    rows, det = lindstrom_matrix(net, [("L0", 0)], [("R0", 3)])
    assert two_curl_field.equal(det, x + y)
    assert two_curl_field.equal(rows[0][0], det)
    families = noncrossing_families(net, [("L0", 0)], [("R0", 3)])
    total = two_curl_field.zero()
    for _, weight in families:
        total = total + weight
    assert two_curl_field.equal(total, x + y)


def test_lindstrom_needs_matching_sizes(two_curl_grid):
    with pytest.raises(ValueError):
        lindstrom_matrix(grid_to_network(two_curl_grid), [("L0", 0)], [])


@pytest.mark.parametrize("lift", [0, 1, 2])
def test_lindstrom_determinant_is_nonnegative(rng, lift):
    grid = random_grid(rng, 2, "WXC", letters=[1])
    _, det = lindstrom_matrix(grid_to_network(grid), [("L0", 0), ("L1", 0)], [("R0", lift), ("R1", lift)])
    assert det >= 0


def test_crossings_with_a_shared_row_have_a_unit_determinant(qq_field):
    for crosses in ([(1, QQ(3))], [(1, QQ(3)), (1, QQ(2, 5))]):
        grid = GridNetwork(2, tuple(Cross(k, a) for k, a in crosses), qq_field)
        net = grid_to_network(grid)
        sources, sinks = [("L0", 0), ("L1", 0)], [("R0", 0), ("R1", 0)]
        _, det = lindstrom_matrix(net, sources, sinks)
        families = noncrossing_families(net, sources, sinks)
        assert det == QQ(1)
        assert sum(weight for _, weight in families) == det


def test_determinant_of_the_three_source_matchings():
    field = SymbolicField(["p", "q", "r", "s", "t", "v"])
    p, q, r, s, t, v = (field.gen(name) for name in "pqrstv")
    lower = v * t + v * s + q * s
    rows = [
        [(p * v + p * q + r * q) * lower, p * v * t + p * v * s + p * q * s + r * q * s, -p * s],
        [lower, t + s, field.zero()],
        [-(v + q) * lower, -lower, t + s],
    ]
    expected = (p * q * v * t ** 3 + p * q ** 2 * s * t ** 2 + r * q * v * t ** 3 + r * q ** 2 * s * t ** 2
                + r * q ** 2 * s ** 2 * t + p * v * q * s * t ** 2 + 2 * r * q * v * t ** 2 * s
                + r * q * v * t * s ** 2)
    det = determinant(rows, field)
    assert field.equal(det, expected)
    assert field.equal(det, q * t * lower * (p * t + r * t + r * s))


def test_three_crossings_on_three_rows():
    field = SymbolicField(["x", "y", "z"])
    x, y, z = (field.gen(name) for name in "xyz")
    grid = GridNetwork(3, (Cross(1, x), Cross(2, y), Cross(1, z)), field)
    y_matrix = boundary_matrix(grid_to_network(grid))
    assert field.equal(y_matrix.periodic_entry(0, 1), x + z)
    assert field.equal(y_matrix.periodic_entry(1, 2), y)
    assert field.equal(y_matrix.periodic_entry(0, 2), x * y)
    assert y_matrix == grid_matrix(grid)
    flipped = apply_yb(grid, 0)
    assert [(c.k, c.a) for c in flipped.columns] == [(2, y * z / (x + z)), (1, x + z), (2, x * y / (x + z))]
    assert boundary_matrix(grid_to_network(flipped)) == y_matrix
