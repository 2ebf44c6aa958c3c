from collections import defaultdict

import numpy as np
import pytest
from sympy.polys.domains import QQ

from errors import InvalidNetwork
from measurements.boundary_matrix import boundary_matrix
from measurements.walks import cycle_measurement
from moves.torus_action import SNF, integer_kernel, snake_graph, torus_action_apply, torus_action_basis
from network.grid import grid_to_network
from network.surface_network import SurfaceKind
from tests.conftest import random_grid


def test_smith_normal_form():
    matrix = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    diagonal, left, right, rank = SNF(matrix).compute()
    assert rank == 3
    assert [diagonal[i, i] for i in range(3)] == [2, 6, 12]
    assert (left.dot(np.array(matrix, dtype=object)).dot(right) == diagonal).all()


def test_integer_kernel():
    kernel = integer_kernel([[1, 2, 3]], 3)
    assert len(kernel) == 2
    for w in kernel:
        assert w[0] + 2 * w[1] + 3 * w[2] == 0
    assert integer_kernel([[1, 1], [1, -1]], 2) == []
    assert integer_kernel([], 2) == [(1, 0), (0, 1)]


def test_basis_is_orthogonal_to_walks(rng):
    net = grid_to_network(random_grid(rng, 3, "WXCX", letters=[1, 2]))
    basis = torus_action_basis(net)
    assert sorted(basis.edges) == sorted(net.interior_vertices())
    assert basis.generators
    for w in basis.basis:
        for g in basis.generators:
            assert sum(a * b for a, b in zip(w, g)) == 0


def test_snake_graph_covers_interior_vertices(rng):
    net = grid_to_network(random_grid(rng, 2, "WX", letters=[1]))
    count, edges, terminals = snake_graph(net)
    assert set(edges) == set(net.interior_vertices())
    assert all(0 <= tail < count and 0 <= head < count for tail, head in edges.values())
    assert len(terminals) >= 1


def test_action_keeps_measurements(rng):
    net = grid_to_network(random_grid(rng, 3, "WXCX", letters=[1, 2]))
    basis = torus_action_basis(net)
    tau = [QQ(2 + i, 3) for i in range(len(basis.basis))]
    moved = torus_action_apply(net, basis, tau)
    assert boundary_matrix(moved) == boundary_matrix(net)
    for h in [(1,), (2,)]:
        assert cycle_measurement(moved, h) == cycle_measurement(net, h)


def test_three_by_three_torus(rng):
    net = grid_to_network(random_grid(rng, 3, "WWW", SurfaceKind.TORUS))
    count, edges, terminals = snake_graph(net)
    assert count == 3
    assert terminals == []
    classes = defaultdict(list)
    for vertex, pair in edges.items():
        classes[pair].append(vertex)
    assert sorted(len(members) for members in classes.values()) == [3, 3, 3]
    basis = torus_action_basis(net)
    assert len(basis.generators) == 27
    assert len(basis.basis) == 2
    position = {name: i for i, name in enumerate(basis.edges)}
    for w in basis.basis:
        values = [{w[position[v]] for v in members} for members in classes.values()]
        assert all(len(v) == 1 for v in values)
        assert sum(v.pop() for v in values) == 0
    moved = torus_action_apply(net, basis, [QQ(2), QQ(3, 5)])
    for h in [(1, 0), (0, 1)]:
        assert cycle_measurement(moved, h) == cycle_measurement(net, h)


def test_action_needs_one_parameter_per_vector(rng):
    net = grid_to_network(random_grid(rng, 2, "WC"))
    basis = torus_action_basis(net)
    with pytest.raises(InvalidNetwork):
        torus_action_apply(net, basis, [QQ(2)] * (len(basis.basis) + 1))
