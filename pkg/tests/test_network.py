import pytest
from sympy.polys.domains import QQ

from errors import InvalidNetwork, NonBoundaryVertex
from network.grid import Cross, Curl, GridNetwork, Whirl, grid_to_network, grid_with_network_weights, rotate_torus
from network.surface_network import Edge, Network, Slot, Surface, SurfaceKind, Vertex, validate
from network.wiring import WireTag, mirror, snake_decomposition, wires
from tests.conftest import random_grid


def test_grid_network_is_valid(mixed_grid):
    net = grid_to_network(mixed_grid)
    assert validate(net) is None
    assert len(net.interior_vertices()) == 8
    assert sorted(net.sources()) == ["L0", "L1", "L2"]
    assert sorted(net.sinks()) == ["R0", "R1", "R2"]


def test_wires_of_a_grid(mixed_grid):
    strands = wires(grid_to_network(mixed_grid))
    closed = sorted(s.tag for s in strands if s.closed)
    assert closed == [WireTag.CURL, WireTag.WHIRL]
    assert sum(1 for s in strands if not s.closed) == 3


def test_snakes_cover_every_edge_once(mixed_grid):
    net = grid_to_network(mixed_grid)
    snakes = snake_decomposition(net)
    covered = [e for s in snakes for e in s.edges]
    assert sorted(covered) == sorted(net.edges)


def test_mirror_is_an_involution(rng):
    net = grid_to_network(random_grid(rng, 3, "WXC", letters=[1]))
    twice = mirror(mirror(net))
    assert twice.edges == net.edges


def test_grid_weights_round_trip(rng):
    grid = random_grid(rng, 2, "CWX", letters=[1])
    net = grid_to_network(grid)
    assert grid_with_network_weights(grid, net) == grid


def test_torus_grids_are_not_mixed(qq_field):
    with pytest.raises(InvalidNetwork):
        GridNetwork(2, (Whirl((QQ(1), QQ(1))), Curl((QQ(1), QQ(1)))), qq_field, SurfaceKind.TORUS)


def test_disk_grids_avoid_the_seam(qq_field):
    with pytest.raises(InvalidNetwork):
        GridNetwork(3, (Cross(3, QQ(1)),), qq_field, SurfaceKind.DISK)
    GridNetwork(3, (Cross(1, QQ(1)), Cross(2, QQ(1))), qq_field, SurfaceKind.DISK)


def test_rotating_a_torus_twice(rng):
    grid = random_grid(rng, 3, "WW", SurfaceKind.TORUS)
    rotated = rotate_torus(grid)
    assert rotated.n == 2
    assert all(isinstance(c, Curl) for c in rotated.columns)
    assert rotate_torus(rotated) == grid


def test_torus_grid_has_no_boundary(rng):
    net = grid_to_network(random_grid(rng, 2, "WWW", SurfaceKind.TORUS))
    assert net.rank == 2
    assert net.boundary_vertices() == []


def test_invalid_slot_usage(qq_field):
    vertex = Vertex("V", weight=QQ(1))
    edges = [Edge("a", tail=("V", Slot.OUT_HIGHWAY), head=("V", Slot.OUT_UNDERWAY))]
    net = Network(Surface(SurfaceKind.DISK), [vertex], edges, qq_field)
    assert "wrong direction" in validate(net)


def test_homology_class_arity():
    with pytest.raises(InvalidNetwork):
        Surface(SurfaceKind.CYLINDER).homology_class((1, 2))


def test_boundary_edge_of_interior_vertex(mixed_grid):
    net = grid_to_network(mixed_grid)
    with pytest.raises(NonBoundaryVertex):
        net.boundary_edge("c0r0")
