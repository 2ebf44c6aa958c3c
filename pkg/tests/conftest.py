from random import Random

import pytest
from sympy.polys.domains import QQ

from network.grid import Cross, Curl, GridNetwork, Whirl
from network.surface_network import Edge, Network, Slot, Surface, SurfaceKind, Vertex, ensure_valid
from scalars.field_domain import RationalField, SymbolicField

SEED = 20240101


@pytest.fixture
def rng():
    return Random(SEED)


@pytest.fixture
def qq_field():
    return RationalField()


def rationals(rng, count, bound=20):
    return tuple(QQ(rng.randint(1, bound), rng.randint(1, bound)) for _ in range(count))


def random_grid(rng, n, kinds, surface=SurfaceKind.CYLINDER, letters=None):
    """Grid with positive random weights; kinds is a string over W, C and X"""
    field = RationalField()
    letters = list(letters or [])
    columns = []
    for kind in kinds:
        if kind == "W":
            columns.append(Whirl(rationals(rng, n)))
        elif kind == "C":
            columns.append(Curl(rationals(rng, n)))
        else:
            columns.append(Cross(letters.pop(0), rationals(rng, 1)[0]))
    return GridNetwork(n, tuple(columns), field, surface)


@pytest.fixture
def two_curl_field():
    return SymbolicField(["x", "y"])


@pytest.fixture
def two_curl_grid(two_curl_field):
    """One horizontal wire through two curls of weights x and y"""
    x, y = two_curl_field.gen("x"), two_curl_field.gen("y")
    return GridNetwork(1, (Curl((x,)), Curl((y,))), two_curl_field)


@pytest.fixture
def mixed_field():
    return SymbolicField(["p", "q", "r", "s", "t", "u", "v", "w"])


@pytest.fixture
def mixed_grid(mixed_field):
    g = mixed_field.gen
    columns = (
        Whirl((g("p"), g("q"), g("r"))),
        Cross(0, g("t")),
        Cross(2, g("s")),
        Curl((g("w"), g("u"), g("v"))),
    )
    return GridNetwork(3, columns, mixed_field)


@pytest.fixture
def one_vertex_torus():
    """A single crossing whose vertical edge carries (0, 1) and horizontal edge (1, 0)"""
    field = RationalField()
    vertex = Vertex("V", weight=QQ(2))
    edges = [
        Edge("vertical", tail=("V", Slot.OUT_HIGHWAY), head=("V", Slot.IN_HIGHWAY), slices=((1, 1),)),
        Edge("horizontal", tail=("V", Slot.OUT_UNDERWAY), head=("V", Slot.IN_UNDERWAY), slices=((0, 1),)),
    ]
    return ensure_valid(Network(Surface(SurfaceKind.TORUS), [vertex], edges, field))
