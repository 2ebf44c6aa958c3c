"""Grid networks: n horizontal wires crossed by whirl, curl and crossing columns.

Rows are numbered 0..n-1 from top to bottom and horizontal wires run west to
east. A whirl column is a vertical wire cycle travelling north, a curl column
travels south, and Cross(k, a) is a single crossing of rows k-1 and k (mod n).
The horizontal seam between rows n-1 and 0 is slice 0, crossing it southward
counts +1. On the torus the vertical seam after the last column is slice 1,
crossed eastward with +1.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from errors import InvalidNetwork
from network.surface_network import Edge, Network, Slot, Surface, SurfaceKind, Vertex, ensure_valid
from scalars.field_interface import Field

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Whirl:
    x: Tuple

    kind = "whirl"

    def radius(self, field: Field):
        return _product(field, self.x)


@dataclass(frozen=True)
class Curl:
    x: Tuple

    kind = "curl"

    def radius(self, field: Field):
        return _product(field, self.x)


@dataclass(frozen=True)
class Cross:
    k: int
    a: object

    kind = "cross"


Column = Union[Whirl, Curl, Cross]


def _product(field: Field, values):
    result = field.one()
    for value in values:
        result = result * value
    return result


@dataclass(frozen=True)
class GridNetwork:
    n: int
    columns: Tuple
    field: Field
    surface: str = SurfaceKind.CYLINDER

    def __post_init__(self):
        if self.n < 1:
            raise InvalidNetwork("a grid needs at least one row")
        object.__setattr__(self, "columns", tuple(self.columns))
        for j, column in enumerate(self.columns):
            if isinstance(column, (Whirl, Curl)):
                if len(column.x) != self.n:
                    raise InvalidNetwork(f"column {j}: expected {self.n} weights, got {len(column.x)}")
            elif isinstance(column, Cross):
                if self.n < 2:
                    raise InvalidNetwork(f"column {j}: crossings need at least two rows")
            else:
                raise InvalidNetwork(f"column {j}: unknown column {column!r}")
        if self.surface == SurfaceKind.TORUS:
            kinds = {column.kind for column in self.columns}
            if not kinds <= {"whirl"} and not kinds <= {"curl"}:
                raise InvalidNetwork("torus grids use only whirl columns or only curl columns")
        elif self.surface == SurfaceKind.DISK:
            for j, column in enumerate(self.columns):
                if not isinstance(column, Cross) or column.k % self.n == 0:
                    raise InvalidNetwork(f"column {j}: disk grids only hold crossings away from the seam")
        elif self.surface != SurfaceKind.CYLINDER:
            raise InvalidNetwork(f"unknown grid surface {self.surface!r}")

    def replace_columns(self, columns: Sequence[Column]) -> "GridNetwork":
        return GridNetwork(self.n, tuple(columns), self.field, self.surface)

    def counts(self) -> Tuple[int, int]:
        """(number of curl columns, number of whirl columns)"""
        curls = sum(1 for column in self.columns if isinstance(column, Curl))
        whirls = sum(1 for column in self.columns if isinstance(column, Whirl))
        return curls, whirls


def cross_rows(n: int, k: int) -> Tuple[int, int]:
    """(upper row, lower row) crossed by Cross(k)"""
    return (k - 1) % n, k % n


def vertex_ids(grid: GridNetwork) -> List[List[str]]:
    """Network vertex ids per column; whirl and curl columns list rows top to bottom"""
    ids = []
    for j, column in enumerate(grid.columns):
        if isinstance(column, Cross):
            ids.append([f"c{j}"])
        else:
            ids.append([f"c{j}r{r}" for r in range(grid.n)])
    return ids


def grid_to_network(grid: GridNetwork) -> Network:
    """
    Build the embedded network of a grid.
    :param grid: whirl/curl/cross columns against n horizontal wires
    :return: a validated Network on the grid's surface
    """
    n = grid.n
    surface = Surface(grid.surface)
    torus = grid.surface == SurfaceKind.TORUS
    vertices: List[Vertex] = []
    edges: List[Edge] = []
    # pending[r] = (tail endpoint, slices) of the horizontal segment currently on row r
    pending: Dict[int, Tuple[Optional[Tuple[str, int]], list]] = {}
    first_consumer: Dict[int, Tuple[str, int]] = {}
    first_slices: Dict[int, list] = {}
    counter = [0]

    def new_edge_id(prefix: str) -> str:
        counter[0] += 1
        return f"{prefix}{counter[0]}"

    if not torus:
        for r in range(n):
            vertices.append(Vertex(f"L{r}", boundary=True, component=0, position=r))
            pending[r] = ((f"L{r}", 0), [])
    else:
        for r in range(n):
            pending[r] = (None, [])

    def consume(row: int, head: Tuple[str, int], extra: Tuple = ()):
        tail, slices = pending[row]
        if tail is None:
            first_consumer[row] = head
            first_slices[row] = list(extra)
            return
        edges.append(Edge(new_edge_id("h"), tail=tail, head=head, slices=tuple(list(slices) + list(extra))))

    for j, column in enumerate(grid.columns):
        if isinstance(column, Cross):
            upper, lower = cross_rows(n, column.k)
            vid = f"c{j}"
            vertices.append(Vertex(vid, weight=column.a))
            # a seam crossing sits below the seam: the upper wire crosses it on the way in
            seam = column.k % n == 0
            consume(upper, (vid, Slot.IN_HIGHWAY), ((0, 1),) if seam else ())
            consume(lower, (vid, Slot.IN_UNDERWAY))
            pending[lower] = ((vid, Slot.OUT_HIGHWAY), [])
            pending[upper] = ((vid, Slot.OUT_UNDERWAY), [(0, -1)] if seam else [])
            continue
        whirl = isinstance(column, Whirl)
        ids = [f"c{j}r{r}" for r in range(n)]
        for r in range(n):
            vertices.append(Vertex(ids[r], weight=column.x[r]))
        horizontal_in = Slot.IN_HIGHWAY if whirl else Slot.IN_UNDERWAY
        horizontal_out = Slot.OUT_HIGHWAY if whirl else Slot.OUT_UNDERWAY
        for r in range(n):
            consume(r, (ids[r], horizontal_in))
            pending[r] = ((ids[r], horizontal_out), [])
        for r in range(n):
            if whirl:
                target = (r - 1) % n
                slices = ((0, -1),) if r == 0 else ()
                edges.append(Edge(f"v{j}_{r}", tail=(ids[r], Slot.OUT_UNDERWAY),
                                  head=(ids[target], Slot.IN_UNDERWAY), slices=slices))
            else:
                target = (r + 1) % n
                slices = ((0, 1),) if r == n - 1 else ()
                edges.append(Edge(f"v{j}_{r}", tail=(ids[r], Slot.OUT_HIGHWAY),
                                  head=(ids[target], Slot.IN_HIGHWAY), slices=slices))

    for r in range(n):
        tail, slices = pending[r]
        if torus:
            slices = list(slices) + [(1, 1)] + first_slices.get(r, [])
            if r in first_consumer:
                edges.append(Edge(new_edge_id("h"), tail=tail, head=first_consumer[r], slices=tuple(slices)))
            else:
                edges.append(Edge(new_edge_id("loop"), slices=tuple(slices)))
        else:
            vertices.append(Vertex(f"R{r}", boundary=True, component=1, position=r))
            edges.append(Edge(new_edge_id("h"), tail=tail, head=(f"R{r}", 0), slices=tuple(slices)))

    net = Network(surface, vertices, edges, grid.field)
    return ensure_valid(net)


def grid_with_network_weights(grid: GridNetwork, net: Network) -> GridNetwork:
    """Read vertex weights of grid_to_network(grid) back into grid columns"""
    columns = []
    for column, ids in zip(grid.columns, vertex_ids(grid)):
        if isinstance(column, Cross):
            columns.append(Cross(column.k, net.weight(ids[0])))
        else:
            columns.append(type(column)(tuple(net.weight(v) for v in ids)))
    return grid.replace_columns(columns)


def rotate_torus(grid: GridNetwork) -> GridNetwork:
    """Quarter turn clockwise of a torus grid.

    Horizontal wires become south-travelling vertical wires, so n rows of an
    all-whirl grid with m columns become an all-curl grid with m rows and n
    columns. Column j of the result is old row n-1-j read top to bottom.
    Applying it to an all-curl grid turns it back into whirls.
    """
    if grid.surface != SurfaceKind.TORUS:
        raise InvalidNetwork("only torus grids can be rotated")
    m = len(grid.columns)
    if m == 0:
        raise InvalidNetwork("rotating an empty torus grid")
    whirl = isinstance(grid.columns[0], Whirl)
    if whirl:
        columns = [Curl(tuple(grid.columns[c].x[grid.n - 1 - j] for c in range(m)))
                   for j in range(grid.n)]
    else:
        columns = [Whirl(tuple(grid.columns[m - 1 - c].x[j] for c in range(m)))
                   for j in range(grid.n)]
    return GridNetwork(m, tuple(columns), grid.field, SurfaceKind.TORUS)
