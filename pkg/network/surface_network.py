"""Simple-crossing oriented networks on the disk, cylinder and torus.

The embedding is purely combinatorial: every interior vertex lists its four
half-edges in counterclockwise order [in_highway, in_underway, out_highway,
out_underway], and edges record the signed slices they cross.
"""
import logging
from dataclasses import dataclass, field as dataclass_field, replace
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from errors import InvalidNetwork, NonBoundaryVertex
from scalars.field_interface import Field

logger = logging.getLogger(__name__)

HomologyClass = Tuple[int, ...]


class SurfaceKind:
    DISK = "disk"
    CYLINDER = "cylinder"
    TORUS = "torus"

    ALL = (DISK, CYLINDER, TORUS)
    RANK = {DISK: 0, CYLINDER: 1, TORUS: 2}


@dataclass(frozen=True)
class Surface:
    kind: str

    def __post_init__(self):
        if self.kind not in SurfaceKind.ALL:
            raise InvalidNetwork(f"unknown surface {self.kind!r}")

    @property
    def homology_rank(self) -> int:
        return SurfaceKind.RANK[self.kind]

    def zero_class(self) -> HomologyClass:
        return (0,) * self.homology_rank

    def homology_class(self, values: Iterable[int]) -> HomologyClass:
        values = tuple(int(v) for v in values)
        if len(values) != self.homology_rank:
            raise InvalidNetwork(
                f"homology class {values} on {self.kind} needs {self.homology_rank} entries")
        return values


class Slot:
    """Counterclockwise slot positions at an interior vertex"""
    IN_HIGHWAY = 0
    IN_UNDERWAY = 1
    OUT_HIGHWAY = 2
    OUT_UNDERWAY = 3

    INS = (IN_HIGHWAY, IN_UNDERWAY)
    OUTS = (OUT_HIGHWAY, OUT_UNDERWAY)
    # straight continuation of a wire
    STRAIGHT = {IN_HIGHWAY: OUT_HIGHWAY, IN_UNDERWAY: OUT_UNDERWAY}
    # turning continuation of a snake
    TURN = {IN_HIGHWAY: OUT_UNDERWAY, IN_UNDERWAY: OUT_HIGHWAY}


def is_highway_transit(slot_in: int, slot_out: int) -> bool:
    """Transit allowed for highway walks: never underway in to underway out"""
    return not (slot_in == Slot.IN_UNDERWAY and slot_out == Slot.OUT_UNDERWAY)


def is_weighted_transit(slot_in: int, slot_out: int) -> bool:
    """Only the highway-in to highway-out transit picks up the vertex weight"""
    return slot_in == Slot.IN_HIGHWAY and slot_out == Slot.OUT_HIGHWAY


@dataclass(frozen=True)
class Vertex:
    id: str
    boundary: bool = False
    weight: object = None
    # boundary vertices only: component of the boundary and position along it
    component: int = 0
    position: int = 0


@dataclass(frozen=True)
class Edge:
    id: str
    tail: Optional[Tuple[str, int]] = None
    head: Optional[Tuple[str, int]] = None
    slices: Tuple[Tuple[int, int], ...] = ()

    @property
    def is_loop(self) -> bool:
        return self.tail is None and self.head is None

    def homology(self, rank: int) -> HomologyClass:
        vector = [0] * rank
        for slice_id, sign in self.slices:
            vector[slice_id] += sign
        return tuple(vector)


@dataclass(frozen=True)
class Walk:
    edges: Tuple[str, ...]
    closed: bool = False


class Network:
    """Immutable network value; derived indexes are built once on construction"""

    def __init__(self, surface: Surface, vertices: Iterable[Vertex], edges: Iterable[Edge],
                 field: Field):
        self.surface = surface
        self.field = field
        self.vertices: Dict[str, Vertex] = {v.id: v for v in vertices}
        self.edges: Dict[str, Edge] = {e.id: e for e in edges}
        self._slot_edge: Dict[Tuple[str, int], str] = {}
        self._boundary_edge: Dict[str, str] = {}
        self._homology: Dict[str, HomologyClass] = {}
        rank = surface.homology_rank
        for edge in self.edges.values():
            self._homology[edge.id] = edge.homology(rank)
            for end in (edge.tail, edge.head):
                if end is None or end[0] not in self.vertices:
                    continue
                if self.vertices[end[0]].boundary:
                    self._boundary_edge[end[0]] = edge.id
                else:
                    self._slot_edge[(end[0], end[1])] = edge.id

    @property
    def rank(self) -> int:
        return self.surface.homology_rank

    def interior_vertices(self) -> List[str]:
        return [v.id for v in self.vertices.values() if not v.boundary]

    def boundary_vertices(self) -> List[str]:
        return [v.id for v in self.vertices.values() if v.boundary]

    def sources(self) -> List[str]:
        return [v for v in self.boundary_vertices()
                if v in self._boundary_edge and self.edges[self._boundary_edge[v]].tail is not None
                and self.edges[self._boundary_edge[v]].tail[0] == v]

    def sinks(self) -> List[str]:
        return [v for v in self.boundary_vertices()
                if v in self._boundary_edge and self.edges[self._boundary_edge[v]].head is not None
                and self.edges[self._boundary_edge[v]].head[0] == v]

    def weight(self, vertex_id: str):
        return self.vertices[vertex_id].weight

    def edge_at(self, vertex_id: str, slot: int) -> Optional[str]:
        return self._slot_edge.get((vertex_id, slot))

    def boundary_edge(self, vertex_id: str) -> str:
        vertex = self.vertices.get(vertex_id)
        if vertex is None or not vertex.boundary or vertex_id not in self._boundary_edge:
            raise NonBoundaryVertex(f"{vertex_id} is not a connected boundary vertex")
        return self._boundary_edge[vertex_id]

    def edge_homology(self, edge_id: str) -> HomologyClass:
        return self._homology[edge_id]

    def head_slot(self, edge_id: str) -> Optional[Tuple[str, int]]:
        """(vertex, slot) of the head when it is an interior vertex"""
        head = self.edges[edge_id].head
        if head is None or self.vertices[head[0]].boundary:
            return None
        return head

    def successor(self, edge_id: str, slot_out: int) -> Optional[str]:
        head = self.head_slot(edge_id)
        if head is None:
            return None
        return self._slot_edge.get((head[0], slot_out))

    def with_weights(self, weights: Mapping[str, object]) -> "Network":
        vertices = [replace(v, weight=weights[v.id]) if v.id in weights else v
                    for v in self.vertices.values()]
        return Network(self.surface, vertices, self.edges.values(), self.field)

    def map_weights(self, fn, field: Optional[Field] = None) -> "Network":
        vertices = [v if v.boundary else replace(v, weight=fn(v.id, v.weight))
                    for v in self.vertices.values()]
        return Network(self.surface, vertices, self.edges.values(), field or self.field)

    def debug_dump(self) -> str:
        lines = [f"{self.surface.kind} network, {len(self.vertices)} vertices, {len(self.edges)} edges"]
        for v in self.vertices.values():
            kind = "boundary" if v.boundary else f"weight={v.weight}"
            lines.append(f"  vertex {v.id}: {kind}")
        for e in self.edges.values():
            lines.append(f"  edge {e.id}: {e.tail} -> {e.head} slices={list(e.slices)}")
        return "\n".join(lines)


def validate(net: Network) -> Optional[str]:
    """
    Check the simple-crossing condition, boundary degrees and slice arity.
    :param net: network to check
    :return: None when valid, else a message naming the first offending vertex or edge
    """
    usage: Dict[Tuple[str, int], str] = {}
    boundary_degree: Dict[str, int] = {}
    rank = net.rank
    for edge in net.edges.values():
        for slice_id, sign in edge.slices:
            if not 0 <= slice_id < rank or sign not in (1, -1):
                return f"edge {edge.id}: bad slice annotation ({slice_id}, {sign}) on {net.surface.kind}"
        for end, allowed in ((edge.tail, Slot.OUTS), (edge.head, Slot.INS)):
            if end is None:
                continue
            vertex_id, slot = end
            vertex = net.vertices.get(vertex_id)
            if vertex is None:
                return f"edge {edge.id}: unknown vertex {vertex_id}"
            if vertex.boundary:
                boundary_degree[vertex_id] = boundary_degree.get(vertex_id, 0) + 1
                if boundary_degree[vertex_id] > 1:
                    return f"vertex {vertex_id}: boundary vertex of degree > 1"
                continue
            if slot not in allowed:
                return f"vertex {vertex_id}: edge {edge.id} uses slot {slot} in the wrong direction"
            if (vertex_id, slot) in usage:
                return f"vertex {vertex_id}: slot {slot} used by {usage[(vertex_id, slot)]} and {edge.id}"
            usage[(vertex_id, slot)] = edge.id
        if (edge.tail is None) != (edge.head is None):
            return f"edge {edge.id}: dangling endpoint"
    for vertex in net.vertices.values():
        if vertex.boundary:
            continue
        for slot in range(4):
            if (vertex.id, slot) not in usage:
                return f"vertex {vertex.id}: slot {slot} is empty"
    return None


def ensure_valid(net: Network) -> Network:
    violation = validate(net)
    if violation is not None:
        raise InvalidNetwork(violation)
    return net
