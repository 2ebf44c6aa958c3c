"""Wires, snakes, homology of walks, flows and the mirror network."""
import logging
from collections import Counter
from dataclasses import dataclass, replace
from typing import Dict, List, Mapping, Optional, Tuple

from errors import NonConservative
from network.surface_network import (
    Edge, HomologyClass, Network, Slot, Vertex, Walk, is_highway_transit, is_weighted_transit,
)
from sympy.polys.domains import QQ

logger = logging.getLogger(__name__)


class WireTag:
    WHIRL = "whirl"
    CURL = "curl"
    WHURL = "whurl"
    OTHER = "other"


@dataclass(frozen=True)
class Strand:
    """A wire or snake: an edge sequence, closed when it is a cycle"""
    edges: Tuple[str, ...]
    closed: bool
    tag: Optional[str] = None


def _trace(net: Network, continuation: Dict[int, int]) -> List[Strand]:
    seen = set()
    strands = []
    starts = [e.id for e in net.edges.values()
              if e.tail is not None and net.vertices[e.tail[0]].boundary]
    for start in starts:
        path = []
        edge_id = start
        while edge_id is not None and edge_id not in seen:
            seen.add(edge_id)
            path.append(edge_id)
            head = net.head_slot(edge_id)
            edge_id = None if head is None else net.edge_at(head[0], continuation[head[1]])
        strands.append(Strand(tuple(path), closed=False))
    for edge in net.edges.values():
        if edge.id in seen:
            continue
        path = []
        edge_id = edge.id
        while edge_id not in seen:
            seen.add(edge_id)
            path.append(edge_id)
            head = net.head_slot(edge_id)
            if head is None:
                break
            edge_id = net.edge_at(head[0], continuation[head[1]])
        strands.append(Strand(tuple(path), closed=True))
    return strands


def _cycle_tag(net: Network, strand: Strand) -> str:
    entries = [net.edges[e].head for e in strand.edges]
    if not any(entries):
        return WireTag.WHURL
    slots = {slot for _, slot in entries}
    if slots == {Slot.IN_UNDERWAY}:
        return WireTag.WHIRL
    if slots == {Slot.IN_HIGHWAY}:
        return WireTag.CURL
    visited = [vertex for vertex, _ in entries]
    if len(visited) == len(set(visited)):
        return WireTag.WHURL
    return WireTag.OTHER


def wires(net: Network) -> List[Strand]:
    """Partition the edges into wires, which go straight through every crossing"""
    strands = _trace(net, Slot.STRAIGHT)
    return [replace(s, tag=_cycle_tag(net, s)) if s.closed else s for s in strands]


def snake_decomposition(net: Network) -> List[Strand]:
    """Partition the edges into snakes, which turn at every interior vertex"""
    return _trace(net, Slot.TURN)


def homology_of_walk(net: Network, walk: Walk) -> HomologyClass:
    total = [0] * net.rank
    for edge_id in walk.edges:
        for i, value in enumerate(net.edge_homology(edge_id)):
            total[i] += value
    return tuple(total)


def transits(net: Network, walk: Walk) -> List[Tuple[str, int, int]]:
    """(vertex, slot in, slot out) for every vertex the walk passes through"""
    steps = list(walk.edges)
    pairs = list(zip(steps, steps[1:]))
    if walk.closed and steps:
        pairs.append((steps[-1], steps[0]))
    result = []
    for current, following in pairs:
        head = net.edges[current].head
        tail = net.edges[following].tail
        if head is None or tail is None or head[0] != tail[0]:
            raise ValueError(f"edges {current} and {following} do not meet")
        result.append((head[0], head[1], tail[1]))
    return result


def is_highway_walk(net: Network, walk: Walk) -> bool:
    return all(is_highway_transit(s_in, s_out) for _, s_in, s_out in transits(net, walk))


def walk_weight(net: Network, walk: Walk):
    weight = net.field.one()
    for vertex, s_in, s_out in transits(net, walk):
        if is_weighted_transit(s_in, s_out):
            weight = weight * net.weight(vertex)
    return weight


def flow(net: Network, p: Walk, q: Optional[Mapping[str, int]] = None):
    """
    The flow of q through the closed walk p.
    :param net: network holding both
    :param p: closed walk
    :param q: edge multiset, conservative at interior vertices; the whole network when None
    :return: the half-integer flow as an exact rational
    """
    q = Counter(net.edges.keys()) if q is None else Counter(q)
    balance: Dict[str, int] = {}
    for edge_id, mult in q.items():
        edge = net.edges[edge_id]
        if edge.head is not None and not net.vertices[edge.head[0]].boundary:
            balance[edge.head[0]] = balance.get(edge.head[0], 0) + mult
        if edge.tail is not None and not net.vertices[edge.tail[0]].boundary:
            balance[edge.tail[0]] = balance.get(edge.tail[0], 0) - mult
    for vertex, value in balance.items():
        if value:
            raise NonConservative(f"q is not conservative at {vertex}")
    total = 0
    for vertex, slot_a, slot_b in transits(net, p):
        span = (slot_b - slot_a) % 4
        for slot in range(4):
            if slot in (slot_a, slot_b):
                continue
            mult = q.get(net.edge_at(vertex, slot), 0)
            if not mult:
                continue
            right = (slot - slot_a) % 4 < span
            entering = slot in Slot.INS
            total += mult if right == entering else -mult
    return QQ(total, 2)


_MIRROR_SLOT = {
    Slot.IN_HIGHWAY: Slot.IN_UNDERWAY,
    Slot.IN_UNDERWAY: Slot.IN_HIGHWAY,
    Slot.OUT_HIGHWAY: Slot.OUT_UNDERWAY,
    Slot.OUT_UNDERWAY: Slot.OUT_HIGHWAY,
}


def mirror(net: Network) -> Network:
    """Reverse the cyclic slot order everywhere and negate slice signs.

    Highway and underway swap at every vertex, so highway walks of the mirror
    are the underway walks of the original network.
    """

    def flip(end):
        if end is None or net.vertices[end[0]].boundary:
            return end
        return end[0], _MIRROR_SLOT[end[1]]

    edges = [Edge(e.id, flip(e.tail), flip(e.head), tuple((s, -sign) for s, sign in e.slices))
             for e in net.edges.values()]
    return Network(net.surface, net.vertices.values(), edges, net.field)
