"""Local moves on arbitrary networks: YB, CR, XM and XR.

These rewrite a handful of vertices and reconnect the surrounding edges; the
rest of the network, including edge ids and slice annotations, is untouched.
"""
import itertools
import logging
from dataclasses import replace
from typing import Dict, List, Sequence, Set, Tuple

from errors import NonZeroWeight, OrientedTriangle, PatternMismatch, ZeroDenominator
from moves.grid_moves import MoveKind, MoveSite, yang_baxter
from network.surface_network import Edge, Network, Slot, Vertex, ensure_valid, is_highway_transit, \
    is_weighted_transit

logger = logging.getLogger(__name__)

_STRAIGHT_IN = {out: slot_in for slot_in, out in Slot.STRAIGHT.items()}


def _merged_edge(net: Network, chain: List[str], closed: bool) -> Edge:
    first, last = net.edges[chain[0]], net.edges[chain[-1]]
    slices = tuple(s for eid in chain for s in net.edges[eid].slices)
    if closed:
        return Edge(first.id, slices=slices)
    return Edge(first.id, tail=first.tail, head=last.head, slices=slices)


def _rebuild(net: Network, removed: Set[str], joins: Dict[str, str], dropped: Set[str],
             extra_vertices: Sequence[Vertex] = ()) -> Network:
    """
    Delete vertices and splice the edges through them.
    :param removed: vertex ids to delete
    :param joins: edge entering a removed vertex -> edge leaving it that continues it
    :param dropped: edge ids deleted outright
    :return: validated network
    """
    kept = [eid for eid in net.edges if eid not in dropped]
    predecessor = {after: before for before, after in joins.items()}
    edges, visited = [], set()
    for eid in kept:
        if eid in predecessor:
            continue
        chain = [eid]
        while chain[-1] in joins:
            chain.append(joins[chain[-1]])
        visited.update(chain)
        edges.append(_merged_edge(net, chain, closed=False))
    for eid in kept:
        if eid in visited:
            continue
        chain = [eid]
        visited.add(eid)
        while joins[chain[-1]] != eid:
            chain.append(joins[chain[-1]])
            visited.add(chain[-1])
        edges.append(_merged_edge(net, chain, closed=True))
    for edge in edges:
        for end in (edge.tail, edge.head):
            if end is not None and end[0] in removed:
                raise PatternMismatch(f"edge {edge.id} would dangle at removed vertex {end[0]}")
    vertices = [v for v in net.vertices.values() if v.id not in removed] + list(extra_vertices)
    return ensure_valid(Network(net.surface, vertices, edges, net.field))


def _interior(net: Network, vertex_id: str) -> Vertex:
    vertex = net.vertices.get(vertex_id)
    if vertex is None or vertex.boundary:
        raise PatternMismatch(f"{vertex_id} is not an interior vertex")
    return vertex


# ---------------------------------------------------------------- XR

def apply_remove_zero(net: Network, vertex_id: str) -> Network:
    """Remove a weight-0 crossing; its two wires are reconnected along the turning transits"""
    vertex = _interior(net, vertex_id)
    if not net.field.is_zero(vertex.weight):
        raise NonZeroWeight(f"vertex {vertex_id} has weight {vertex.weight}")
    joins = {net.edge_at(vertex_id, slot_in): net.edge_at(vertex_id, slot_out)
             for slot_in, slot_out in Slot.TURN.items()}
    return _rebuild(net, {vertex_id}, joins, set())


# ---------------------------------------------------------------- CR

def apply_cycle_removal(net: Network, cycle: Sequence[str]) -> Network:
    """
    Remove an oriented face-bounding cycle.
    :param cycle: edge ids of the cycle in order
    :return: network with the cycle's vertices deleted and the outside edges spliced
    """
    if not cycle:
        raise PatternMismatch("empty cycle")
    members = set(cycle)
    vertices = []
    for i, eid in enumerate(cycle):
        edge = net.edges.get(eid)
        following = net.edges.get(cycle[(i + 1) % len(cycle)])
        if edge is None or following is None or edge.head is None or following.tail is None:
            raise PatternMismatch(f"edge {eid} does not continue the cycle")
        if edge.head[0] != following.tail[0]:
            raise PatternMismatch(f"edges {eid} and {following.id} are not consecutive")
        vertices.append(edge.head[0])
    if len(set(vertices)) != len(vertices):
        raise PatternMismatch("cycle revisits a vertex")
    total = [sum(net.edge_homology(eid)[i] for eid in cycle) for i in range(net.rank)]
    if any(total):
        raise PatternMismatch(f"cycle has homology {total}")
    joins = {}
    cycle_out_slots = set()
    for vertex_id in vertices:
        _interior(net, vertex_id)
        ext_in = [s for s in Slot.INS if net.edge_at(vertex_id, s) not in members]
        ext_out = [s for s in Slot.OUTS if net.edge_at(vertex_id, s) not in members]
        if len(ext_in) != 1 or len(ext_out) != 1:
            raise PatternMismatch(f"vertex {vertex_id} is not crossed once by the cycle")
        if Slot.TURN[ext_in[0]] != ext_out[0]:
            raise PatternMismatch(f"cycle at {vertex_id} follows a wire")
        cycle_out_slots.add(Slot.OUTS[1 - Slot.OUTS.index(ext_out[0])])
        joins[net.edge_at(vertex_id, ext_in[0])] = net.edge_at(vertex_id, ext_out[0])
    if len(cycle_out_slots) != 1:
        raise PatternMismatch("cycle can be both entered and left")
    return _rebuild(net, set(vertices), joins, members)


# ---------------------------------------------------------------- XM

def apply_merge(net: Network, first: str, second: str) -> Network:
    """
    Merge two consecutive crossings of the same pair of wires into one with
    the summed weight. The first crossing's outgoing edges must feed the
    second crossing with the two wires exchanged.
    """
    u, v = _interior(net, first), _interior(net, second)
    inner_lower = net.edge_at(first, Slot.OUT_HIGHWAY)
    inner_upper = net.edge_at(first, Slot.OUT_UNDERWAY)
    if net.edges[inner_lower].head != (second, Slot.IN_UNDERWAY) \
            or net.edges[inner_upper].head != (second, Slot.IN_HIGHWAY):
        raise PatternMismatch(f"{first} and {second} do not form a mergeable pair")
    slices = net.edges[inner_lower].slices
    if net.edge_homology(inner_lower) != net.edge_homology(inner_upper):
        raise PatternMismatch("the two edges between the crossings wind differently")
    edges = []
    for eid, edge in net.edges.items():
        if eid in (inner_lower, inner_upper):
            continue
        if edge.tail is not None and edge.tail[0] == second:
            edge = replace(edge, tail=(first, edge.tail[1]), slices=tuple(slices) + edge.slices)
        edges.append(edge)
    vertices = [replace(u, weight=u.weight + v.weight) if vid == first else vertex
                for vid, vertex in net.vertices.items() if vid != second]
    return ensure_valid(Network(net.surface, vertices, edges, net.field))


# ---------------------------------------------------------------- YB

def local_transfer(net: Network, internal: Set[str], entries: Sequence[str]) -> Dict[Tuple[str, str], object]:
    """Highway path weights from each entry edge to each edge leaving the vertex set"""
    field = net.field
    result: Dict[Tuple[str, str], object] = {}

    def walk(entry: str, edge_id: str, weight):
        head = net.edges[edge_id].head
        vertex_id, slot_in = head
        for slot_out in Slot.OUTS:
            if not is_highway_transit(slot_in, slot_out):
                continue
            step = weight * net.weight(vertex_id) if is_weighted_transit(slot_in, slot_out) else weight
            out_edge = net.edge_at(vertex_id, slot_out)
            if out_edge in internal:
                walk(entry, out_edge, step)
            else:
                key = (entry, out_edge)
                result[key] = result.get(key, field.zero()) + step

    for entry in entries:
        walk(entry, entry, field.one())
    return result


def _transfers_equal(field, a: Dict, b: Dict) -> bool:
    zero = field.zero()
    return all(field.equal(a.get(key, zero), b.get(key, zero)) for key in set(a) | set(b))


def _triangle(net: Network, ids: Sequence[str]):
    inside = set(ids)
    if len(inside) != 3:
        raise PatternMismatch("a triangle needs three distinct vertices")
    for vid in ids:
        _interior(net, vid)
    internal = [e for e in net.edges.values()
                if e.tail is not None and e.head is not None and e.tail[0] in inside and e.head[0] in inside]
    pairs = {frozenset((e.tail[0], e.head[0])) for e in internal}
    if len(internal) != 3 or len(pairs) != 3:
        raise PatternMismatch(f"{sorted(inside)} do not bound a triangle")
    if any(e.slices for e in internal):
        raise PatternMismatch("triangle edges cross a slice")
    out_degree = {vid: sum(1 for e in internal if e.tail[0] == vid) for vid in ids}
    if all(d == 1 for d in out_degree.values()):
        raise OrientedTriangle(f"triangle {sorted(inside)} is an oriented cycle")
    source = next(vid for vid, d in out_degree.items() if d == 2)
    sink = next(vid for vid, d in out_degree.items() if d == 0)
    middle = next(vid for vid in ids if vid not in (source, sink))
    by_ends = {(e.tail[0], e.head[0]): e for e in internal}
    return source, middle, sink, by_ends[(source, middle)], by_ends[(middle, sink)], by_ends[(source, sink)]


def apply_yb(net: Network, ids: Sequence[str]) -> Network:
    """
    Flip a triangle bounded by three pairwise crossing wires.

    Each pair of wires keeps its crossing vertex id and which of the two is the
    highway there; the new weights come from the Yang-Baxter map with the roles
    fixed by requiring equal highway transfer across the triangle.
    """
    s, m, t, sm, mt, st = _triangle(net, ids)
    alpha_s = _STRAIGHT_IN[sm.tail[1]]
    gamma_s = _STRAIGHT_IN[st.tail[1]]
    alpha_m = sm.head[1]
    beta_m = _STRAIGHT_IN[mt.tail[1]]
    if beta_m == alpha_m:
        raise PatternMismatch("the middle vertex is not crossed by a third wire")
    gamma_t, beta_t = st.head[1], mt.head[1]

    alpha_in, gamma_in = net.edge_at(s, alpha_s), net.edge_at(s, gamma_s)
    beta_in = net.edge_at(m, beta_m)
    alpha_out = net.edge_at(m, Slot.STRAIGHT[alpha_m])
    beta_out = net.edge_at(t, Slot.STRAIGHT[beta_t])
    gamma_out = net.edge_at(t, Slot.STRAIGHT[gamma_t])

    heads = {alpha_in: (m, alpha_m), beta_in: (t, beta_t), gamma_in: (t, gamma_t)}
    tails = {alpha_out: (s, Slot.STRAIGHT[alpha_s]), beta_out: (m, Slot.STRAIGHT[beta_m]),
             gamma_out: (s, Slot.STRAIGHT[gamma_s])}
    internal = {
        sm.id: Edge(sm.id, tail=(m, Slot.STRAIGHT[alpha_m]), head=(s, alpha_s)),
        mt.id: Edge(mt.id, tail=(t, Slot.STRAIGHT[beta_t]), head=(m, beta_m)),
        st.id: Edge(st.id, tail=(t, Slot.STRAIGHT[gamma_t]), head=(s, gamma_s)),
    }
    edges = []
    for eid, edge in net.edges.items():
        if eid in internal:
            edges.append(internal[eid])
            continue
        if eid in heads:
            edge = replace(edge, head=heads[eid])
        if eid in tails:
            edge = replace(edge, tail=tails[eid])
        edges.append(edge)

    inside = {s, m, t}
    entries = [alpha_in, beta_in, gamma_in]
    before = local_transfer(net, set(internal), entries)
    old = (net.weight(s), net.weight(m), net.weight(t))
    # (x, y, z) orderings and placements, the standard assignment first
    orderings = [(0, 1, 2)] + [p for p in itertools.permutations(range(3)) if p != (0, 1, 2)]
    placements = [(t, m, s)] + [p for p in itertools.permutations((t, m, s)) if p != (t, m, s)]
    division_failed = False
    for order in orderings:
        try:
            values = yang_baxter(*(old[i] for i in order))
        except ZeroDenominator:
            division_failed = True
            continue
        for placement in placements:
            weights = dict(zip(placement, values))
            vertices = [replace(v, weight=weights[v.id]) if v.id in weights else v
                        for v in net.vertices.values()]
            candidate = Network(net.surface, vertices, edges, net.field)
            after = local_transfer(candidate, set(internal), entries)
            if _transfers_equal(net.field, before, after):
                return ensure_valid(candidate)
    if division_failed:
        raise ZeroDenominator(f"Yang-Baxter denominator vanishes at {sorted(inside)}")
    raise PatternMismatch(f"no Yang-Baxter weights match the transfer across {sorted(inside)}")


# ---------------------------------------------------------------- dispatch

def apply_network_move(net: Network, site: MoveSite) -> Network:
    if site.kind == MoveKind.YB:
        return apply_yb(net, site.anchor)
    if site.kind == MoveKind.CR:
        return apply_cycle_removal(net, site.anchor)
    if site.kind == MoveKind.XM:
        first, second = site.anchor
        return apply_merge(net, first, second)
    if site.kind == MoveKind.XR:
        (vertex_id,) = site.anchor
        return apply_remove_zero(net, vertex_id)
    raise PatternMismatch(f"{site.kind} moves apply to grids, not to general networks")


def apply_network_script(net: Network, script: Sequence[MoveSite]) -> Network:
    for site in script:
        net = apply_network_move(net, site)
    return net
