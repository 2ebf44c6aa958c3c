"""Lindstrom-type determinants on the cylinder and the brute-force oracle of
pairwise edge-disjoint highway path families in the universal cover."""
import logging
from itertools import permutations, product
from typing import List, Sequence, Tuple

from config import configuration as config
from errors import ExplosionGuard, UnreducedNetwork
from measurements.walks import PathEnumerator, WalkGraph
from network.surface_network import Network
from scalars.linalg import determinant

logger = logging.getLogger(__name__)

CoverPoint = Tuple[str, int]


def contractible_oriented_cycle(net: Network):
    """Edges of a directed cycle with trivial class, or None"""
    graph = WalkGraph(net)
    bound = len(net.edges)
    for start in net.edges:
        start_state = (start, net.edge_homology(start))
        parents = {start_state: None}
        queue = [start_state]
        while queue:
            state = queue.pop(0)
            edge, hom = state
            for target, _ in graph.full[edge]:
                if target == start and not any(hom):
                    cycle = [edge]
                    while parents[state] is not None:
                        state = parents[state]
                        cycle.append(state[0])
                    return list(reversed(cycle))
                new_hom = tuple(a + b for a, b in zip(hom, net.edge_homology(target)))
                if any(abs(x) > bound for x in new_hom):
                    continue
                following = (target, new_hom)
                if following not in parents:
                    parents[following] = state
                    queue.append(following)
    return None


def _cover_key(net: Network, point: CoverPoint):
    vertex_id, lift = point
    vertex = net.vertices[vertex_id]
    per_component = sum(1 for v in net.vertices.values()
                        if v.boundary and v.component == vertex.component)
    row = vertex.position + lift * per_component
    return (vertex.component, -row if vertex.component == 0 else row)


def _ordered(net: Network, points: Sequence[CoverPoint]) -> List[CoverPoint]:
    return sorted(points, key=lambda p: _cover_key(net, p))


def lindstrom_matrix(net: Network, sources: Sequence[CoverPoint], sinks: Sequence[CoverPoint]):
    """
    The signed matrix A_{I,J} and its determinant.
    :param net: cylinder network without contractible oriented cycles
    :param sources: (boundary source, lift) pairs
    :param sinks: (boundary sink, lift) pairs
    :return: (matrix rows, determinant)
    """
    if len(sources) != len(sinks):
        raise ValueError("I and J must have the same size")
    if contractible_oriented_cycle(net) is not None:
        raise UnreducedNetwork("remove contractible oriented cycles first")
    enumerator = PathEnumerator(net)
    I, J = _ordered(net, sources), _ordered(net, sinks)
    keys_i = [_cover_key(net, p) for p in I]
    rows = []
    for i_point, i_key in zip(I, keys_i):
        row = []
        for j_point in J:
            j_key = _cover_key(net, j_point)
            low, high = sorted((i_key, j_key))
            between = sum(1 for key in keys_i if low < key < high)
            value = enumerator.boundary_measurement(i_point[0], j_point[0], (j_point[1] - i_point[1],))
            row.append(-value if between % 2 else value)
        rows.append(row)
    return rows, determinant(rows, net.field)


def _lifted_edges(net: Network, edges: Sequence[str], lift: int):
    sheet = lift
    lifted = []
    for edge in edges:
        lifted.append((edge, sheet))
        sheet += net.edge_homology(edge)[0]
    return lifted


def noncrossing_families(net: Network, sources: Sequence[CoverPoint], sinks: Sequence[CoverPoint]):
    """Exhaustive list of (paths, weight) over families of pairwise edge-disjoint highway paths"""
    enumerator = PathEnumerator(net)
    I, J = _ordered(net, sources), _ordered(net, sinks)
    k = len(I)
    options = {}
    for a, (u, lift_u) in enumerate(I):
        for b, (v, lift_v) in enumerate(J):
            options[(a, b)] = [(edges, weight, set(_lifted_edges(net, edges, lift_u)))
                               for edges, weight in enumerator.boundary_paths(u, v, (lift_v - lift_u,))]
    families = []
    examined = 0
    for matching in permutations(range(k)):
        choices = [options[(a, matching[a])] for a in range(k)]
        for family in product(*choices):
            examined += 1
            if examined > config.EXPLOSION_CAP:
                raise ExplosionGuard(f"more than {config.EXPLOSION_CAP} candidate families")
            used = set()
            disjoint = True
            for _, _, lifted in family:
                if used & lifted:
                    disjoint = False
                    break
                used |= lifted
            if not disjoint:
                continue
            weight = net.field.one()
            for _, path_weight, _ in family:
                weight = weight * path_weight
            families.append(([edges for edges, _, _ in family], weight))
    logger.debug("Examined %d candidate families, %d non-crossing", examined, len(families))
    return families
