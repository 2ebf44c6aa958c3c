"""Generating functions of boundary and cycle measurements on the cylinder.

The homology variable t marks slice crossings; A is the transfer matrix of
the directed edge graph with A(e -> f) = (transit weight) * t^[f].
"""
import logging
from math import comb
from typing import Dict, List

from sympy.polys.domains import QQ

from errors import NonBoundaryVertex
from measurements.walks import TransferSeries, WalkGraph, boundary_endpoints
from network.surface_network import Network, SurfaceKind
from scalars.linalg import solve_sparse
from scalars.poly1 import RatFun1, t_field

logger = logging.getLogger(__name__)


def _reachable(graph: WalkGraph, start: str) -> List[str]:
    seen = {start}
    order = [start]
    for edge in order:
        for step in graph.highway[edge]:
            if step.target not in seen:
                seen.add(step.target)
                order.append(step.target)
    return order


def boundary_genfun(net: Network, u: str, v: str) -> RatFun1:
    """
    M_{u,v}(t) as the (u, v) entry of (I - A)^{-1}, times t^[e_u].
    :param net: cylinder network with field-valued weights
    :param u: boundary source
    :param v: boundary sink
    :return: exact rational function in t
    """
    if net.surface.kind != SurfaceKind.CYLINDER:
        raise NonBoundaryVertex("generating functions in one variable need a cylinder")
    field = net.field
    graph = WalkGraph(net)
    start, end = boundary_endpoints(net, u, v)
    states = _reachable(graph, start)
    if end not in states:
        return RatFun1.zero(field)
    index = {edge: i for i, edge in enumerate(states)}
    one = RatFun1.one(field).value
    rows = []
    for edge in states:
        row: Dict[int, object] = {index[edge]: one}
        for step in graph.highway[edge]:
            weight = net.weight(step.vertex) if step.weighted else field.one()
            entry = RatFun1.t_power(field, net.edge_homology(step.target)[0], weight).value
            j = index[step.target]
            row[j] = row.get(j, 0) - entry
            if not row[j]:
                del row[j]
        rows.append(row)
    rhs = [one if edge == end else 0 for edge in states]
    solution = solve_sparse(rows, rhs, t_field(field).to_domain())
    result = RatFun1(solution[index[start]], field=field) * RatFun1.t_power(field, net.edge_homology(start)[0])
    logger.debug("Generating function %s -> %s over %d states", u, v, len(states))
    return result


def cycle_genfun(net: Network, k_max: int) -> List:
    """Coefficients [M^[1], ..., M^[k_max]] of the cylinder cycle generating function"""
    series = TransferSeries(net)
    return [series.cycle_measurement((k,)) for k in range(1, k_max + 1)]


def one_vertex_torus_value(n_vertical: int, m_horizontal: int):
    """Closed form coefficient of x^(n-m) for the one-vertex torus in class (n, m)"""
    if n_vertical <= 0 and m_horizontal <= 0:
        return QQ(0)
    if m_horizontal == 0:
        return QQ(1, n_vertical) if n_vertical > 0 else QQ(0)
    if n_vertical < m_horizontal:
        return QQ(0)
    return QQ(comb(n_vertical - 1, m_horizontal - 1), m_horizontal)


def one_vertex_torus_table(k_max: int) -> List[List]:
    """Rows m = 0..k_max, columns n = 0..k_max of the closed form"""
    return [[one_vertex_torus_value(n, m) for n in range(k_max + 1)] for m in range(k_max + 1)]
