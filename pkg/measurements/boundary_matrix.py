"""Boundary measurement matrix M(N) of a cylinder network with n sources on
the left and n sinks on the right."""
import logging
from typing import List

from errors import WireOrientationMismatch
from loop_group.loop_element import LoopElement
from measurements.genfun import boundary_genfun
from network.surface_network import Network, SurfaceKind
from network.wiring import snake_decomposition
from scalars.poly1 import RatFun1

logger = logging.getLogger(__name__)


def _ordered_boundary(net: Network):
    sources = sorted(net.sources(), key=lambda v: net.vertices[v].position)
    sinks = sorted(net.sinks(), key=lambda v: net.vertices[v].position)
    for v in net.boundary_vertices():
        vertex = net.vertices[v]
        expected = sources if vertex.component == 0 else sinks
        if v not in expected:
            raise WireOrientationMismatch(f"boundary vertex {v} has the wrong orientation")
    if len(sources) != len(sinks):
        raise WireOrientationMismatch(f"{len(sources)} sources but {len(sinks)} sinks")
    return sources, sinks


def boundary_matrix(net: Network) -> LoopElement:
    """
    Entry (i, j) collects the highway paths from source i to the sink reached by
    the snake path starting at source j, shifted by the snake's winding so the
    snakes themselves sit on the diagonal.
    :param net: cylinder network, horizontal wires left to right
    :return: the loop element M(net)
    """
    if net.surface.kind != SurfaceKind.CYLINDER:
        raise WireOrientationMismatch("boundary matrices are defined on the cylinder")
    sources, sinks = _ordered_boundary(net)
    n = len(sources)
    field = net.field
    if n == 0:
        return LoopElement(0, [], field)
    snake_end = {}
    for strand in snake_decomposition(net):
        if strand.closed:
            continue
        first, last = net.edges[strand.edges[0]], net.edges[strand.edges[-1]]
        winding = sum(net.edge_homology(e)[0] for e in strand.edges)
        snake_end[first.tail[0]] = (last.head[0], winding)
    rows: List[List[RatFun1]] = []
    for u in sources:
        row = []
        for w in sources:
            sink, winding = snake_end[w]
            entry = boundary_genfun(net, u, sink)
            row.append(entry * RatFun1.t_power(field, -winding))
        rows.append(row)
    result = LoopElement(n, rows, field)
    logger.debug("Boundary matrix of a %d-source network computed", n)
    return result
