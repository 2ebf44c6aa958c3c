"""Highway walk engines: depth-first path enumeration and a length-graded
transfer series. Both are bounded by the homogeneous degree d(h) obtained
from the flow of the whole network, so every measurement is a finite sum.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix
from sympy.polys.domains import QQ

from config import configuration as config
from errors import NonBoundaryVertex, TrivialHomologyClass, TruncationBoundExceeded
from network.surface_network import HomologyClass, Network, Slot, is_highway_transit, is_weighted_transit
from network.wiring import mirror

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Transition:
    target: str
    vertex: Optional[str]
    weighted: bool


def _add(a: HomologyClass, b: HomologyClass) -> HomologyClass:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: HomologyClass, b: HomologyClass) -> HomologyClass:
    return tuple(x - y for x, y in zip(a, b))


class WalkGraph:
    """Directed edge graph of a network with highway transitions and the
    linear functional giving the number of highway crossings per class."""

    def __init__(self, net: Network):
        self.net = net
        self.highway: Dict[str, List[Transition]] = {}
        # all four transits, with +1 for highway-in/out, -1 for underway-in/out
        self.full: Dict[str, List[Tuple[str, int]]] = {}
        for edge in net.edges.values():
            if edge.is_loop:
                self.highway[edge.id] = [Transition(edge.id, None, False)]
                self.full[edge.id] = [(edge.id, 0)]
                continue
            head = net.head_slot(edge.id)
            self.highway[edge.id] = []
            self.full[edge.id] = []
            if head is None:
                continue
            vertex, slot_in = head
            for slot_out in Slot.OUTS:
                target = net.edge_at(vertex, slot_out)
                if is_weighted_transit(slot_in, slot_out):
                    delta = 1
                elif not is_highway_transit(slot_in, slot_out):
                    delta = -1
                else:
                    delta = 0
                self.full[edge.id].append((target, delta))
                if delta >= 0:
                    self.highway[edge.id].append(Transition(target, vertex, delta == 1))
        self.monotone = self._monotone_directions()
        self._functional = None

    def _monotone_directions(self) -> List[int]:
        directions = []
        for k in range(self.net.rank):
            values = {self.net.edge_homology(e)[k] for e in self.net.edges}
            if all(v >= 0 for v in values):
                directions.append(1)
            elif all(v <= 0 for v in values):
                directions.append(-1)
            else:
                directions.append(0)
        return directions

    def overshoots(self, hom: HomologyClass, target: HomologyClass) -> bool:
        for direction, value, goal in zip(self.monotone, hom, target):
            if direction > 0 and value > goal:
                return True
            if direction < 0 and value < goal:
                return True
        return False

    def cycle_samples(self) -> List[Tuple[HomologyClass, int]]:
        """(class, highway minus underway transits) of a shortest closed walk through each edge"""
        found = []
        for start in self.net.edges:
            parents = {}
            queue = [start]
            closing = None
            while queue and closing is None:
                edge = queue.pop(0)
                for target, delta in self.full[edge]:
                    if target == start:
                        closing = (edge, delta)
                        break
                    if target not in parents:
                        parents[target] = (edge, delta)
                        queue.append(target)
            if closing is None:
                continue
            edge, count = closing
            hom = self.net.edge_homology(edge)
            while edge != start:
                edge, delta = parents[edge]
                count += delta
                hom = _add(hom, self.net.edge_homology(edge))
            found.append((hom, count))
        return found

    def degree_functional(self):
        """(D, rows): crossings of a highway cycle in class h equal D.h on the span of rows"""
        if self._functional is None:
            rank = self.net.rank
            cycles = self.cycle_samples()
            rows = [list(h) for h, _ in cycles if any(h)]
            values = [c for h, c in cycles if any(h)]
            if rank == 0 or not rows:
                self._functional = ((QQ(0),) * rank, [])
            else:
                system = Matrix(rows)
                solution, params = system.gauss_jordan_solve(Matrix(values))
                solution = solution.subs({p: 0 for p in params})
                functional = tuple(QQ.from_sympy(value) for value in solution)
                self._functional = (functional, rows)
        return self._functional

    def in_cycle_span(self, h: HomologyClass) -> bool:
        _, rows = self.degree_functional()
        if not any(h):
            return True
        if not rows:
            return False
        return Matrix(rows + [list(h)]).rank() == Matrix(rows).rank()

    def cycle_degree(self, h: HomologyClass) -> Optional[int]:
        if not self.in_cycle_span(h):
            return None
        functional, _ = self.degree_functional()
        value = sum((d * QQ(x) for d, x in zip(functional, h)), QQ(0))
        if value.denominator != 1 or value < 0:
            return None
        return int(value)

    def base_path(self, start: str, end: str) -> Optional[Tuple[HomologyClass, int]]:
        """Class and crossing count of some highway path start -> end, by breadth-first search"""
        parents = {start: None}
        queue = [start]
        while queue:
            edge = queue.pop(0)
            if edge == end:
                break
            for step in self.highway[edge]:
                if step.target not in parents:
                    parents[step.target] = (edge, step.weighted)
                    queue.append(step.target)
        if end not in parents:
            return None
        hom = self.net.edge_homology(end)
        crossings = 0
        edge = end
        while parents[edge] is not None:
            edge, weighted = parents[edge]
            hom = _add(hom, self.net.edge_homology(edge))
            crossings += int(weighted)
        return hom, crossings

    def path_degree(self, start: str, end: str, h: HomologyClass) -> Optional[int]:
        base = self.base_path(start, end)
        if base is None:
            return None
        h0, c0 = base
        difference = _sub(h, h0)
        if not self.in_cycle_span(difference):
            return None
        functional, _ = self.degree_functional()
        value = QQ(c0) + sum((d * QQ(x) for d, x in zip(functional, difference)), QQ(0))
        if value.denominator != 1 or value < 0:
            return None
        return int(value)

    def length_cap(self, degree: int, h: HomologyClass) -> int:
        return (degree + config.TRUNCATION_SLACK + sum(abs(x) for x in h)) * max(1, len(self.net.edges))


def boundary_endpoints(net: Network, u: str, v: str) -> Tuple[str, str]:
    start = net.boundary_edge(u)
    end = net.boundary_edge(v)
    if net.edges[start].tail is None or net.edges[start].tail[0] != u:
        raise NonBoundaryVertex(f"{u} is not a boundary source")
    if net.edges[end].head is None or net.edges[end].head[0] != v:
        raise NonBoundaryVertex(f"{v} is not a boundary sink")
    return start, end


class PathEnumerator:
    """Depth-first enumeration of highway walks in a fixed homology class"""

    def __init__(self, net: Network, logger=None, graph: Optional[WalkGraph] = None):
        self.net = net
        self.graph = graph or WalkGraph(net)
        self.logger = (logger or logging.getLogger(__name__)).getChild(self.__class__.__name__)

    def _walks(self, start: str, target: HomologyClass, degree: int, closing: bool, end: Optional[str]):
        """Yields (edges, weight) of highway walks from start in class target.

        closing: walks return to start (the closing transit is included);
        otherwise walks end on the sink edge end.
        """
        net, graph = self.net, self.graph
        cap = graph.length_cap(degree, target)
        one = net.field.one()
        on_path = defaultdict(int)
        start_hom = net.edge_homology(start)
        stack = [(start, start_hom, 0, one, (start,), False)]
        while stack:
            edge, hom, crossings, weight, edges, leaving = stack.pop()
            key = (edge, hom)
            if leaving:
                on_path[key] -= 1
                continue
            if on_path[key]:
                continue
            if len(edges) > cap:
                raise TruncationBoundExceeded(
                    f"walk from {start} exceeded {cap} steps in class {target}")
            if not closing and edge == end and hom == target:
                yield edges, weight
            on_path[key] += 1
            stack.append((edge, hom, crossings, weight, edges, True))
            for step in graph.highway[edge]:
                count = crossings + int(step.weighted)
                if count > degree:
                    continue
                new_weight = weight * net.weight(step.vertex) if step.weighted else weight
                if closing and step.target == start and hom == target:
                    yield edges, new_weight
                new_hom = _add(hom, net.edge_homology(step.target))
                if graph.overshoots(new_hom, target):
                    continue
                stack.append((step.target, new_hom, count, new_weight, edges + (step.target,), False))

    def boundary_paths(self, u: str, v: str, h: HomologyClass) -> List[Tuple[Tuple[str, ...], object]]:
        start, end = boundary_endpoints(self.net, u, v)
        degree = self.graph.path_degree(start, end, h)
        if degree is None:
            return []
        return list(self._walks(start, h, degree, closing=False, end=end))

    def boundary_measurement(self, u: str, v: str, h: HomologyClass):
        total = self.net.field.zero()
        for _, weight in self.boundary_paths(u, v, h):
            total = total + weight
        return total

    def cycle_measurement(self, h: HomologyClass):
        if not any(h):
            raise TrivialHomologyClass("cycle measurements need a nontrivial class")
        field = self.net.field
        total = field.zero()
        degree = self.graph.cycle_degree(h)
        if degree is None:
            return total
        for start in self.net.edges:
            for edges, weight in self._walks(start, h, degree, closing=True, end=None):
                total = total + weight / field.from_int(len(edges))
        self.logger.debug("Cycle measurement in class %s has degree %d", h, degree)
        return total


class TransferSeries:
    """Length-graded powers of the transfer matrix, merged by state"""

    def __init__(self, net: Network, logger=None, graph: Optional[WalkGraph] = None):
        self.net = net
        self.graph = graph or WalkGraph(net)
        self.logger = (logger or logging.getLogger(__name__)).getChild(self.__class__.__name__)

    def _run(self, start: str, target: HomologyClass, degree: int, closing: bool, end: Optional[str]):
        net, graph = self.net, self.graph
        field = net.field
        cap = graph.length_cap(degree, target)
        total = field.zero()
        frontier = {(start, net.edge_homology(start), 0): field.one()}
        for length in range(1, cap + 1):
            following = defaultdict(field.zero)
            for (edge, hom, crossings), coeff in frontier.items():
                if not closing and edge == end and hom == target:
                    total = total + coeff
                for step in graph.highway[edge]:
                    count = crossings + int(step.weighted)
                    if count > degree:
                        continue
                    value = coeff * net.weight(step.vertex) if step.weighted else coeff
                    if closing and step.target == start and hom == target:
                        total = total + value / field.from_int(length)
                    new_hom = _add(hom, net.edge_homology(step.target))
                    if graph.overshoots(new_hom, target):
                        continue
                    following[(step.target, new_hom, count)] += value
            frontier = {key: value for key, value in following.items() if not field.is_zero(value)}
            if not frontier:
                break
        else:
            self.logger.debug("Series from %s stopped at the length cap %d", start, cap)
            if not closing:
                for (edge, hom, _), coeff in frontier.items():
                    if edge == end and hom == target:
                        total = total + coeff
        return total

    def boundary_measurement(self, u: str, v: str, h: HomologyClass):
        start, end = boundary_endpoints(self.net, u, v)
        degree = self.graph.path_degree(start, end, h)
        if degree is None:
            return self.net.field.zero()
        return self._run(start, h, degree, closing=False, end=end)

    def cycle_measurement(self, h: HomologyClass):
        if not any(h):
            raise TrivialHomologyClass("cycle measurements need a nontrivial class")
        field = self.net.field
        degree = self.graph.cycle_degree(h)
        total = field.zero()
        if degree is None:
            return total
        for start in self.net.edges:
            total = total + self._run(start, h, degree, closing=True, end=None)
        return total


def boundary_measurement(net: Network, u: str, v: str, h: Sequence[int], engine: str = "paths"):
    """
    Sum of the weights of highway paths u -> v in class h.
    :param net: network
    :param u: boundary source id
    :param v: boundary sink id
    :param h: homology class (raw slice crossings of the path)
    :param engine: "paths" for depth-first enumeration, "series" for the transfer series
    :return: exact field element
    """
    h = net.surface.homology_class(h)
    runner = PathEnumerator(net) if engine == "paths" else TransferSeries(net)
    return runner.boundary_measurement(u, v, h)


def cycle_measurement(net: Network, h: Sequence[int], engine: str = "paths"):
    """Sum of wt(q)/mult(q) over highway cycles q in the nontrivial class h"""
    h = net.surface.homology_class(h)
    runner = PathEnumerator(net) if engine == "paths" else TransferSeries(net)
    return runner.cycle_measurement(h)


def cycle_measurement_series(net: Network, h: Sequence[int]):
    return cycle_measurement(net, h, engine="series")


def measurement_degree(net: Network, h: Sequence[int]) -> Optional[int]:
    """Homogeneous degree of the cycle measurement in class h, None if no cycle can have it"""
    return WalkGraph(net).cycle_degree(net.surface.homology_class(h))


def underway_boundary_measurement(net: Network, u: str, v: str, h: Sequence[int], engine: str = "paths"):
    """Boundary measurement of underway paths, read as highway paths of the mirror network.

    Classes are taken in the mirror's orientation, where slice signs are negated.
    """
    return boundary_measurement(mirror(net), u, v, h, engine)


def underway_cycle_measurement(net: Network, h: Sequence[int], engine: str = "paths"):
    return cycle_measurement(mirror(net), h, engine)
