"""Torus action on vertex weights.

Snakes are the vertices of an auxiliary graph H with one edge per interior
vertex v, from the snake through the highway in-edge of v to the snake
through its highway out-edge. A highway walk is a walk in H, and its weight
only sees the H edges it uses. Integer vectors w on the edges of H that are
orthogonal to every walk vector rescale vertex weights without changing any
measurement.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from config.configuration import EXPLOSION_CAP
from errors import ExplosionGuard, InvalidNetwork
from network.surface_network import Network, Slot
from network.wiring import snake_decomposition

logger = logging.getLogger(__name__)


class SNF:
    """
    Smith normal form of an integer matrix by repeated Euclidean elimination.
    D = left @ A @ right with left and right unimodular.
    """

    def __init__(self, matrix):
        self.matrix = np.array(matrix, dtype=object)
        rows, columns = self.matrix.shape
        self.left = np.identity(rows, dtype=object)
        self.right = np.identity(columns, dtype=object)

    def _pivot(self, s: int):
        best = None
        rows, columns = self.matrix.shape
        for i in range(s, rows):
            for j in range(s, columns):
                value = abs(self.matrix[i, j])
                if value != 0 and (best is None or value < best[0]):
                    best = (value, i, j)
        return None if best is None else best[1:]

    def _swap_rows(self, a: int, b: int):
        self.matrix[[a, b]] = self.matrix[[b, a]]
        self.left[[a, b]] = self.left[[b, a]]

    def _swap_columns(self, a: int, b: int):
        self.matrix[:, [a, b]] = self.matrix[:, [b, a]]
        self.right[:, [a, b]] = self.right[:, [b, a]]

    def _add_row(self, target: int, source: int, k: int):
        self.matrix[target] = self.matrix[target] + k * self.matrix[source]
        self.left[target] = self.left[target] + k * self.left[source]

    def _add_column(self, target: int, source: int, k: int):
        self.matrix[:, target] = self.matrix[:, target] + k * self.matrix[:, source]
        self.right[:, target] = self.right[:, target] + k * self.right[:, source]

    def _non_divisible(self, s: int):
        rows, columns = self.matrix.shape
        for i in range(s + 1, rows):
            for j in range(s + 1, columns):
                if self.matrix[i, j] % self.matrix[s, s] != 0:
                    return i
        return None

    def compute(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray, int]:
        """
        :return: (D, left, right, rank)
        """
        rows, columns = self.matrix.shape
        s = 0
        while s < min(rows, columns):
            pivot = self._pivot(s)
            if pivot is None:
                break
            self._swap_rows(s, pivot[0])
            self._swap_columns(s, pivot[1])
            done = True
            for i in range(s + 1, rows):
                if self.matrix[i, s] != 0:
                    self._add_row(i, s, -(self.matrix[i, s] // self.matrix[s, s]))
                    done = done and self.matrix[i, s] == 0
            for j in range(s + 1, columns):
                if self.matrix[s, j] != 0:
                    self._add_column(j, s, -(self.matrix[s, j] // self.matrix[s, s]))
                    done = done and self.matrix[s, j] == 0
            if not done:
                continue
            row = self._non_divisible(s)
            if row is not None:
                self._add_row(s, row, 1)
                continue
            if self.matrix[s, s] < 0:
                self.matrix[s] = -self.matrix[s]
                self.left[s] = -self.left[s]
            s += 1
        return self.matrix, self.left, self.right, s


def integer_kernel(matrix, columns: int) -> List[Tuple[int, ...]]:
    """
    Lattice basis of {w in Z^columns : matrix @ w = 0}.
    :param matrix: list of integer rows, possibly empty
    :param columns: number of columns
    :return: basis vectors as tuples
    """
    if not matrix:
        return [tuple(1 if i == j else 0 for i in range(columns)) for j in range(columns)]
    _, _, right, rank = SNF(matrix).compute()
    return [tuple(int(right[i, j]) for i in range(columns)) for j in range(rank, columns)]


@dataclass(frozen=True)
class TorusActionBasis:
    """H edges are named by their interior vertex; basis vectors are indexed like `edges`"""
    edges: Tuple[str, ...]
    basis: Tuple[Tuple[int, ...], ...]
    generators: Tuple[Tuple[int, ...], ...] = ()

    def to_dict(self) -> dict:
        return {"edges": list(self.edges), "basis": [list(w) for w in self.basis]}


def snake_graph(net: Network) -> Tuple[int, Dict[str, Tuple[int, int]], List[int]]:
    """
    :param net: valid network
    :return: (snake count, vertex -> (tail snake, head snake), indices of open snakes)
    """
    snakes = snake_decomposition(net)
    owner = {}
    for index, strand in enumerate(snakes):
        for edge_id in strand.edges:
            owner[edge_id] = index
    edges = {}
    for vid in net.interior_vertices():
        e_in, e_out = net.edge_at(vid, Slot.IN_HIGHWAY), net.edge_at(vid, Slot.OUT_HIGHWAY)
        if e_in is None or e_out is None:
            raise InvalidNetwork(f"vertex {vid} is missing a highway edge")
        edges[vid] = (owner[e_in], owner[e_out])
    terminals = [i for i, strand in enumerate(snakes) if not strand.closed]
    return len(snakes), edges, terminals


def _simple_walks(count: int, edges: Sequence[Tuple[str, int, int]], terminals: Sequence[int]):
    outgoing: Dict[int, List[Tuple[int, int]]] = {i: [] for i in range(count)}
    for index, (_, tail, head) in enumerate(edges):
        outgoing[tail].append((index, head))
    terminal_set = set(terminals)
    found = set()

    def record(used: List[int]):
        vector = [0] * len(edges)
        for index in used:
            vector[index] += 1
        found.add(tuple(vector))
        if len(found) > EXPLOSION_CAP:
            raise ExplosionGuard(f"more than {EXPLOSION_CAP} simple walks in the snake graph")

    # cycles through their smallest snake, paths from every terminal
    for start in range(count):
        stack = [(start, [], {start})]
        while stack:
            node, used, visited = stack.pop()
            if start in terminal_set and node in terminal_set and used:
                record(used)
            for index, head in outgoing[node]:
                if head == start:
                    record(used + [index])
                elif head not in visited and (head > start or start in terminal_set):
                    stack.append((head, used + [index], visited | {head}))
    return sorted(found)


def torus_action_basis(net: Network) -> TorusActionBasis:
    """
    Lattice of weight rescalings that leave every measurement unchanged.
    :param net: valid network on any surface
    :return: TorusActionBasis with W as an integer kernel of the walk generators
    """
    count, edge_map, terminals = snake_graph(net)
    names = tuple(sorted(edge_map))
    edges = [(name, edge_map[name][0], edge_map[name][1]) for name in names]
    generators = _simple_walks(count, edges, terminals)
    basis = integer_kernel([list(g) for g in generators], len(names))
    logger.debug("Torus action: %d snakes, %d generators, rank %d", count, len(generators), len(basis))
    return TorusActionBasis(names, tuple(basis), tuple(generators))


def torus_action_apply(net: Network, basis: TorusActionBasis, tau: Sequence) -> Network:
    """
    y_v = prod_i tau_i^<e_v, w_i> x_v
    :param net: network the basis was computed for
    :param basis: output of torus_action_basis
    :param tau: one nonzero field element per basis vector
    :return: network with rescaled weights
    """
    if len(tau) != len(basis.basis):
        raise InvalidNetwork(f"expected {len(basis.basis)} torus parameters, got {len(tau)}")
    field = net.field
    position = {name: i for i, name in enumerate(basis.edges)}

    def rescale(vid, weight):
        factor = field.one()
        for w, value in zip(basis.basis, tau):
            exponent = w[position[vid]]
            if exponent > 0:
                factor = field.mul(factor, value ** exponent)
            elif exponent < 0:
                factor = field.div(factor, value ** (-exponent))
        return field.mul(weight, factor)

    return net.map_weights(rescale)
