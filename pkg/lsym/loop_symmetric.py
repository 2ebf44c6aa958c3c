"""Loop symmetric functions in the weights of whirl and curl factors.

Factor i (1-based, left to right) carries variables x_i^(r), r in Z/nZ. Whirl
indices are column strict and curl indices row strict in tableaux; both are
weakly increasing along rows and down columns. The cell in row i, column j
(0-based) of a tableau based at residue r has residue r + i - j mod n.
"""
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Callable, Dict, List, Optional, Tuple

from sympy.polys.domains import QQ

from errors import InvalidNetwork
from loop_group.factorization import grid_matrix
from network.grid import Curl, GridNetwork, Whirl
from scalars.field_interface import safe_div
from scalars.linalg import domain_determinant
from scalars.mpoly import mpoly_ring, ring_gens

logger = logging.getLogger(__name__)

Partition = Tuple[int, ...]


class Tag:
    WHIRL = "whirl"
    CURL = "curl"


@dataclass(frozen=True)
class LoopVarArray:
    n: int
    tags: Tuple[str, ...]
    _ring: object = dataclass_field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "tags", tuple(self.tags))
        if self.n < 1:
            raise InvalidNetwork("loop variables need n >= 1")
        if any(tag not in (Tag.WHIRL, Tag.CURL) for tag in self.tags):
            raise InvalidNetwork(f"unknown strictness tags {self.tags}")

    @classmethod
    def for_grid(cls, grid: GridNetwork) -> "LoopVarArray":
        """One factor per whirl or curl column of a crossing-free grid"""
        tags = []
        for column in grid.columns:
            if isinstance(column, Whirl):
                tags.append(Tag.WHIRL)
            elif isinstance(column, Curl):
                tags.append(Tag.CURL)
            else:
                raise InvalidNetwork("loop variables are read off whirl and curl columns only")
        return cls(grid.n, tuple(tags))

    @property
    def m(self) -> int:
        return len(self.tags)

    @staticmethod
    def name(i: int, r: int) -> str:
        return f"x{i}_{r}"

    def names(self) -> List[str]:
        return [self.name(i, r) for i in range(1, self.m + 1) for r in range(self.n)]

    @property
    def ring(self):
        if self._ring is None:
            object.__setattr__(self, "_ring", mpoly_ring(self.names() or ["x0_0"]))
        return self._ring

    def var(self, i: int, r: int):
        return ring_gens(self.ring)[self.name(i, r % self.n)]

    def is_whirl(self, i: int) -> bool:
        return self.tags[i - 1] == Tag.WHIRL

    def assignment(self, grid: GridNetwork) -> Dict[str, object]:
        """
        Variable values read from a matching grid: x_i^(q) is the weight the
        i-th column puts at (q, q+1) of the boundary matrix, so column weights
        are read through the same diagonal shift grid_matrix applies.
        """
        values = {}
        shift = 0
        for i, column in enumerate(grid.columns, start=1):
            offset = 1 if isinstance(column, Curl) else 0
            for q in range(self.n):
                values[self.name(i, q)] = column.x[(q - shift + offset) % self.n]
            shift += 1 if isinstance(column, Whirl) else -1
        return values


def loop_e(k: int, r: int, variables: LoopVarArray):
    """
    e_k^(r): sum over i_1 <= ... <= i_k, strict at whirl indices, of
    x_{i_1}^(r) x_{i_2}^(r+1) ... x_{i_k}^(r+k-1).
    """
    ring = variables.ring
    if k < 0:
        return ring.zero
    # partial[i] = sum of chains whose last index is i
    partial: Dict[int, object] = {0: ring.one}
    for step in range(k):
        residue = r + step
        following: Dict[int, object] = {}
        for last, value in partial.items():
            for i in range(max(last, 1), variables.m + 1):
                if i == last and variables.is_whirl(i):
                    continue
                term = value * variables.var(i, residue)
                following[i] = following.get(i, ring.zero) + term
        partial = following
    return sum(partial.values(), ring.zero)


def _cells(shape: Partition, inner: Partition) -> List[Tuple[int, int]]:
    inner = tuple(inner) + (0,) * (len(shape) - len(inner))
    for row in range(1, len(shape)):
        if shape[row] > shape[row - 1]:
            raise InvalidNetwork(f"{shape} is not a partition")
    if any(inner[row] > shape[row] for row in range(len(shape))) or len(inner) > len(shape):
        raise InvalidNetwork(f"{inner} does not fit inside {shape}")
    return [(row, col) for row in range(len(shape)) for col in range(inner[row], shape[row])]


def conjugate(shape: Partition) -> Partition:
    if not shape:
        return ()
    return tuple(sum(1 for part in shape if part > col) for col in range(shape[0]))


def loop_tableaux(shape: Partition, m: int, whirl: Callable[[int], bool],
                  inner: Partition = ()) -> List[Dict[Tuple[int, int], int]]:
    """
    Fillings of shape/inner with entries 1..m, weakly increasing along rows and
    columns, whirl entries never repeated in a column, curl entries never
    repeated in a row.
    """
    cells = _cells(tuple(shape), tuple(inner))
    results = []

    def fill(position: int, filling: Dict[Tuple[int, int], int]):
        if position == len(cells):
            results.append(dict(filling))
            return
        row, col = cells[position]
        low = 1
        left, above = filling.get((row, col - 1)), filling.get((row - 1, col))
        if left is not None:
            low = max(low, left + (0 if whirl(left) else 1))
        if above is not None:
            low = max(low, above + (1 if whirl(above) else 0))
        for value in range(low, m + 1):
            if left == value and not whirl(value):
                continue
            if above == value and whirl(value):
                continue
            filling[(row, col)] = value
            fill(position + 1, filling)
            del filling[(row, col)]

    fill(0, {})
    return results


def loop_schur(shape: Partition, variables: LoopVarArray, r: int = 0, inner: Partition = ()):
    """
    s_{shape/inner} = sum over loop tableaux T of prod over cells of x_{T(s)}^(residue(s)).
    :param shape: outer partition
    :param variables: tagged variable array
    :param r: residue of the top-left cell of the outer shape
    :param inner: removed partition
    :return: polynomial in variables.ring
    """
    ring = variables.ring
    total = ring.zero
    for tableau in loop_tableaux(shape, variables.m, variables.is_whirl, inner):
        term = ring.one
        for (row, col), value in tableau.items():
            term = term * variables.var(value, r + row - col)
        total = total + term
    return total


def jacobi_trudi(shape: Partition, e: Callable[[int, int], object], r: int = 0, inner: Partition = ()):
    """
    s_{shape/inner} as the determinant det(e_{b_s - a_t}^{(a_t)}) over the conjugate partitions.
    :param e: (k, residue) -> e_k^(residue); must return 1 for k = 0 and 0 for k < 0
    :param r: residue of the top-left cell, as in loop_schur
    """
    outer_conj = conjugate(tuple(shape))
    inner_conj = conjugate(tuple(inner))
    width = len(outer_conj)
    if width == 0:
        return e(0, r)
    inner_conj = tuple(inner_conj) + (0,) * (width - len(inner_conj))
    base = 1 + r
    starts = [inner_conj[t] - (t + 1) + base for t in range(width)]
    ends = [outer_conj[s] - (s + 1) + base for s in range(width)]
    matrix = [[e(ends[s] - starts[t], starts[t]) for s in range(width)] for t in range(width)]
    return domain_determinant(matrix)


def power_sum(k: int, variables: LoopVarArray):
    """p_k = (1/k) sum_i (prod_r x_i^(r))^k over whirl-only variables"""
    if k < 1:
        raise InvalidNetwork("power sums start at k = 1")
    if any(not variables.is_whirl(i) for i in range(1, variables.m + 1)):
        raise InvalidNetwork("power sums are defined for whirl variables")
    ring = variables.ring
    total = ring.zero
    for i in range(1, variables.m + 1):
        radius = ring.one
        for r in range(variables.n):
            radius = radius * variables.var(i, r)
        total = total + radius ** k
    return total * ring(QQ(1, k))


def rectangle_with_tail(rows: int, columns: int, k: int) -> Tuple[Partition, Partition]:
    """(lambda, mu): the rows x columns rectangle and the same with k more first-column cells"""
    rectangle = (columns,) * rows
    return rectangle, rectangle + (1,) * k


def recover_curl_measurement(e_whole: Callable[[int, int], object], a: int, b: int, k: int, s: int):
    """
    e_k^(s) of the curl factors of a network with b whirls on the left and a
    curls on the right, from the loop elementary functions of the whole network.
    :param e_whole: (k, residue) -> e_k^(residue) of the whole network
    :return: ratio s_mu / s_lambda, both evaluated by Jacobi-Trudi
    """
    if k == 0:
        return e_whole(0, s)
    if a == 0:
        return e_whole(-1, s)
    rectangle, tail = rectangle_with_tail(b, a + 1, k)
    # the first tail cell sits in row b, column 0
    base = s - b
    numerator = jacobi_trudi(tail, e_whole, base)
    denominator = jacobi_trudi(rectangle, e_whole, base)
    return safe_div(numerator, denominator)


def recover_factor_measurements(e_whole: Callable[[int, int], object], a: int, b: int, n: int,
                                k_max: Optional[int] = None) -> Dict[Tuple[int, int], object]:
    """
    Loop elementary functions e_k^(s) of the curl part for 0 <= k <= k_max and all residues s.
    :param k_max: defaults to a
    """
    k_max = a if k_max is None else k_max
    recovered = {}
    for k in range(k_max + 1):
        for s in range(n):
            recovered[(k, s)] = recover_curl_measurement(e_whole, a, b, k, s)
    logger.debug("Recovered %d curl measurements (a=%d, b=%d)", len(recovered), a, b)
    return recovered


def grid_loop_e(grid: GridNetwork) -> Callable[[int, int], object]:
    """e_k^(r) of a grid read from its boundary matrix: entry (r, r+k) of the periodic matrix"""
    matrix = grid_matrix(grid)
    return lambda k, r: matrix.periodic_entry(r, r + k)
