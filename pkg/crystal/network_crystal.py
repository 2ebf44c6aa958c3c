"""Crystal structure realized on networks.

A crystal point is the cylinder grid whose k-th column is a whirl (M factor)
or a curl (N factor) carrying the factor's coordinates row by row. The
crystal index i acts on the pair of horizontal wires in rows i and i+1.
"""
import logging
from typing import List, Tuple

from crystal.geometric import CrystalPoint, FactorType, e_c, weyl_s
from errors import InvalidNetwork, UndefinedEpsPhi
from moves.grid_moves import apply_cross_push, apply_merge, apply_remove_zero
from network.grid import Cross, Curl, GridNetwork, Whirl, rotate_torus
from network.surface_network import SurfaceKind
from scalars.field_interface import safe_div

logger = logging.getLogger(__name__)


def grid_of_point(point: CrystalPoint, surface: str = SurfaceKind.CYLINDER) -> GridNetwork:
    columns = [Whirl(x) if kind == FactorType.M else Curl(x) for kind, x in point.factors]
    return GridNetwork(point.n, tuple(columns), point.field, surface)


def point_of_grid(grid: GridNetwork) -> CrystalPoint:
    factors = []
    for column in grid.columns:
        if isinstance(column, Cross):
            raise InvalidNetwork("crystal grids hold whirl and curl columns only")
        factors.append((FactorType.M if isinstance(column, Whirl) else FactorType.N, column.x))
    return CrystalPoint(tuple(factors), grid.field)


def parallel_data(grid: GridNetwork, i: int) -> Tuple[List, List]:
    """
    z and t along the horizontal wires of rows i and i+1. Whirl wires travel
    north and meet row i+1 first; curl wires meet row i first.
    """
    n = grid.n
    upper, lower = i % n, (i + 1) % n
    z, t = [], []
    for column in grid.columns:
        if isinstance(column, Whirl):
            z.append(column.x[upper])
            t.append(column.x[lower])
        elif isinstance(column, Curl):
            z.append(column.x[lower])
            t.append(column.x[upper])
        else:
            raise InvalidNetwork("parallel wires are only read across whirl and curl columns")
    return z, t


def chain_denominator(z: List, t: List, field):
    """sum over s of t[0..s-1] * z[s+1..m-1]"""
    m = len(z)
    total = field.zero()
    for s in range(m):
        term = field.one()
        for value in t[:s]:
            term = term * value
        for value in z[s + 1:]:
            term = term * value
        total = total + term
    return total


def eps_phi_network(grid: GridNetwork, i: int) -> Tuple:
    """
    eps = prod t / D and phi = prod z / D with D the chain denominator.
    :raises UndefinedEpsPhi: when D vanishes
    """
    field = grid.field
    z, t = parallel_data(grid, i)
    denominator = chain_denominator(z, t, field)
    if field.is_zero(denominator):
        raise UndefinedEpsPhi(f"eps/phi of rows {i}, {i + 1} have a zero denominator")
    prod_z, prod_t = field.one(), field.one()
    for value in z:
        prod_z = prod_z * value
    for value in t:
        prod_t = prod_t * value
    return safe_div(prod_t, denominator), safe_div(prod_z, denominator)


def e_c_network(grid: GridNetwork, i: int, c) -> GridNetwork:
    """
    Wiring crystal action: put crossings of weight (c-1) phi before every column
    and (1/c-1) eps after, push the first one through with Yang-Baxter moves,
    then merge the two and remove the resulting zero crossing.
    """
    field = grid.field
    c = field.convert(c)
    eps_value, phi_value = eps_phi_network(grid, i)
    letter = i % grid.n + 1
    front = Cross(letter, (c - field.one()) * phi_value)
    back = Cross(letter, (safe_div(field.one(), c) - field.one()) * eps_value)
    working = grid.replace_columns((front,) + grid.columns + (back,))
    for j in range(len(grid.columns)):
        working = apply_cross_push(working, j)
    working = apply_merge(working, len(grid.columns))
    working = apply_remove_zero(working, len(grid.columns))
    return working


def s_network(grid: GridNetwork, i: int) -> GridNetwork:
    """Weyl action e^{1/gamma} on the grid, gamma = phi/eps"""
    eps_value, phi_value = eps_phi_network(grid, i)
    return e_c_network(grid, i, safe_div(eps_value, phi_value))


class DoubleAffineCrystal:
    """
    Two crystal structures on an all-whirl torus grid with n rows and m columns.

    The row family (index i mod n) treats the whirl columns as M factors read
    from `column_cut` onwards, with row labels starting at `row_cut`. The
    column family (index j mod m) works on the quarter-turned grid, where the
    columns become m rows of curl factors.
    """

    def __init__(self, row_cut: int = 0, column_cut: int = 0, logger=None):
        self.row_cut = row_cut
        self.column_cut = column_cut
        self.logger = (logger or logging.getLogger(__name__)).getChild(self.__class__.__name__)

    @staticmethod
    def _check(grid: GridNetwork):
        if grid.surface != SurfaceKind.TORUS or not all(isinstance(c, Whirl) for c in grid.columns):
            raise InvalidNetwork("double affine crystals live on all-whirl torus grids")

    def row_point(self, grid: GridNetwork) -> CrystalPoint:
        self._check(grid)
        n, m = grid.n, len(grid.columns)
        factors = []
        for k in range(m):
            column = grid.columns[(self.column_cut + k) % m]
            factors.append((FactorType.M, tuple(column.x[(self.row_cut + r) % n] for r in range(n))))
        return CrystalPoint(tuple(factors), grid.field)

    def _write_rows(self, grid: GridNetwork, point: CrystalPoint) -> GridNetwork:
        n, m = grid.n, len(grid.columns)
        columns = list(grid.columns)
        for k, (_, x) in enumerate(point.factors):
            values = [None] * n
            for r in range(n):
                values[(self.row_cut + r) % n] = x[r]
            columns[(self.column_cut + k) % m] = Whirl(tuple(values))
        return grid.replace_columns(columns)

    def e_row(self, grid: GridNetwork, i: int, c) -> GridNetwork:
        point = e_c(self.row_point(grid), i, c)
        self.logger.debug("row e_%d applied", i)
        return self._write_rows(grid, point)

    def s_row(self, grid: GridNetwork, i: int) -> GridNetwork:
        return self._write_rows(grid, weyl_s(self.row_point(grid), i))

    def column_point(self, grid: GridNetwork) -> CrystalPoint:
        self._check(grid)
        rotated = rotate_torus(grid)
        n, m = grid.n, len(grid.columns)
        start = (n - self.row_cut) % n
        factors = []
        for k in range(n):
            column = rotated.columns[(start + k) % n]
            factors.append((FactorType.N, tuple(column.x[(self.column_cut + r) % m] for r in range(m))))
        return CrystalPoint(tuple(factors), grid.field)

    def _write_columns(self, grid: GridNetwork, point: CrystalPoint) -> GridNetwork:
        rotated = rotate_torus(grid)
        n, m = grid.n, len(grid.columns)
        start = (n - self.row_cut) % n
        columns = list(rotated.columns)
        for k, (_, x) in enumerate(point.factors):
            values = [None] * m
            for r in range(m):
                values[(self.column_cut + r) % m] = x[r]
            columns[(start + k) % n] = Curl(tuple(values))
        return rotate_torus(rotated.replace_columns(columns))

    def e_column(self, grid: GridNetwork, j: int, c) -> GridNetwork:
        point = e_c(self.column_point(grid), j, c)
        self.logger.debug("column e_%d applied", j)
        return self._write_columns(grid, point)

    def s_column(self, grid: GridNetwork, j: int) -> GridNetwork:
        return self._write_columns(grid, weyl_s(self.column_point(grid), j))

    def finite_row_indices(self, grid: GridNetwork) -> List[int]:
        """Row-family indices whose wire pair does not straddle the row cut"""
        return list(range(grid.n - 1))

    def finite_column_indices(self, grid: GridNetwork) -> List[int]:
        return list(range(len(grid.columns) - 1))
