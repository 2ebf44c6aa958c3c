"""Dictionary between cylinder grids and products of whirl, curl and Chevalley matrices.

Column j of a grid contributes its matrix conjugated by the diagonal shift
k_j = (whirl columns before j) - (curl columns before j):
a whirl column x gives M(x), a curl column w gives N(w shifted up by one row)
and Cross(k, a) gives u_k(a).
"""
import itertools
import logging
from typing import List, Sequence, Tuple

from errors import NotReduced, NotReducedWord
from loop_group import affine_perm
from loop_group.loop_element import LoopElement, chevalley, curl_matrix, product, whirl_matrix
from network.grid import Cross, Curl, GridNetwork, Whirl
from network.surface_network import SurfaceKind
from scalars.field_interface import Field
from scalars.linalg import determinant

logger = logging.getLogger(__name__)


def _rotate(values: Sequence, k: int) -> Tuple:
    """(values[i + k])_i with indices mod n"""
    n = len(values)
    return tuple(values[(i + k) % n] for i in range(n))


def column_matrix(column, n: int, field: Field) -> LoopElement:
    if isinstance(column, Whirl):
        return whirl_matrix(column.x, field)
    if isinstance(column, Curl):
        return curl_matrix(_rotate(column.x, 1), field)
    return chevalley(n, column.k, column.a, field)


def grid_matrix(grid: GridNetwork) -> LoopElement:
    """Column by column product; equals the boundary matrix of the grid's network"""
    factors = []
    shift = 0
    for column in grid.columns:
        factors.append(column_matrix(column, grid.n, grid.field).conjugate_shift(shift))
        if isinstance(column, Whirl):
            shift += 1
        elif isinstance(column, Curl):
            shift -= 1
    return product(factors, grid.n, grid.field)


def phi_abw(a_params: Sequence[Sequence], b_params: Sequence[Sequence], word: Sequence[int],
            c_params: Sequence, n: int, field: Field) -> LoopElement:
    """
    N(a_1)...N(a_a) u_{i_1}(c_1)...u_{i_l}(c_l) M(b_1)...M(b_b)
    :param a_params: curl matrix parameters, each of length n
    :param b_params: whirl matrix parameters, each of length n
    :param word: reduced word i_1..i_l
    :param c_params: Chevalley parameters, one per letter
    :return: the product as a loop element
    """
    if len(word) != len(c_params):
        raise NotReducedWord(f"{len(word)} letters but {len(c_params)} parameters")
    affine_perm.ensure_reduced(n, word)
    factors = [curl_matrix(alpha, field) for alpha in a_params]
    factors += [chevalley(n, letter, c, field) for letter, c in zip(word, c_params)]
    factors += [whirl_matrix(beta, field) for beta in b_params]
    return product(factors, n, field)


def grid_for_phi(a_params, b_params, word, c_params, n: int, field: Field) -> GridNetwork:
    """Grid [curls, crossings, whirls] whose matrix is phi_abw of the same arguments"""
    a = len(a_params)
    columns = []
    for j, alpha in enumerate(a_params):
        columns.append(Curl(_rotate(alpha, -j - 1)))
    for letter, c in zip(word, c_params):
        columns.append(Cross((letter + a) % n, c))
    for q, beta in enumerate(b_params):
        columns.append(Whirl(_rotate(beta, q - a)))
    return GridNetwork(n, columns, field)


def phi_params(grid: GridNetwork):
    """Inverse of grid_for_phi on a grid already in [curls, crossings, whirls] order"""
    n = grid.n
    a, b = grid.counts()
    curls = [c for c in grid.columns[:a] if isinstance(c, Curl)]
    whirls = [c for c in grid.columns[len(grid.columns) - b:] if isinstance(c, Whirl)]
    crosses = list(grid.columns[a:len(grid.columns) - b])
    if len(curls) != a or len(whirls) != b or not all(isinstance(c, Cross) for c in crosses):
        raise NotReduced("grid is not in curls-crossings-whirls order")
    a_params = [_rotate(curl.x, j + 1) for j, curl in enumerate(curls)]
    word = [(cross.k - a) % n for cross in crosses]
    c_params = [cross.a for cross in crosses]
    b_params = [_rotate(whirl.x, a - q) for q, whirl in enumerate(whirls)]
    return a_params, b_params, word, c_params


def wire_endpoints(grid: GridNetwork) -> Tuple[int, ...]:
    """Window of the horizontal wire map: wire from row i ends on lifted row pi(i), 1-indexed"""
    n = grid.n
    positions = list(range(1, n + 1))
    for column in grid.columns:
        if not isinstance(column, Cross):
            continue
        upper = (column.k - 1) % n
        lower = column.k % n
        for w, p in enumerate(positions):
            row = (p - 1) % n
            if row == upper:
                positions[w] = p + 1
            elif row == lower:
                positions[w] = p - 1
    return tuple(positions)


def cell_data(grid: GridNetwork):
    """
    Cell of a reduced cylinder grid.
    :param grid: cylinder grid
    :return: (curl count a, whirl count b, window of w)
    """
    if grid.surface != SurfaceKind.CYLINDER:
        raise NotReduced("cell data is defined for cylinder grids")
    a, b = grid.counts()
    w = affine_perm.inverse(wire_endpoints(grid))
    crossings = sum(1 for column in grid.columns if isinstance(column, Cross))
    if affine_perm.length(w) != crossings:
        raise NotReduced(f"{crossings} crossings for a permutation of length {affine_perm.length(w)}")
    return a, b, w


def cross_word(grid: GridNetwork) -> List[int]:
    return [column.k % grid.n for column in grid.columns if isinstance(column, Cross)]


def tnn_window_check(y: LoopElement, size: int, offsets: Sequence[int]) -> bool:
    """
    Check all minors of the size x size windows of the periodic matrix starting
    at (r, r + k) for r in one period and k in offsets.
    """
    field = y.field
    zero = field.zero()
    for row0 in range(y.n):
        for k in offsets:
            window = y.window(row0, row0 + k, size)
            for m in range(1, size + 1):
                for rows in itertools.combinations(range(size), m):
                    for cols in itertools.combinations(range(size), m):
                        minor = determinant([[window[r][c] for c in cols] for r in rows], field)
                        if minor < zero:
                            logger.debug(f"negative minor rows={rows} cols={cols} at ({row0}, {row0 + k})")
                            return False
    return True
