"""Local and global moves on grid networks.

Every move here rewrites a window of adjacent columns and keeps the boundary
and cycle measurements of the grid's network. Column indices address the
leftmost column of the window.
"""
import logging
from collections import deque
from dataclasses import dataclass, field as dataclass_field
from random import Random
from typing import Dict, List, Optional, Sequence, Tuple

from config import configuration as config
from errors import ExplosionGuard, NonZeroWeight, NotReduced, PatternMismatch
from loop_group.factorization import cell_data
from network.grid import Cross, Curl, GridNetwork, Whirl
from network.surface_network import SurfaceKind
from scalars.field_interface import Field, safe_div

logger = logging.getLogger(__name__)


class MoveKind:
    YB = "YB"
    CR = "CR"
    XM = "XM"
    XR = "XR"
    WHURL = "Whurl"
    WHIRL_CURL = "WhirlCurl"
    PUSH = "Push"
    COMMUTE = "Commute"
    SPLIT = "Split"
    INSERT_ZERO = "InsertZero"

    ALL = (YB, CR, XM, XR, WHURL, WHIRL_CURL, PUSH, COMMUTE, SPLIT, INSERT_ZERO)
    # moves that keep the reduced word of the crossing columns
    WORD_PRESERVING = (WHURL, WHIRL_CURL, PUSH)


@dataclass(frozen=True)
class MoveSite:
    kind: str
    anchor: Tuple
    params: Dict = dataclass_field(default_factory=dict, hash=False, compare=False)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "site": list(self.anchor), "params": dict(self.params)}


# ---------------------------------------------------------------- closed forms

def yang_baxter(x, y, z):
    """(x, y, z) -> (yz/(x+z), x+z, xy/(x+z)); an involution"""
    s = x + z
    return safe_div(y * z, s), s, safe_div(x * y, s)


def kappa(z: Sequence, t: Sequence, r: int, field: Field):
    """sum over s of t[r+1..r+s] * z[r+s+1..r+n-1], indices mod n"""
    n = len(z)
    total = field.zero()
    for s in range(n):
        term = field.one()
        for step in range(1, s + 1):
            term = term * t[(r + step) % n]
        for step in range(s + 1, n):
            term = term * z[(r + step) % n]
        total = total + term
    return total


def whurl_weights(x: Sequence, y: Sequence, field: Field, rightward: Optional[Sequence[bool]] = None):
    """
    Whurl transformation of two parallel wire cycles.
    :param x: weights on the left cycle, one per horizontal wire
    :param y: weights on the right cycle
    :param rightward: orientation of each horizontal wire, all True by default
    :return: (x', y')
    """
    n = len(x)
    if rightward is None:
        rightward = [True] * n
    z = [x[i] if rightward[i] else y[i] for i in range(n)]
    t = [y[i - 1] if rightward[i - 1] else x[i - 1] for i in range(n)]
    kappas = [kappa(z, t, r, field) for r in range(n)]
    x_new, y_new = [], []
    for i in range(n):
        eps = 1 if rightward[i] else 0
        upper = kappas[(i + eps) % n]
        lower = kappas[(i + 1 - eps) % n]
        x_new.append(safe_div(y[i] * upper, lower))
        y_new.append(safe_div(x[i] * lower, upper))
    return tuple(x_new), tuple(y_new)


def whirl_curl_weights(x: Sequence, y: Sequence):
    """[Whirl x, Curl y] -> weights of [Curl x', Whirl y']"""
    n = len(x)
    sums = [x[i] + y[i] for i in range(n)]
    curl = tuple(safe_div(y[i] * sums[i - 1], sums[i]) for i in range(n))
    whirl = tuple(safe_div(x[i] * sums[i - 1], sums[i]) for i in range(n))
    return curl, whirl


def curl_whirl_weights(c: Sequence, d: Sequence):
    """[Curl c, Whirl d] -> weights of [Whirl x, Curl y]; inverse of whirl_curl_weights"""
    n = len(c)
    sums = [c[i] + d[i] for i in range(n)]
    whirl = tuple(safe_div(d[i] * sums[(i + 1) % n], sums[i]) for i in range(n))
    curl = tuple(safe_div(c[i] * sums[(i + 1) % n], sums[i]) for i in range(n))
    return whirl, curl


def _replace(values: Sequence, updates: Dict[int, object]) -> Tuple:
    return tuple(updates.get(i, v) for i, v in enumerate(values))


# ---------------------------------------------------------------- helpers

def _columns(grid: GridNetwork, j: int, width: int) -> List:
    if j < 0 or j + width > len(grid.columns):
        raise PatternMismatch(f"columns {j}..{j + width - 1} out of range")
    return list(grid.columns[j:j + width])


def _splice(grid: GridNetwork, j: int, width: int, replacement: Sequence) -> GridNetwork:
    columns = list(grid.columns)
    columns[j:j + width] = list(replacement)
    return grid.replace_columns(columns)


def _adjacent(grid: GridNetwork, k: int, l: int) -> bool:
    """Crossing letters k and l share a row"""
    n = grid.n
    if grid.surface == SurfaceKind.DISK:
        return abs(k % n - l % n) == 1
    return (k - l) % n in (1, n - 1)


# ---------------------------------------------------------------- crossing moves

def apply_yb(grid: GridNetwork, j: int) -> GridNetwork:
    """[Cross(k, x), Cross(k', y), Cross(k, z)] with k' = k +- 1 -> [Cross(k', .), Cross(k, .), Cross(k', .)]"""
    first, middle, last = _columns(grid, j, 3)
    if not all(isinstance(c, Cross) for c in (first, middle, last)):
        raise PatternMismatch(f"YB at column {j} needs three crossings")
    n = grid.n
    if n < 3:
        raise PatternMismatch("YB needs at least three rows")
    if first.k % n != last.k % n or not _adjacent(grid, first.k, middle.k):
        raise PatternMismatch(f"YB at column {j}: letters {first.k}, {middle.k}, {last.k}")
    a, b, c = yang_baxter(first.a, middle.a, last.a)
    return _splice(grid, j, 3, [Cross(middle.k, a), Cross(first.k, b), Cross(middle.k, c)])


def commute_crossings(grid: GridNetwork, j: int) -> GridNetwork:
    left, right = _columns(grid, j, 2)
    if not (isinstance(left, Cross) and isinstance(right, Cross)):
        raise PatternMismatch(f"commutation at column {j} needs two crossings")
    n = grid.n
    if left.k % n == right.k % n or _adjacent(grid, left.k, right.k):
        raise PatternMismatch(f"crossings {left.k} and {right.k} do not commute")
    return _splice(grid, j, 2, [right, left])


def apply_merge(grid: GridNetwork, j: int) -> GridNetwork:
    left, right = _columns(grid, j, 2)
    if not (isinstance(left, Cross) and isinstance(right, Cross)) or left.k % grid.n != right.k % grid.n:
        raise PatternMismatch(f"merge at column {j} needs two crossings of the same rows")
    return _splice(grid, j, 2, [Cross(left.k, left.a + right.a)])


def split_crossing(grid: GridNetwork, j: int, a) -> GridNetwork:
    """Inverse of apply_merge: Cross(k, c) -> Cross(k, a), Cross(k, c - a)"""
    (column,) = _columns(grid, j, 1)
    if not isinstance(column, Cross):
        raise PatternMismatch(f"column {j} is not a crossing")
    return _splice(grid, j, 1, [Cross(column.k, a), Cross(column.k, column.a - a)])


def apply_remove_zero(grid: GridNetwork, j: int) -> GridNetwork:
    (column,) = _columns(grid, j, 1)
    if not isinstance(column, Cross):
        raise PatternMismatch(f"column {j} is not a crossing")
    if not grid.field.is_zero(column.a):
        raise NonZeroWeight(f"crossing at column {j} has weight {column.a}")
    return _splice(grid, j, 1, [])


def insert_zero_crossing(grid: GridNetwork, j: int, k: int) -> GridNetwork:
    columns = list(grid.columns)
    columns.insert(j, Cross(k, grid.field.zero()))
    return grid.replace_columns(columns)


# ---------------------------------------------------------------- pushes

def apply_cross_push(grid: GridNetwork, j: int) -> GridNetwork:
    """
    Move a crossing through an adjacent whirl or curl column, in either direction.
    The crossing keeps its rows; the two cycle weights on those rows change.
    """
    left, right = _columns(grid, j, 2)
    n = grid.n
    if isinstance(left, Whirl) and isinstance(right, Cross):
        x, k, a = left.x, right.k, right.a
        lo, hi = (k - 1) % n, k % n
        s = x[hi] + a
        cross = Cross(k, safe_div(x[lo] * a, s))
        whirl = Whirl(_replace(x, {hi: s, lo: safe_div(x[lo] * x[hi], s)}))
        return _splice(grid, j, 2, [cross, whirl])
    if isinstance(left, Cross) and isinstance(right, Whirl):
        x, k, a = right.x, left.k, left.a
        lo, hi = (k - 1) % n, k % n
        s = x[lo] + a
        whirl = Whirl(_replace(x, {lo: s, hi: safe_div(x[hi] * x[lo], s)}))
        cross = Cross(k, safe_div(a * x[hi], whirl.x[lo]))
        return _splice(grid, j, 2, [whirl, cross])
    if isinstance(left, Curl) and isinstance(right, Cross):
        y, k, a = left.x, right.k, right.a
        lo, hi = (k - 1) % n, k % n
        s = y[lo] + a
        cross = Cross(k, safe_div(a * y[hi], s))
        curl = Curl(_replace(y, {lo: s, hi: safe_div(y[lo] * y[hi], s)}))
        return _splice(grid, j, 2, [cross, curl])
    if isinstance(left, Cross) and isinstance(right, Curl):
        y, k, a = right.x, left.k, left.a
        lo, hi = (k - 1) % n, k % n
        s = y[hi] + a
        curl = Curl(_replace(y, {lo: safe_div(y[lo] * y[hi], s), hi: s}))
        cross = Cross(k, safe_div(a * y[lo], s))
        return _splice(grid, j, 2, [curl, cross])
    raise PatternMismatch(f"no crossing push at column {j}")


# ---------------------------------------------------------------- cycle moves

def apply_whurl(grid: GridNetwork, j: int) -> GridNetwork:
    """Swap two adjacent whirl columns, or two adjacent curl columns"""
    left, right = _columns(grid, j, 2)
    field = grid.field
    if isinstance(left, Whirl) and isinstance(right, Whirl):
        x, y = whurl_weights(left.x, right.x, field)
        return _splice(grid, j, 2, [Whirl(x), Whirl(y)])
    if isinstance(left, Curl) and isinstance(right, Curl):
        x, y = whurl_weights(left.x, right.x, field, rightward=[False] * grid.n)
        return _splice(grid, j, 2, [Curl(x), Curl(y)])
    raise PatternMismatch(f"whurl at column {j} needs two parallel cycles of one type")


def apply_whirl_curl(grid: GridNetwork, j: int) -> GridNetwork:
    left, right = _columns(grid, j, 2)
    if isinstance(left, Whirl) and isinstance(right, Curl):
        curl, whirl = whirl_curl_weights(left.x, right.x)
        return _splice(grid, j, 2, [Curl(curl), Whirl(whirl)])
    if isinstance(left, Curl) and isinstance(right, Whirl):
        whirl, curl = curl_whirl_weights(left.x, right.x)
        return _splice(grid, j, 2, [Whirl(whirl), Curl(curl)])
    raise PatternMismatch(f"whirl-curl at column {j} needs a whirl next to a curl")


# ---------------------------------------------------------------- ripples

@dataclass(frozen=True)
class RippleResult:
    grid: GridNetwork
    trace: Tuple
    closed: bool


def canonical_ripple(grid: GridNetwork, j: int):
    """The unique crossing weight that comes out of a full push unchanged"""
    left, right = _columns(grid, j, 2)
    field = grid.field
    n = grid.n
    if isinstance(left, Whirl) and isinstance(right, Whirl):
        t = [right.x[i - 1] for i in range(n)]
        numerator = _prod(field, right.x) - _prod(field, left.x)
        return safe_div(numerator, kappa(left.x, t, 0, field))
    if isinstance(left, Curl) and isinstance(right, Curl):
        t = [left.x[i - 1] for i in range(n)]
        numerator = _prod(field, right.x) - _prod(field, left.x)
        return safe_div(numerator, kappa(right.x, t, 0, field))
    if isinstance(left, Whirl) and isinstance(right, Curl):
        return left.x[n - 1] + right.x[n - 1]
    if isinstance(left, Curl) and isinstance(right, Whirl):
        return left.x[0] + right.x[0]
    raise PatternMismatch(f"no ripple between columns {j} and {j + 1}")


def _prod(field: Field, values):
    result = field.one()
    for value in values:
        result = result * value
    return result


def ripple_push(grid: GridNetwork, j: int, p) -> RippleResult:
    """
    Create a ripple (p, -p) between columns j and j+1 and push the p crossing
    once around the cylinder with Yang-Baxter moves.
    :return: the rewritten columns, the crossing weight before each row and
        after the last one, and whether the weight came back to p
    """
    left, right = _columns(grid, j, 2)
    n = grid.n
    trace = [p]
    if isinstance(left, Whirl) and isinstance(right, Whirl):
        x, y = list(left.x), list(right.x)
        for r in range(n):
            q = trace[-1]
            t_new, z_new, q_new = yang_baxter(q, y[r], x[r])
            x[r], y[r] = z_new, t_new
            trace.append(q_new)
        columns = [Whirl(tuple(x)), Whirl(tuple(y))]
    elif isinstance(left, Curl) and isinstance(right, Curl):
        u, w = list(left.x), list(right.x)
        for r in reversed(range(n)):
            q = trace[-1]
            t_new, z_new, q_new = yang_baxter(q, w[r], u[r])
            u[r], w[r] = z_new, t_new
            trace.append(q_new)
        columns = [Curl(tuple(u)), Curl(tuple(w))]
    elif isinstance(left, Whirl) and isinstance(right, Curl):
        x, y = left.x, right.x
        curl, whirl = [], []
        for r in range(n):
            c, s, d = yang_baxter(x[r], trace[-1], y[r])
            curl.append(c)
            whirl.append(d)
            trace.append(s)
        columns = [Curl(tuple(curl)), Whirl(tuple(whirl))]
    elif isinstance(left, Curl) and isinstance(right, Whirl):
        c, d = left.x, right.x
        whirl, curl = [None] * n, [None] * n
        for r in reversed(range(n)):
            y_new, s, x_new = yang_baxter(d[r], trace[-1], c[r])
            whirl[r], curl[r] = x_new, y_new
            trace.append(s)
        columns = [Whirl(tuple(whirl)), Curl(tuple(curl))]
    else:
        raise PatternMismatch(f"no ripple between columns {j} and {j + 1}")
    closed = grid.field.equal(trace[-1], p)
    return RippleResult(_splice(grid, j, 2, columns), tuple(trace), closed)


# ---------------------------------------------------------------- dispatch

_APPLY = {
    MoveKind.YB: apply_yb,
    MoveKind.XM: apply_merge,
    MoveKind.XR: apply_remove_zero,
    MoveKind.WHURL: apply_whurl,
    MoveKind.WHIRL_CURL: apply_whirl_curl,
    MoveKind.PUSH: apply_cross_push,
    MoveKind.COMMUTE: commute_crossings,
}


def apply_move(grid: GridNetwork, site: MoveSite) -> GridNetwork:
    """
    Apply one move. The input grid is never modified, so a failed move leaves
    the caller holding the original.
    """
    j = site.anchor[0]
    if site.kind == MoveKind.SPLIT:
        return split_crossing(grid, j, grid.field.convert(site.params["a"]))
    if site.kind == MoveKind.INSERT_ZERO:
        return insert_zero_crossing(grid, j, int(site.params["k"]))
    try:
        apply = _APPLY[site.kind]
    except KeyError:
        raise PatternMismatch(f"{site.kind} moves are not defined on grids")
    return apply(grid, j)


def applicable_moves(grid: GridNetwork) -> List[MoveSite]:
    n = grid.n
    columns = grid.columns
    sites = []
    for j, column in enumerate(columns):
        if isinstance(column, Cross) and grid.field.is_zero(column.a):
            sites.append(MoveSite(MoveKind.XR, (j,)))
    for j in range(len(columns) - 1):
        left, right = columns[j], columns[j + 1]
        left_cross, right_cross = isinstance(left, Cross), isinstance(right, Cross)
        if left_cross and right_cross:
            if left.k % n == right.k % n:
                sites.append(MoveSite(MoveKind.XM, (j,)))
            elif not _adjacent(grid, left.k, right.k):
                sites.append(MoveSite(MoveKind.COMMUTE, (j,)))
        elif left_cross or right_cross:
            sites.append(MoveSite(MoveKind.PUSH, (j,)))
        elif type(left) is type(right):
            sites.append(MoveSite(MoveKind.WHURL, (j,)))
        else:
            sites.append(MoveSite(MoveKind.WHIRL_CURL, (j,)))
    if n >= 3:
        for j in range(len(columns) - 2):
            triple = columns[j:j + 3]
            if all(isinstance(c, Cross) for c in triple) and triple[0].k % n == triple[2].k % n \
                    and _adjacent(grid, triple[0].k, triple[1].k):
                sites.append(MoveSite(MoveKind.YB, (j,)))
    return sites


def apply_script(grid: GridNetwork, script: Sequence[MoveSite]) -> GridNetwork:
    for step, site in enumerate(script):
        logger.debug(f"step {step}: {site.kind} at {site.anchor}")
        grid = apply_move(grid, site)
    return grid


def random_move_script(grid: GridNetwork, rng: Random, steps: int,
                       kinds: Sequence[str] = MoveKind.WORD_PRESERVING) -> Tuple[GridNetwork, List[MoveSite]]:
    """
    Walk the move graph at random.
    :param kinds: move kinds to draw from; XM and XR are never drawn since they change the column count
    :return: final grid and the script that produced it
    """
    script = []
    for _ in range(steps):
        sites = [s for s in applicable_moves(grid) if s.kind in kinds and s.kind not in (MoveKind.XM, MoveKind.XR)]
        if not sites:
            break
        site = rng.choice(sites)
        grid = apply_move(grid, site)
        script.append(site)
    return grid, script


# ---------------------------------------------------------------- canonical form

def _radius_order_violated(grid: GridNetwork, left, right) -> bool:
    return left.radius(grid.field) < right.radius(grid.field)


def canonical_form(grid: GridNetwork):
    """
    Bring a cylinder grid to canonical form: curls leftmost, whirls rightmost,
    crossings in between, each family sorted by decreasing radius.
    :param grid: reduced cylinder grid with positive rational weights
    :return: (canonical grid, a, b, w)
    """
    if grid.surface != SurfaceKind.CYLINDER:
        raise NotReduced("canonical forms are defined for cylinder grids")
    a, b, w = cell_data(grid)
    moves = 0
    changed = True
    while changed:
        changed = False
        for j in range(len(grid.columns) - 1):
            left, right = grid.columns[j], grid.columns[j + 1]
            if isinstance(right, Curl) and isinstance(left, Cross):
                grid = apply_cross_push(grid, j)
            elif isinstance(left, Whirl) and isinstance(right, Cross):
                grid = apply_cross_push(grid, j)
            elif isinstance(left, Whirl) and isinstance(right, Curl):
                grid = apply_whirl_curl(grid, j)
            elif type(left) is type(right) and isinstance(left, (Whirl, Curl)) \
                    and _radius_order_violated(grid, left, right):
                grid = apply_whurl(grid, j)
            else:
                continue
            changed = True
            moves += 1
    logger.debug(f"canonical form reached after {moves} moves")
    return grid, a, b, w


def monodromy_orbit(grid: GridNetwork) -> List[GridNetwork]:
    """
    Weight assignments on the underlying graph of a canonical grid reachable by
    whurl moves on adjacent parallel cycles.
    """
    seen = {grid.columns: grid}
    queue = deque([grid])
    while queue:
        current = queue.popleft()
        for j in range(len(current.columns) - 1):
            left, right = current.columns[j], current.columns[j + 1]
            if not (type(left) is type(right) and isinstance(left, (Whirl, Curl))):
                continue
            successor = apply_whurl(current, j)
            if successor.columns in seen:
                continue
            seen[successor.columns] = successor
            if len(seen) > config.EXPLOSION_CAP:
                raise ExplosionGuard(f"monodromy orbit exceeds {config.EXPLOSION_CAP} elements")
            queue.append(successor)
    return list(seen.values())


def radii(grid: GridNetwork):
    """Sorted radii of the curls and of the whirls"""
    field = grid.field
    curls = sorted(c.radius(field) for c in grid.columns if isinstance(c, Curl))
    whirls = sorted(c.radius(field) for c in grid.columns if isinstance(c, Whirl))
    return curls, whirls
