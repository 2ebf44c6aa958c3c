"""Four pairwise-crossing wires: the cycle of braid moves that returns to its start.

Starting from the reduced word 1 2 1 3 2 1 on four consecutive rows, the
sequence below uses eight Yang-Baxter moves and six commutations of far
crossings and ends on the starting word. The vertex weights must come back
unchanged.
"""
import logging
from typing import List, Tuple

from errors import PatternMismatch
from moves.grid_moves import MoveKind, apply_yb, commute_crossings
from network.grid import Cross, GridNetwork

logger = logging.getLogger(__name__)

# (move, offset of the move window inside the six crossing columns)
CYCLE: Tuple[Tuple[str, int], ...] = (
    (MoveKind.YB, 0), (MoveKind.YB, 2), (MoveKind.COMMUTE, 4), (MoveKind.COMMUTE, 1),
    (MoveKind.YB, 2), (MoveKind.YB, 0), (MoveKind.COMMUTE, 2), (MoveKind.YB, 3),
    (MoveKind.YB, 1), (MoveKind.COMMUTE, 0), (MoveKind.COMMUTE, 3), (MoveKind.YB, 1),
    (MoveKind.YB, 3), (MoveKind.COMMUTE, 2),
)

START_WORD = (1, 2, 1, 3, 2, 1)


def _relative_word(grid: GridNetwork, start: int) -> List[int]:
    columns = grid.columns[start:start + 6]
    if len(columns) != 6 or not all(isinstance(c, Cross) for c in columns):
        raise PatternMismatch(f"columns {start}..{start + 5} are not six crossings")
    base = columns[0].k - 1
    return [(c.k - base) % grid.n for c in columns]


def frenkel_moore_cycle(grid: GridNetwork, start: int = 0) -> List[GridNetwork]:
    """
    Run the cycle and keep every intermediate grid.
    :param grid: grid whose columns start..start+5 read 1 2 1 3 2 1 above some base row
    :param start: first column of the pattern
    :return: grids after each move, the last one back on the starting word
    """
    if grid.n < 4:
        raise PatternMismatch("four pairwise-crossing wires need at least four rows")
    if tuple(_relative_word(grid, start)) != START_WORD:
        raise PatternMismatch(f"columns from {start} do not read {START_WORD}")
    history = []
    for kind, offset in CYCLE:
        if kind == MoveKind.YB:
            grid = apply_yb(grid, start + offset)
        else:
            grid = commute_crossings(grid, start + offset)
        history.append(grid)
    return history


def frenkel_moore_check(grid: GridNetwork, start: int = 0) -> bool:
    """
    :return: True iff the eight-move cycle gives back identical crossing weights
    :raises ZeroDenominator: when a Yang-Baxter step divides by zero
    """
    final = frenkel_moore_cycle(grid, start)[-1]
    field = grid.field
    before = grid.columns[start:start + 6]
    after = final.columns[start:start + 6]
    same = all(b.k % grid.n == a.k % grid.n and field.equal(b.a, a.a) for b, a in zip(before, after))
    logger.debug("Frenkel-Moore cycle at column %d returns %s", start, same)
    return same
