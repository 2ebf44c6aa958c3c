"""Combinatorial shadow of the geometric crystals.

An M factor is a one-row tableau and x[j] counts the entries j+1. An N factor
is a tableau with n-1 rows and x[j] counts the columns missing j+1. The
crystal operators follow the tensor product rule, while the R-matrix is the
geometric one evaluated in the min-plus semifield.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from crystal.geometric import CrystalPoint, FactorType, e_c, r_matrix
from errors import InvalidNetwork, PatternMismatch
from scalars.field_tropical import MinPlus, TropicalField

logger = logging.getLogger(__name__)

TROPICAL = TropicalField()


@dataclass(frozen=True)
class TropicalPoint:
    factors: Tuple[Tuple[str, Tuple[int, ...]], ...]

    def __post_init__(self):
        factors = tuple((kind, tuple(int(v) for v in x)) for kind, x in self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise InvalidNetwork("a tropical point needs at least one factor")
        for kind, x in factors:
            if kind not in FactorType.ALL:
                raise InvalidNetwork(f"unknown factor type {kind!r}")
            if len(x) != len(factors[0][1]) or any(v < 0 for v in x):
                raise InvalidNetwork(f"bad tableau counts {x}")

    @property
    def n(self) -> int:
        return len(self.factors[0][1])

    def to_geometric(self) -> CrystalPoint:
        return CrystalPoint(tuple((kind, tuple(MinPlus(v) for v in x)) for kind, x in self.factors),
                            TROPICAL)

    @classmethod
    def from_geometric(cls, point: CrystalPoint) -> "TropicalPoint":
        return cls(tuple((kind, tuple(v.to_int() for v in x)) for kind, x in point.factors))


def _factor_eps_phi(kind: str, x: Sequence[int], i: int) -> Tuple[int, int]:
    n = len(x)
    if kind == FactorType.M:
        return x[(i + 1) % n], x[i % n]
    return x[i % n], x[(i + 1) % n]


def trop_eps_phi(b: TropicalPoint, i: int) -> Tuple[int, int]:
    """eps(b (x) b') = eps(b') + max(0, eps(b) - phi(b')), phi(b (x) b') = phi(b) + max(0, phi(b') - eps(b))"""
    current = None
    for kind, x in b.factors:
        single = _factor_eps_phi(kind, x, i)
        if current is None:
            current = single
            continue
        eps_left, phi_left = current
        eps_right, phi_right = single
        current = (eps_right + max(0, eps_left - phi_right), phi_left + max(0, phi_right - eps_left))
    return current


def _factor_trop_e(kind: str, x: Sequence[int], i: int) -> Tuple[int, ...]:
    n = len(x)
    values = list(x)
    up, down = (i % n, (i + 1) % n) if kind == FactorType.M else ((i + 1) % n, i % n)
    values[up] += 1
    values[down] -= 1
    return tuple(values)


def trop_e(b: TropicalPoint, i: int) -> Optional[TropicalPoint]:
    """
    Kashiwara operator e_i on a tensor product of single-row and (n-1)-row tableaux.
    :return: the new point, or None when eps_i(b) = 0
    """
    if trop_eps_phi(b, i)[0] == 0:
        return None
    factors = list(b.factors)
    k = len(factors) - 1
    # walk inwards: act on the last factor unless phi(last) < eps(prefix)
    while k > 0:
        prefix = TropicalPoint(tuple(factors[:k]))
        eps_prefix, _ = trop_eps_phi(prefix, i)
        _, phi_last = _factor_eps_phi(factors[k][0], factors[k][1], i)
        if phi_last < eps_prefix:
            k -= 1
            continue
        break
    kind, x = factors[k]
    factors[k] = (kind, _factor_trop_e(kind, x, i))
    return TropicalPoint(tuple(factors))


def trop_e_geometric(b: TropicalPoint, i: int) -> TropicalPoint:
    """Geometric e_i^c in min-plus arithmetic at c = 1"""
    return TropicalPoint.from_geometric(e_c(b.to_geometric(), i, MinPlus(1)))


def trop_r(b: TropicalPoint, j: int) -> TropicalPoint:
    """R-matrix on factors j, j+1 as the min-plus evaluation of the geometric one"""
    return TropicalPoint.from_geometric(r_matrix(b.to_geometric(), j))


# ---------------------------------------------------------------- tableaux

def row_insert(rows: List[List[int]], value: int) -> List[List[int]]:
    """Schensted row insertion"""
    rows = [list(row) for row in rows]
    for row in rows:
        position = next((p for p, entry in enumerate(row) if entry > value), None)
        if position is None:
            row.append(value)
            return rows
        row[position], value = value, row[position]
    rows.append([value])
    return rows


def rectify(word: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    rows: List[List[int]] = []
    for value in word:
        rows = row_insert(rows, value)
    return tuple(tuple(row) for row in rows)


def row_counts(row: Sequence[int], n: int) -> Tuple[int, ...]:
    counts = np.zeros(n, dtype=int)
    for entry in row:
        if not 1 <= entry <= n:
            raise PatternMismatch(f"entry {entry} outside 1..{n}")
        counts[entry - 1] += 1
    return tuple(int(v) for v in counts)


def counts_row(counts: Sequence[int]) -> Tuple[int, ...]:
    return tuple(int(j) + 1 for j in np.repeat(np.arange(len(counts)), counts))


def jdt_r_oracle(t1: Sequence[int], t2: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    Combinatorial R on one-row tableaux: t1 sits above and to the right of t2,
    and the answer is the unique pair with swapped lengths rectifying to the same tableau.
    """
    t1, t2 = tuple(t1), tuple(t2)
    if list(t1) != sorted(t1) or list(t2) != sorted(t2):
        raise PatternMismatch("rows must be weakly increasing")
    target = rectify(t2 + t1)
    content = sorted(t1 + t2)
    seen = set()
    for picked in combinations(range(len(content)), len(t2)):
        top = tuple(content[p] for p in picked)
        if top in seen:
            continue
        seen.add(top)
        rest = list(content)
        for p in reversed(picked):
            del rest[p]
        bottom = tuple(rest)
        if rectify(bottom + top) == target:
            return top, bottom
    raise PatternMismatch(f"no swapped pair for {t1} (x) {t2}")
