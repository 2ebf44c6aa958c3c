"""Loop group elements: n x n matrices over rational functions in t.

A LoopElement g encodes the infinite periodic matrix y with
y[i + a*n, j + b*n] = coefficient of t^(b - a) in g[i][j].
"""
import logging
from typing import List, Sequence

from errors import InvalidNetwork
from scalars.field_interface import Field
from scalars.poly1 import Poly1, RatFun1, laurent_coefficients

logger = logging.getLogger(__name__)


class LoopElement:
    def __init__(self, n: int, entries: Sequence[Sequence[RatFun1]], field: Field):
        self.n = n
        self.field = field
        self.entries = tuple(tuple(row) for row in entries)

    @classmethod
    def identity(cls, n: int, field: Field) -> "LoopElement":
        return cls(n, [[RatFun1.one(field) if i == j else RatFun1.zero(field) for j in range(n)]
                       for i in range(n)], field)

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def __mul__(self, other: "LoopElement") -> "LoopElement":
        n = self.n
        zero = RatFun1.zero(self.field)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                total = zero
                for k in range(n):
                    if self.entries[i][k] and other.entries[k][j]:
                        total = total + self.entries[i][k] * other.entries[k][j]
                row.append(total)
            rows.append(row)
        return LoopElement(n, rows, self.field)

    def __eq__(self, other):
        if not isinstance(other, LoopElement) or other.n != self.n:
            return False
        return all(a == b for row_a, row_b in zip(self.entries, other.entries)
                   for a, b in zip(row_a, row_b))

    def __repr__(self):
        return "LoopElement(" + "; ".join(", ".join(map(repr, row)) for row in self.entries) + ")"

    def periodic_entry(self, i: int, j: int):
        """Entry y[i, j] of the infinite periodic matrix"""
        a, i0 = divmod(i, self.n)
        b, j0 = divmod(j, self.n)
        power = b - a
        return laurent_coefficients(self.entries[i0][j0], power, power)[0]

    def conjugate_shift(self, k: int) -> "LoopElement":
        """Shift the periodic matrix along the diagonal: y'[i, j] = y[i - k, j - k]"""
        n = self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                a, i0 = divmod(i - k, n)
                b, j0 = divmod(j - k, n)
                row.append(self.entries[i0][j0] * RatFun1.t_power(self.field, a - b))
            rows.append(row)
        return LoopElement(n, rows, self.field)

    def is_unipotent(self, depth: int = 2) -> bool:
        """Diagonal entries 1 and nothing below the diagonal, checked on a finite band"""
        one, zero = self.field.one(), self.field.zero()
        for i in range(self.n):
            if not self.field.equal(self.periodic_entry(i, i), one):
                return False
            for j in range(i - depth * self.n, i):
                if not self.field.equal(self.periodic_entry(i, j), zero):
                    return False
        return True

    def window(self, row0: int, col0: int, size: int) -> List[List]:
        return [[self.periodic_entry(row0 + r, col0 + c) for c in range(size)] for r in range(size)]


def whirl_matrix(x: Sequence, field: Field) -> LoopElement:
    """M(x): 1 on the diagonal, x[i] at (i, i+1), x[n-1] t in the wraparound corner"""
    n = len(x)
    rows = [[RatFun1.zero(field) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        rows[i][i] = RatFun1.one(field)
    for i in range(n):
        if i + 1 < n:
            rows[i][i + 1] = rows[i][i + 1] + RatFun1.constant(field, x[i])
        else:
            rows[i][0] = rows[i][0] + RatFun1.t_power(field, 1, x[i])
    return LoopElement(n, rows, field)


def curl_matrix(x: Sequence, field: Field) -> LoopElement:
    """N(x): y[i, j] = x[i] x[i+1] ... x[j-1] for j >= i, indices mod n"""
    n = len(x)
    radius = field.one()
    for value in x:
        radius = radius * value
    geometric = Poly1(field, [field.one(), -radius])
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            span = (j - i) % n
            product = field.one()
            for s in range(span):
                product = product * x[(i + s) % n]
            power = 0 if j >= i else 1
            numerator = Poly1.monomial(field, power, product)
            row.append(RatFun1(numerator, geometric))
        rows.append(row)
    return LoopElement(n, rows, field)


def chevalley(n: int, k: int, a, field: Field) -> LoopElement:
    """u_k(a): identity plus a at periodic position (k-1, k)"""
    if n < 2:
        raise InvalidNetwork("Chevalley generators need n >= 2")
    rows = [[RatFun1.one(field) if i == j else RatFun1.zero(field) for j in range(n)]
            for i in range(n)]
    upper, lower = (k - 1) % n, k % n
    power = 1 if k % n == 0 else 0
    rows[upper][lower] = rows[upper][lower] + RatFun1.t_power(field, power, a)
    return LoopElement(n, rows, field)


def product(factors: Sequence[LoopElement], n: int, field: Field) -> LoopElement:
    result = LoopElement.identity(n, field)
    for factor in factors:
        result = result * factor
    return result
