"""Affine geometric crystals built from basic factors X_M and dual factors X_N.

Coordinates are 0-based: x[r] is the weight on row r. For an M factor
eps_i = x[i+1], phi_i = x[i] and e_i^c scales x[i] by c and x[i+1] by 1/c;
an N factor swaps the roles. Products fold left to right.
"""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from errors import InvalidNetwork, UndefinedEpsPhi, ZeroDenominator
from moves.grid_moves import curl_whirl_weights, whirl_curl_weights, whurl_weights
from scalars.field_interface import Field, safe_div

logger = logging.getLogger(__name__)


class FactorType:
    M = "M"
    N = "N"

    ALL = (M, N)


@dataclass(frozen=True)
class CrystalPoint:
    factors: Tuple[Tuple[str, Tuple], ...]
    field: Field

    def __post_init__(self):
        factors = tuple((kind, tuple(x)) for kind, x in self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise InvalidNetwork("a crystal point needs at least one factor")
        n = len(factors[0][1])
        for kind, x in factors:
            if kind not in FactorType.ALL:
                raise InvalidNetwork(f"unknown factor type {kind!r}")
            if len(x) != n:
                raise InvalidNetwork("all factors need the same number of coordinates")
            if any(self.field.is_zero(value) for value in x):
                raise InvalidNetwork("crystal coordinates must be nonzero")

    @property
    def n(self) -> int:
        return len(self.factors[0][1])

    def kinds(self) -> Tuple[str, ...]:
        return tuple(kind for kind, _ in self.factors)

    def replace_factor(self, index: int, kind: str, x: Sequence) -> "CrystalPoint":
        factors = list(self.factors)
        factors[index] = (kind, tuple(x))
        return CrystalPoint(tuple(factors), self.field)

    def equals(self, other: "CrystalPoint") -> bool:
        if self.kinds() != other.kinds():
            return False
        return all(self.field.equal(a, b) for (_, x), (_, y) in zip(self.factors, other.factors)
                   for a, b in zip(x, y))


def factor_eps_phi(kind: str, x: Sequence, i: int):
    n = len(x)
    if kind == FactorType.M:
        return x[(i + 1) % n], x[i % n]
    return x[i % n], x[(i + 1) % n]


def factor_e(kind: str, x: Sequence, i: int, c) -> Tuple:
    n = len(x)
    values = list(x)
    up, down = (i % n, (i + 1) % n) if kind == FactorType.M else ((i + 1) % n, i % n)
    values[up] = values[up] * c
    values[down] = safe_div(values[down], c)
    return tuple(values)


def combine_eps_phi(left: Tuple, right: Tuple) -> Tuple:
    """(eps, phi) of x (x) x' from those of x and x'"""
    eps, phi = left
    eps_r, phi_r = right
    return safe_div(eps * eps_r, phi_r + eps), safe_div(phi * phi_r, eps + phi_r)


def prefix_eps_phi(point: CrystalPoint, i: int) -> List[Tuple]:
    """(eps_i, phi_i) of the first k+1 factors, for every k"""
    prefixes = []
    current = None
    for kind, x in point.factors:
        single = factor_eps_phi(kind, x, i)
        current = single if current is None else combine_eps_phi(current, single)
        prefixes.append(current)
    return prefixes


def eps(point: CrystalPoint, i: int):
    return _checked(point, i)[0]


def phi(point: CrystalPoint, i: int):
    return _checked(point, i)[1]


def gamma(point: CrystalPoint, i: int):
    eps_i, phi_i = _checked(point, i)
    return safe_div(phi_i, eps_i)


def _checked(point: CrystalPoint, i: int) -> Tuple:
    try:
        return prefix_eps_phi(point, i)[-1]
    except ZeroDenominator as e:
        raise UndefinedEpsPhi(f"eps/phi of index {i} hit a zero denominator") from e


def e_c(point: CrystalPoint, i: int, c) -> CrystalPoint:
    """
    e_i^c on a product: e^c(x (x) x') = (e^{c+} x, e^{c/c+} x') with
    c+ = (c phi(x') + eps(x)) / (phi(x') + eps(x)), applied from the last factor inwards.
    :param point: crystal point
    :param i: crystal index mod n
    :param c: nonzero field element
    :return: the new point
    """
    c = point.field.convert(c)
    prefixes = prefix_eps_phi(point, i)
    factors = list(point.factors)
    for k in range(len(factors) - 1, 0, -1):
        kind, x = factors[k]
        eps_left, _ = prefixes[k - 1]
        _, phi_right = factor_eps_phi(kind, x, i)
        c_plus = safe_div(c * phi_right + eps_left, phi_right + eps_left)
        factors[k] = (kind, factor_e(kind, x, i, safe_div(c, c_plus)))
        c = c_plus
    kind, x = factors[0]
    factors[0] = (kind, factor_e(kind, x, i, c))
    return CrystalPoint(tuple(factors), point.field)


def weyl_s(point: CrystalPoint, i: int) -> CrystalPoint:
    """s_i = e_i^{1/gamma_i}"""
    return e_c(point, i, safe_div(point.field.one(), gamma(point, i)))


def r_matrix(point: CrystalPoint, j: int) -> CrystalPoint:
    """
    Birational R-matrix on factors j and j+1: the whurl for equal types and the
    whirl-curl relation for mixed types, which also swaps the type tags.
    """
    if not 0 <= j < len(point.factors) - 1:
        raise InvalidNetwork(f"no factors {j}, {j + 1} in a {len(point.factors)}-factor point")
    (kind_a, x), (kind_b, y) = point.factors[j], point.factors[j + 1]
    field = point.field
    if kind_a == kind_b:
        rightward = [kind_a == FactorType.M] * point.n
        new_a, new_b = whurl_weights(x, y, field, rightward)
        new_kinds = (kind_a, kind_b)
    elif kind_a == FactorType.M:
        new_a, new_b = whirl_curl_weights(x, y)
        new_kinds = (FactorType.N, FactorType.M)
    else:
        new_a, new_b = curl_whirl_weights(x, y)
        new_kinds = (FactorType.M, FactorType.N)
    factors = list(point.factors)
    factors[j] = (new_kinds[0], tuple(new_a))
    factors[j + 1] = (new_kinds[1], tuple(new_b))
    return CrystalPoint(tuple(factors), field)
