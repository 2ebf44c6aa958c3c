"""Fields backed by sympy's polys domains: exact rationals and rational
functions in named weight variables."""
import logging
from typing import Dict, Sequence

from sympy import sympify
from sympy.polys.domains import QQ
from sympy.polys.fields import field

from errors import ZeroDenominator
from scalars.field_interface import Field

logger = logging.getLogger(__name__)


def qq(numerator: int, denominator: int = 1):
    """Shorthand for an exact rational"""
    if denominator == 0:
        raise ZeroDenominator(f"{numerator}/0")
    return QQ(numerator, denominator)


def parse_rational(text: str):
    """Parse "p/q" or "p" into an exact rational"""
    text = str(text).strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return qq(int(num), int(den))
    return qq(int(text))


def rational_to_string(a) -> str:
    return f"{int(a.numerator)}/{int(a.denominator)}"


class RationalField(Field):
    """Exact rationals, elements are sympy QQ values"""

    name = "QQ"

    def zero(self):
        return QQ(0)

    def one(self):
        return QQ(1)

    def from_rational(self, numerator: int, denominator: int = 1):
        return qq(numerator, denominator)

    def sympy_domain(self):
        return QQ

    def convert(self, value):
        if isinstance(value, str):
            return parse_rational(value)
        if isinstance(value, int) and not isinstance(value, bool):
            return QQ(value)
        return QQ.convert(value)

    def to_string(self, a) -> str:
        return rational_to_string(QQ.convert(a))

    def parse(self, text: str):
        return parse_rational(text)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.name)


class SymbolicField(Field):
    """Rational functions over QQ in a fixed set of named variables.

    Elements are sympy FracElement values, always kept in lowest terms, so
    structural equality is exact equality.
    """

    name = "QQ(vars)"

    def __init__(self, names: Sequence[str]):
        if not names:
            raise ValueError("a symbolic field needs at least one variable")
        self.names = tuple(names)
        result = field(",".join(self.names), QQ)
        self.domain = result[0]
        self.gens: Dict[str, object] = dict(zip(self.names, result[1:]))
        self._sympy_domain = self.domain.to_domain()

    def gen(self, name: str):
        return self.gens[name]

    def sympy_domain(self):
        return self._sympy_domain

    def zero(self):
        return self.domain.zero

    def one(self):
        return self.domain.one

    def from_rational(self, numerator: int, denominator: int = 1):
        return self.domain(qq(numerator, denominator))

    def convert(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, int) and not isinstance(value, bool):
            return self.domain(value)
        if getattr(value, "field", None) is self.domain:
            return value
        return self.domain(QQ.convert(value))

    def to_string(self, a) -> str:
        return str(a.as_expr())

    def parse(self, text: str):
        return self.domain.from_expr(sympify(text))

    def __eq__(self, other):
        return isinstance(other, SymbolicField) and other.names == self.names

    def __hash__(self):
        return hash((self.name, self.names))

    def __repr__(self):
        return f"SymbolicField({', '.join(self.names)})"
