"""The (min, +) semifield used to tropicalize subtraction-free formulas.

Tropical addition is min and tropical multiplication is +, so any rational
expression built without subtraction can be evaluated here unchanged.
"""
from typing import Optional

from sympy.polys.domains import QQ

from scalars.field_interface import Field


class MinPlus:
    """An element of the min-plus semifield; value None stands for +infinity"""

    __slots__ = ("value",)

    def __init__(self, value=None):
        self.value = None if value is None else QQ.convert(value)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __add__(self, other):
        other = _lift(other)
        if self.value is None:
            return other
        if other.value is None:
            return self
        return MinPlus(min(self.value, other.value))

    __radd__ = __add__

    def __mul__(self, other):
        other = _lift(other)
        if self.value is None or other.value is None:
            return MinPlus(None)
        return MinPlus(self.value + other.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other)
        if other.value is None:
            raise ZeroDivisionError("tropical division by +infinity")
        if self.value is None:
            return self
        return MinPlus(self.value - other.value)

    def __rtruediv__(self, other):
        return _lift(other) / self

    def __pow__(self, k: int):
        if self.value is None:
            if k <= 0:
                raise ZeroDivisionError("tropical power of +infinity")
            return self
        return MinPlus(self.value * k)

    def __sub__(self, other):
        raise TypeError("the min-plus semifield has no subtraction")

    __rsub__ = __sub__

    def __neg__(self):
        raise TypeError("the min-plus semifield has no negation")

    def __bool__(self):
        return self.value is not None

    def __eq__(self, other):
        if isinstance(other, MinPlus):
            return self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash(("MinPlus", self.value))

    def __repr__(self):
        return "MinPlus(inf)" if self.value is None else f"MinPlus({self.value})"

    def to_int(self) -> Optional[int]:
        if self.value is None:
            return None
        return int(self.value)


def _lift(value) -> MinPlus:
    if isinstance(value, MinPlus):
        return value
    return MinPlus(value)


class TropicalField(Field):
    """Min-plus semifield. zero is +infinity, one is the ordinary 0."""

    name = "minplus"

    def zero(self):
        return MinPlus(None)

    def one(self):
        return MinPlus(0)

    def from_rational(self, numerator: int, denominator: int = 1):
        return MinPlus(QQ(numerator, denominator))

    def convert(self, value):
        return _lift(value)

    def is_zero(self, a) -> bool:
        return a.value is None

    def equal(self, a, b) -> bool:
        return a == b

    def to_string(self, a) -> str:
        return "inf" if a.value is None else str(a.value)

    def parse(self, text: str):
        text = text.strip()
        if text == "inf":
            return MinPlus(None)
        if "/" in text:
            num, den = text.split("/", 1)
            return MinPlus(QQ(int(num), int(den)))
        return MinPlus(int(text))
