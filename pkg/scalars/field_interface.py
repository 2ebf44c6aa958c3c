from abc import ABC, abstractmethod
from random import Random
from typing import Any

from errors import ZeroDenominator


def safe_div(a, b):
    """Divide two field elements, reporting a zero divisor as ZeroDenominator"""
    try:
        return a / b
    except ZeroDivisionError as e:
        raise ZeroDenominator(f"division of {a} by zero") from e


class Field(ABC):
    """Abstract interface every weight field implements.

    Elements support the Python operators +, -, * and / directly; the field
    object supplies constants, conversions and zero tests.
    """

    name = "field"

    @abstractmethod
    def zero(self) -> Any:
        """Returns:
            The additive identity
        """
        pass

    @abstractmethod
    def one(self) -> Any:
        """Returns:
            The multiplicative identity
        """
        pass

    @abstractmethod
    def from_rational(self, numerator: int, denominator: int = 1) -> Any:
        """Embed an exact rational p/q.

        Returns:
            The field element p/q
        """
        pass

    @abstractmethod
    def to_string(self, a) -> str:
        """Returns:
            A serialization that parse() reads back
        """
        pass

    @abstractmethod
    def parse(self, text: str) -> Any:
        """Returns:
            The element serialized as text
        """
        pass

    def sympy_domain(self):
        """The sympy polys domain holding the elements"""
        raise NotImplementedError(f"{self.name} has no sympy domain")

    def from_int(self, n: int):
        return self.from_rational(n, 1)

    def convert(self, value):
        """Coerce ints, "p/q" strings and native elements into the field"""
        if isinstance(value, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, str):
            return self.parse(value)
        return value

    def is_zero(self, a) -> bool:
        return not a

    def equal(self, a, b) -> bool:
        return self.is_zero(a - b)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def div(self, a, b):
        return safe_div(a, b)

    def inv(self, a):
        return safe_div(self.one(), a)

    def power(self, a, k: int):
        if k >= 0:
            return a ** k
        return self.inv(a) ** (-k)

    def random_element(self, rng: Random, bound: int = 10 ** 6, positive: bool = True):
        """A random rational, nonzero, drawn with numerator and denominator up to bound"""
        numerator = rng.randint(1, bound)
        if not positive and rng.random() < 0.5:
            numerator = -numerator
        return self.from_rational(numerator, rng.randint(1, bound))

    def __repr__(self):
        return f"{self.__class__.__name__}()"
