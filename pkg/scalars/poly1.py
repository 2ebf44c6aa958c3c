"""Univariate polynomials and rational functions in the homology variable t,
backed by sympy's polynomial ring and fraction field over the weight field's
domain."""
from functools import lru_cache
from typing import List, Sequence, Union

from sympy import Dummy
from sympy.polys.fields import field as frac_field
from sympy.polys.ring_series import rs_mul, rs_series_inversion

from errors import ConstantTermZero, ZeroDenominator
from scalars.field_interface import Field

# a Dummy never clashes with a weight variable named t
T = Dummy("t")


@lru_cache(maxsize=None)
def t_field(field: Field):
    """sympy fraction field K(t) over the domain of field"""
    return frac_field((T,), field.sympy_domain())[0]


def t_ring(field: Field):
    """sympy polynomial ring K[t] under t_field(field)"""
    return t_field(field).ring


class Poly1:
    """Polynomial in t, a sympy PolyElement in t_ring(field)."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, coeffs: Union[Sequence, object] = ()):
        self.field = field
        ring = t_ring(field)
        if ring.is_element(coeffs):
            self.value = coeffs
        else:
            domain = ring.domain
            self.value = ring({(k,): domain.convert(c) for k, c in enumerate(coeffs) if c})

    @classmethod
    def constant(cls, field: Field, c) -> "Poly1":
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: Field, k: int, c=None) -> "Poly1":
        c = field.one() if c is None else c
        return cls(field, [field.zero()] * k + [c])

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial"""
        return self.value.degree() if self.value else -1

    @property
    def coeffs(self) -> tuple:
        """Dense coefficients, index = power of t"""
        zero = self.value.ring.domain.zero
        return tuple(self.value.get((k,), zero) for k in range(self.degree + 1))

    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self):
        return bool(self.value)

    def coefficient(self, k: int):
        return self.value.get((k,), self.value.ring.domain.zero)

    def _lift(self, other):
        if isinstance(other, Poly1):
            return other.value
        return self.value.ring.domain.convert(self.field.convert(other))

    def __add__(self, other):
        return Poly1(self.field, self.value + self._lift(other))

    __radd__ = __add__

    def __neg__(self):
        return Poly1(self.field, -self.value)

    def __sub__(self, other):
        return Poly1(self.field, self.value - self._lift(other))

    def __rsub__(self, other):
        return Poly1(self.field, self._lift(other) - self.value)

    def __mul__(self, other):
        return Poly1(self.field, self.value * self._lift(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return Poly1(self.field, self.value ** k)

    def __eq__(self, other):
        return not (self.value - self._lift(other))

    def __hash__(self):
        return hash(self.degree)

    def scale(self, c) -> "Poly1":
        return Poly1(self.field, self.value.mul_ground(self.value.ring.domain.convert(c)))

    def __repr__(self):
        return str(self.value.as_expr()) if self.value else "0"


class RatFun1:
    """Rational function in t, a sympy FracElement in t_field(field).

    sympy keeps numerator and denominator coprime; num and den report them
    scaled so that the denominator is monic.
    """

    __slots__ = ("field", "value")

    def __init__(self, num: Union[Poly1, object], den: Poly1 = None, field: Field = None):
        if isinstance(num, Poly1):
            self.field = num.field
            fraction = t_field(self.field)
            if den is None:
                self.value = fraction.new(num.value)
            else:
                if den.is_zero():
                    raise ZeroDenominator("rational function with zero denominator")
                self.value = fraction.new(num.value, den.value)
        else:
            self.field = field
            self.value = num

    @classmethod
    def constant(cls, field: Field, c) -> "RatFun1":
        fraction = t_field(field)
        return cls(fraction.ground_new(fraction.domain.convert(field.convert(c))), field=field)

    @classmethod
    def zero(cls, field: Field) -> "RatFun1":
        return cls(t_field(field).zero, field=field)

    @classmethod
    def one(cls, field: Field) -> "RatFun1":
        return cls(t_field(field).one, field=field)

    @classmethod
    def t_power(cls, field: Field, k: int, c=None) -> "RatFun1":
        """c * t^k for any integer k"""
        c = field.one() if c is None else c
        fraction = t_field(field)
        scalar = fraction.ground_new(fraction.domain.convert(field.convert(c)))
        return cls(fraction.gens[0] ** k * scalar, field=field)

    @classmethod
    def from_poly(cls, poly: Poly1) -> "RatFun1":
        return cls(poly)

    @property
    def num(self) -> Poly1:
        return Poly1(self.field, self.value.numer.quo_ground(self.value.denom.LC))

    @property
    def den(self) -> Poly1:
        return Poly1(self.field, self.value.denom.monic())

    def _lift(self, other):
        if isinstance(other, RatFun1):
            return other.value
        if isinstance(other, Poly1):
            return t_field(self.field).new(other.value)
        return RatFun1.constant(self.field, other).value

    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self):
        return bool(self.value)

    def is_polynomial(self) -> bool:
        return self.value.denom.degree() == 0

    def __add__(self, other):
        return RatFun1(self.value + self._lift(other), field=self.field)

    __radd__ = __add__

    def __neg__(self):
        return RatFun1(-self.value, field=self.field)

    def __sub__(self, other):
        return RatFun1(self.value - self._lift(other), field=self.field)

    def __rsub__(self, other):
        return RatFun1(self._lift(other) - self.value, field=self.field)

    def __mul__(self, other):
        return RatFun1(self.value * self._lift(other), field=self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return RatFun1(self.value / self._lift(other), field=self.field)

    def __rtruediv__(self, other):
        return RatFun1(self._lift(other) / self.value, field=self.field)

    def __pow__(self, k: int):
        return RatFun1(self.value ** k, field=self.field)

    def __eq__(self, other):
        return not (self.value - self._lift(other))

    def __hash__(self):
        return hash((self.value.numer.degree(), self.value.denom.degree()))

    def __repr__(self):
        return str(self.value.as_expr())

    def coefficient(self, k: int):
        """Coefficient of t^k of a polynomial rational function"""
        if not self.is_polynomial():
            raise ValueError("coefficient() needs a polynomial; use series_coefficients")
        return self.num.coefficient(k)


def series_coefficients(f: RatFun1, k_max: int) -> List:
    """Coefficients of t^0..t^k_max of the power series expansion of f at t=0"""
    ring = t_ring(f.field)
    numer, denom = f.value.numer, f.value.denom
    if not denom.get((0,)):
        raise ConstantTermZero(f"denominator of {f} vanishes at t=0")
    t = ring.gens[0]
    series = rs_mul(numer, rs_series_inversion(denom, t, k_max + 1), t, k_max + 1)
    return [series.get((k,), ring.domain.zero) for k in range(k_max + 1)]


def laurent_coefficients(f: RatFun1, k_min: int, k_max: int) -> List:
    """Coefficients of t^k_min..t^k_max of the Laurent expansion of f at t=0.

    Powers of t dividing the denominator are pulled out first, the remaining
    quotient must have a nonvanishing constant term.
    """
    zero = t_ring(f.field).domain.zero
    denom = f.value.denom
    v = min(k for (k,) in denom.keys())
    if k_max + v < 0:
        return [zero] * (k_max - k_min + 1)
    t = t_field(f.field).gens[0]
    series = series_coefficients(f * RatFun1(t ** v, field=f.field), k_max + v)
    return [series[k + v] if k + v >= 0 else zero for k in range(k_min, k_max + 1)]
