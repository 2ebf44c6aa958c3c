import pytest
from sympy.polys.domains import QQ

from errors import ConstantTermZero, SingularSystem, ZeroDenominator
from scalars.field_domain import RationalField, SymbolicField, parse_rational, qq
from scalars.field_interface import safe_div
from scalars.field_tropical import MinPlus, TropicalField
from scalars.identity import identity_holds
from scalars.linalg import determinant, domain_determinant, solve_sparse
from scalars.mpoly import is_homogeneous_of_degree, mpoly_eval, mpoly_from_terms, mpoly_ring, mpoly_terms, ring_gens
from scalars.poly1 import Poly1, RatFun1, laurent_coefficients, series_coefficients, t_field


def test_parse_rational():
    assert parse_rational("3/6") == QQ(1, 2)
    assert parse_rational(" -4 ") == QQ(-4)
    assert RationalField().to_string(QQ(-2, 4)) == "-1/2"


def test_zero_denominators_are_reported():
    with pytest.raises(ZeroDenominator):
        qq(1, 0)
    with pytest.raises(ZeroDenominator):
        safe_div(QQ(1), QQ(0))


def test_symbolic_field_round_trip():
    field = SymbolicField(["x", "y"])
    x, y = field.gen("x"), field.gen("y")
    value = (x + y) / (x * y)
    assert field.equal(field.parse(field.to_string(value)), value)
    assert field.equal(field.convert("1/2"), field.from_rational(1, 2))


def test_geometric_series():
    field = RationalField()
    f = RatFun1(Poly1(field, [QQ(1)]), Poly1(field, [QQ(1), QQ(-2)]))
    assert series_coefficients(f, 4) == [QQ(1), QQ(2), QQ(4), QQ(8), QQ(16)]


def test_series_needs_nonzero_constant_term():
    field = RationalField()
    f = RatFun1(Poly1(field, [QQ(1)]), Poly1(field, [QQ(0), QQ(1)]))
    with pytest.raises(ConstantTermZero):
        series_coefficients(f, 2)
    # 1/t expands as a Laurent series
    assert laurent_coefficients(f, -1, 1) == [QQ(1), QQ(0), QQ(0)]


def test_ratfun_normal_form():
    field = RationalField()
    t = Poly1.monomial(field, 1)
    one = Poly1.constant(field, QQ(1))
    f = RatFun1((one - t) * t, (one - t) * Poly1.constant(field, QQ(2)))
    assert f == RatFun1(t.scale(QQ(1, 2)))
    assert f.is_polynomial()


def test_ratfun_reports_a_monic_denominator():
    field = RationalField()
    f = RatFun1(Poly1(field, [QQ(2)]), Poly1(field, [QQ(2), QQ(4)]))
    assert f.den.coeffs == (QQ(1, 2), QQ(1))
    assert f.num.coeffs == (QQ(1, 2),)
    assert not f.is_polynomial()
    with pytest.raises(ZeroDenominator):
        RatFun1(Poly1(field, [QQ(1)]), Poly1(field))


def test_weight_named_t_is_not_the_homology_variable():
    field = SymbolicField(["t", "s"])
    t, s = field.gen("t"), field.gen("s")
    f = RatFun1.t_power(field, -1, t) + RatFun1.constant(field, s)
    assert t_field(field).domain == field.sympy_domain()
    first, second = laurent_coefficients(f, -1, 0)
    assert field.equal(first, t)
    assert field.equal(second, s)


def test_determinant():
    field = RationalField()
    matrix = [[QQ(2), QQ(1)], [QQ(1), QQ(3)]]
    assert determinant(matrix, field) == QQ(5)
    assert determinant([[QQ(1), QQ(2)], [QQ(2), QQ(4)]], field) == QQ(0)
    assert determinant([], field) == QQ(1)


def test_determinant_of_symbolic_entries():
    field = SymbolicField(["x", "y"])
    x, y = field.gen("x"), field.gen("y")
    assert field.equal(determinant([[x, y], [1 / y, x]], field), x ** 2 - 1)


def test_determinant_of_polynomial_entries():
    ring = mpoly_ring(["a", "b"])
    gens = ring_gens(ring)
    a, b = gens["a"], gens["b"]
    assert domain_determinant([[a, b, 1], [1, a, b], [0, 1, a]]) == a ** 3 - 2 * a * b + 1


def test_solve_sparse():
    rows = [{0: QQ(2), 1: QQ(1)}, {0: QQ(1), 1: QQ(3)}]
    assert solve_sparse(rows, [QQ(3), QQ(4)], QQ) == [QQ(1), QQ(1)]
    with pytest.raises(SingularSystem):
        solve_sparse([{0: QQ(1), 1: QQ(2)}, {0: QQ(2), 1: QQ(4)}], [QQ(1), QQ(0)], QQ)


def test_mpoly_eval_and_terms():
    ring = mpoly_ring(["a", "b"])
    gens = ring_gens(ring)
    p = gens["a"] ** 2 * gens["b"] + ring(QQ(1, 2)) * gens["b"] ** 3
    assert mpoly_eval(p, {"a": QQ(2), "b": QQ(1)}) == QQ(9, 2)
    assert is_homogeneous_of_degree(p, 3)
    assert mpoly_from_terms(ring, mpoly_terms(p)) == p


def test_tropical_semifield():
    field = TropicalField()
    a, b = MinPlus(3), MinPlus(5)
    assert a + b == MinPlus(3)
    assert a * b == MinPlus(8)
    assert b / a == MinPlus(2)
    assert field.is_zero(field.zero())
    assert field.zero() + a == a
    with pytest.raises(TypeError):
        a - b


def test_identity_holds(rng):
    def lhs(point):
        return (point["x"] + point["y"]) ** 2

    def rhs(point):
        return point["x"] ** 2 + 2 * point["x"] * point["y"] + point["y"] ** 2

    assert identity_holds(lhs, rhs, ["x", "y"], rng)
    assert not identity_holds(lhs, lambda point: point["x"] ** 2 + point["y"] ** 2, ["x", "y"], rng)
