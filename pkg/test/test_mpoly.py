from cylnet.algebra import (MPoly, TPoly, parse_expr, parse_tpoly)
from cylnet.common import (DivByZero, NotDivisible, ParseError)
from fractions import Fraction
import pytest


def test_arithmetic():
    """
    Products, sums and the integer substitution oracle
    """
    x, y = MPoly.var("x"), MPoly.var("y")
    assert (x + y) * (x - y) == x ** 2 - y ** 2
    assert parse_expr("(x + y)*(x - y)") == parse_expr("x^2 - y^2")
    assert x * 1 == x and x - x == 0

    p = parse_expr("a + e + c*d") + parse_expr("a*e - b*d")
    assert p == parse_expr("a + e + c*d + a*e - b*d")
    point = {"a": 2, "b": 3, "c": 5, "d": 7, "e": 11}
    assert p.evaluate(point) == 2 + 11 + 5 * 7 + 2 * 11 - 3 * 7


def test_exact_division():
    """
    Exact quotients and the failures
    """
    assert parse_expr("x^2 - y^2") / parse_expr("x - y") == parse_expr("x + y")
    assert parse_expr("2*x*y") / parse_expr("2*y") == parse_expr("x")
    with pytest.raises(NotDivisible):
        parse_expr("x^2 + 1") / parse_expr("x + 1")
    with pytest.raises(DivByZero):
        parse_expr("x") / MPoly()


def test_laurent_monomials():
    """
    Negative exponents are allowed for units only
    """
    x = MPoly.var("x")
    assert x ** -1 * x == 1
    assert parse_expr("x^-1*y").evaluate({"x": 2, "y": 3}) == Fraction(3, 2)
    with pytest.raises(NotDivisible):
        (x + 1) ** -1


def test_canonical_printing():
    """
    Parsing the printed form gives back the same polynomial
    """
    for text in ("c*d + a + e", "a*e - b*d", "-3*x^2*y + 7", "x^-2*y - 1", "0"):
        p = parse_expr(text)
        assert parse_expr(str(p)) == p
    assert str(parse_expr("e + a + d*c")) == "c*d + a + e"


def test_parse_errors():
    """
    Malformed input and undeclared variables
    """
    for text in ("a +", "2^3", "a * * b", "(a"):
        with pytest.raises(ParseError):
            parse_expr(text)
    with pytest.raises(ParseError):
        parse_expr("a + z", ["a", "b"])


def test_tpoly():
    """
    Polynomials in t with polynomial coefficients
    """
    q = parse_tpoly("t^2 - (a + e + c*d)*t + a*e - b*d")
    assert q.degree == 2 and q.is_monic
    assert q[0] == parse_expr("a*e - b*d")
    assert parse_tpoly(str(q)) == q
    assert q.reciprocal() == parse_tpoly("1 - (a + e + c*d)*t + (a*e - b*d)*t^2")
    assert TPoly.from_coefficients([-1, 0, 1]) == parse_tpoly("(t - 1)*(t + 1)")
    assert q.evaluate_coefficients(
        {"a": 1, "b": 1, "c": 1, "d": 1, "e": 1}) == [0, -3, 1]
