import random
from fractions import Fraction as F

import pytest

from waringq.errors import DivisionByZeroFunction, ExpressionSyntaxError
from waringq.functions import RationalFunction
from waringq.parser import format_function, format_rational, parse_function
from waringq.poly import Poly

from conftest import P, rand_rational


def test_parse_examples():
    f = parse_function("x^2 - 2/x + 5")
    assert f == RationalFunction(P(1, 0, 5, -2), P(1, 0))
    g = parse_function("(3*x^2+1)/(x^2-2)")
    assert g.num == P(3, 0, 1) and g.den == P(1, 0, -2)
    with pytest.raises(DivisionByZeroFunction):
        parse_function("x/(x-x)")


def test_parse_forms():
    assert parse_function("2x") == parse_function("2*x")
    assert parse_function("-x^3") == RationalFunction(P(-1, 0, 0, 0))
    assert parse_function("1/2 x") == RationalFunction(P(F(1, 2), 0))
    assert parse_function("(x+1)^2") == RationalFunction(P(1, 2, 1))
    assert parse_function(" 7 ") == RationalFunction.const(7)


@pytest.mark.parametrize("text,pos", [("(x+", 3), ("x^", 2), ("x**2", 2), ("x + $", 4), ("x)", 1), ("x^-1", 2)])
def test_errors_carry_position(text, pos):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_function(text)
    assert info.value.position == pos


def test_format_examples():
    x = RationalFunction.x()
    assert format_function(1 / x**2) == "1/x^2"
    assert format_function(x - 1 / x) == "(x^2 - 1)/x"
    assert format_rational(F(-3, 4)) == "-3/4"
    assert format_rational(F(6, 3)) == "2"


def test_round_trip_random():
    rng = random.Random(7)
    for _ in range(100):
        num = Poly([rand_rational(rng, 9) for _ in range(rng.randint(1, 5))])
        den = Poly([rand_rational(rng, 9) for _ in range(rng.randint(1, 4))])
        if num.is_zero or den.is_zero:
            continue
        f = RationalFunction(num, den)
        text = format_function(f)
        assert parse_function(text) == f, text
        assert format_function(parse_function(text)) == text
