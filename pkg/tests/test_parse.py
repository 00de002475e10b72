from fractions import Fraction

import pytest

from surfcover.parse import ParseError, parse_expr, parse_poly
from surfcover.polycore import MPoly, RatFn

s, t = MPoly.var("s"), MPoly.var("t")


def test_cubic_first_component():
    f = parse_expr("(t*(s^2+s+1)+s)/(s*(s-1))", ("s", "t"))
    assert f == RatFn(t * (s**2 + s + 1) + s, s * (s - 1))


def test_single_variable():
    assert parse_expr("s") == RatFn(s)


def test_precedence():
    assert parse_expr("-s^2") == RatFn(-(s**2))
    assert parse_expr("2^3^2") == RatFn(512)
    assert parse_expr("1/2*s") == RatFn(s, 2)
    assert parse_expr("s**2 - s*t") == RatFn(s**2 - s * t)
    assert parse_expr("s^-1") == RatFn(1, s)


def test_rational_literals():
    assert parse_poly("3/4*s-1/2") == s.scale(Fraction(3, 4)) - Fraction(1, 2)
    assert parse_poly("-555/1096") == MPoly.const(Fraction(-555, 1096))


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("1/0", "division by zero"),
        ("s/(t-t)", "division by zero"),
        ("2s", "missing operator"),
        ("s t", "missing operator"),
        ("(s+1", r"expected '\)'"),
        ("s+", "unexpected end"),
        ("", "empty"),
        ("s^t", "integer literal"),
        ("s $ t", "unexpected character"),
    ],
)
def test_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_expr(text)


def test_error_position():
    with pytest.raises(ParseError) as info:
        parse_expr("s+1\n+ (t*", ("s", "t"))
    assert info.value.line == 2


def test_unknown_variable():
    with pytest.raises(ParseError, match="unknown variable 'x'"):
        parse_expr("s+x", ("s", "t"))


def test_parse_poly_rejects_fractions():
    with pytest.raises(ParseError, match="polynomial"):
        parse_poly("1/s")
