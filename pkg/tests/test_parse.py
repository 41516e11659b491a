import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ddsurf.errors import ParseError
from ddsurf.fields import GF, QQ
from ddsurf.parse import parse_poly, parse_scalar
from ddsurf.poly import MultiPoly, PolyRing

RQ = PolyRing(QQ)


def test_spec_examples():
    p = parse_poly("X^2*Y - Z^2", QQ)
    assert set(p.terms) == {(2, 1, 0, 0), (0, 0, 2, 0)}
    assert parse_poly("0", QQ).is_zero
    assert parse_poly("2*Z + Z", GF(3)).is_zero


def test_precedence_power_binds_tightest():
    assert parse_poly("2*X^3", RQ) == parse_poly("2*(X^3)", RQ)
    assert parse_poly("-X^2", RQ) == -parse_poly("X^2", RQ)
    assert parse_poly("1 + 2*Z^2", RQ) == parse_poly("(1) + (2*(Z^2))", RQ)


def test_rational_literals():
    half = parse_poly("1/2*X", RQ)
    assert half.coeff({"X": 1}) == QQ.coerce(1) / 2
    assert parse_scalar("-3/4", QQ) == QQ.coerce(-3) / 4
    # a/b over a prime field is exact constant division
    assert parse_scalar("1/2", GF(5)) == 3


def test_unary_minus_and_parens():
    assert parse_poly("-(X - Z)", RQ) == parse_poly("Z - X", RQ)
    assert parse_poly("(X + Z)^2", RQ) == parse_poly("X^2 + 2*X*Z + Z^2", RQ)


def test_errors_carry_position():
    with pytest.raises(ParseError) as e:
        parse_poly("X + ", RQ)
    assert e.value.position is not None
    with pytest.raises(ParseError):
        parse_poly("X ** 2", RQ)  # '**' is not an operator; exponent literal required
    with pytest.raises(ParseError, match="unknown variable"):
        parse_poly("W + 1", RQ)
    with pytest.raises(ParseError, match="division by zero"):
        parse_poly("1/0", RQ)
    with pytest.raises(ParseError, match="constants"):
        parse_poly("X/2", RQ)
    with pytest.raises(ParseError):
        parse_poly("X Y", RQ)  # implicit multiplication is not allowed
    with pytest.raises(ParseError):
        parse_poly("X^-1", RQ)


def test_non_prime_modulus_is_an_error():
    with pytest.raises(ParseError):
        parse_poly("X", GF(4))


def polys(ring):
    coeff = st.integers(-9, 9).map(ring.field.coerce).filter(bool)
    mono = st.tuples(*(st.integers(0, 4) for _ in ring.vars))
    return st.dictionaries(mono, coeff, max_size=7).map(lambda d: MultiPoly(ring, d))


@given(polys(RQ))
@settings(max_examples=120, deadline=None)
def test_parse_print_is_identity(p):
    assert parse_poly(str(p), RQ) == p


@given(polys(PolyRing(GF(5))))
@settings(max_examples=80, deadline=None)
def test_parse_print_identity_prime_field(p):
    assert parse_poly(str(p), PolyRing(GF(5))) == p


def test_custom_variable_universe():
    ring = PolyRing(QQ, ("X", "Y", "T"))
    p = parse_poly("X^4*T - Y^2", ring)
    assert p.degree_in("T") == 1
    with pytest.raises(ParseError, match="unknown variable"):
        parse_poly("Z", ring)
