import pytest

from ddsurf.fields import QQ
from ddsurf.laurent import LaurentPoly, laurent_from_poly
from ddsurf.parse import parse_poly
from ddsurf.poly import PolyRing

RQ = PolyRing(QQ)


def test_div_xpow_spec_example():
    z2 = laurent_from_poly(parse_poly("Z^2", RQ))
    shifted = z2.div_xpow(2)
    assert shifted.terms == {(-2, 2): QQ.one}


def test_inverse_cancels():
    x = LaurentPoly.term(QQ, 1, 1, 0)
    xinv = LaurentPoly.term(QQ, 1, -1, 0)
    assert x * xinv == LaurentPoly.one(QQ)


def test_add_to_zero():
    a = LaurentPoly.term(QQ, 1, -2, 2)
    assert (a + (-a)).is_zero


def test_from_poly_rejects_y_t():
    with pytest.raises(ValueError):
        laurent_from_poly(parse_poly("Y + X", RQ))
    with pytest.raises(ValueError):
        laurent_from_poly(parse_poly("T", RQ))


def test_ring_laws():
    a = laurent_from_poly(parse_poly("X^2 + Z", RQ)).div_xpow(3)
    b = laurent_from_poly(parse_poly("X*Z - 1", RQ)).div_xpow(1)
    c = LaurentPoly.term(QQ, 7, -4, 2)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a - a).is_zero


def test_pow():
    a = laurent_from_poly(parse_poly("Z", RQ)).div_xpow(2)
    assert a**2 == LaurentPoly.term(QQ, 1, -4, 2)
    assert a**0 == LaurentPoly.one(QQ)
