import random

import pytest

from ddsurf.errors import ResourceLimitExceeded
from ddsurf.fields import GF, QQ
from ddsurf.groebner import (
    IdealBasis,
    MonomialOrder,
    buchberger,
    ideals_equal,
    is_member,
    is_unit_modulo,
    reduce_full,
)
from ddsurf.parse import parse_poly
from ddsurf.poly import MultiPoly, PolyRing

from oracle import bounded_membership

RQ = PolyRing(QQ)


def P(text, ring=RQ):
    return parse_poly(text, ring)


def basis(*texts, ring=RQ, order=None):
    gens = tuple(P(t, ring) for t in texts)
    return IdealBasis(gens, order or MonomialOrder())


def test_single_generator_is_its_own_basis():
    gb = buchberger(basis("X"))
    assert gb.elements == [P("X")]
    assert gb.check_transform()


def test_gb_contains_eliminated_generator():
    gb = buchberger(basis("X^2*Y - Z^2", "X"), )
    assert P("Z^2") in gb.elements
    assert gb.check_transform()


def test_spoly_reduction_invariant():
    # every S-polynomial of the basis elements reduces to zero
    gb = buchberger(basis("Y^2", "Z^2 - X^2*Y", "X^4"))
    key = gb._key
    for i in range(len(gb.elements)):
        for j in range(i + 1, len(gb.elements)):
            gi, gj = gb.elements[i], gb.elements[j]
            mi = max(gi.terms, key=key)
            mj = max(gj.terms, key=key)
            lcm = tuple(max(a, b) for a, b in zip(mi, mj))
            s = gi.term_mul(QQ.one, tuple(a - b for a, b in zip(lcm, mi))) - gj.term_mul(
                QQ.one, tuple(a - b for a, b in zip(lcm, mj))
            )
            nf, _ = reduce_full(s, gb)
            assert nf.is_zero


def test_reduce_full_spec_examples():
    gb = buchberger(basis("X^2*Y - Z^2"))
    nf, cert = reduce_full(P("X^2*Y"), gb)
    assert nf == P("Z^2")
    assert cert.cofactors == (P("1"),)

    nf, cert = reduce_full(RQ.zero(), gb)
    assert nf.is_zero and all(c.is_zero for c in cert.cofactors)

    gb = buchberger(basis("Y^2", "Z^2 - X^2*Y", "X^4"))
    target = P("Y^2 - X*Y*Z^2")
    nf, cert = reduce_full(target, gb)
    assert nf.is_zero
    assert cert.cofactors == (P("1 - X^3"), P("-X*Y"), P("0"))
    assert cert.verify(target, gb.basis.generators)


def test_is_member_spec_examples():
    cert = is_member(P("Z^2"), basis("X", "X^2*Y - Z^2"))
    assert cert is not None and cert.verify(P("Z^2"), (P("X"), P("X^2*Y - Z^2")))

    assert is_member(P("X^2*Y"), basis("X^4", "X^2*Y - Z^2", "X^4*T - Y^2")) is None

    cert = is_member(P("1"), basis("1"))
    assert cert is not None and cert.cofactors == (P("1"),)


def test_normal_form_is_canonical():
    # same ideal presented differently: normal forms agree
    b1 = buchberger(basis("X^2*Y - Z^2", "X^4"))
    b2 = buchberger(basis("X^4", "X^2*Y - Z^2 + X^4"))
    probe = P("X^2*Y + X^5 + Z^2")
    assert reduce_full(probe, b1)[0] == reduce_full(probe, b2)[0]


def test_gb_idempotence():
    gb = buchberger(basis("Y^2", "Z^2 - X^2*Y", "X^4"))
    again = buchberger(IdealBasis(tuple(gb.elements), gb.order))
    assert [str(g) for g in again.elements] == [str(g) for g in gb.elements]


def test_ideals_equal_spec_examples():
    assert ideals_equal(basis("X", "Z^2"), basis("Z^2 - X^2*Y", "X"))
    assert not ideals_equal(basis("X"), basis("X^2"))
    b = basis("X^2*Y - Z^2", "X^4*T - Y^2")
    assert ideals_equal(b, b)


def test_is_unit_modulo():
    inv = is_unit_modulo(P("1 - X^3"), basis("X^4"))
    assert inv == P("1 + X^3")
    assert is_unit_modulo(P("X"), basis("X^4")) is None
    assert is_unit_modulo(P("5"), basis("X")) == P("1/5")


def test_lex_order():
    gb = buchberger(basis("X^2*Y - Z^2", "X", order=MonomialOrder("lex", ("X", "Y", "Z", "T"))))
    assert P("Z^2") in gb.elements


def test_resource_cap_raises_not_wrong():
    with pytest.raises(ResourceLimitExceeded):
        buchberger(basis("X^2*Y - Z^2", "X^4*T - Y^2", "X^3 - Z*T"), max_basis=2)


def test_certificates_use_original_generators():
    # generators deliberately non-monic and redundant
    gens = ("2*X^2*Y - 2*Z^2", "3*X", "X + Z^2 - Z^2")
    b = basis(*gens)
    cert = is_member(P("Z^2"), b)
    assert cert is not None
    assert cert.verify(P("Z^2"), b.generators)


def _random_poly(rng, ring, maxdeg, nterms):
    terms = {}
    for _ in range(nterms):
        m = [0] * len(ring.vars)
        budget = rng.randrange(maxdeg + 1)
        for _ in range(budget):
            m[rng.randrange(len(ring.vars))] += 1
        c = rng.randrange(1, ring.field.p)
        terms[tuple(m)] = c
    return MultiPoly(ring, {m: c for m, c in terms.items() if c})


@pytest.mark.parametrize("p", [2, 3])
def test_oracle_equivalence_small(p):
    # quick slice of the full acceptance-scale oracle comparison
    rng = random.Random(p)
    ring = PolyRing(GF(p), ("X", "Y", "Z"))
    for _ in range(25):
        gens = []
        while len(gens) < rng.randrange(1, 4):
            g = _random_poly(rng, ring, 3, rng.randrange(1, 4))
            if not g.is_zero:
                gens.append(g)
        b = IdealBasis(tuple(gens), MonomialOrder())
        if rng.random() < 0.5:
            query = _random_poly(rng, ring, 4, rng.randrange(1, 5))
        else:  # planted member
            acc = ring.zero()
            for g in gens:
                acc = acc + _random_poly(rng, ring, 2, 2) * g
            query = acc
        cert = is_member(query, b)
        if cert is not None:
            assert cert.verify(query, b.generators)
            bound = max(max((int(c.total_degree()) for c in cert.cofactors if not c.is_zero), default=0), 1)
            assert bounded_membership(query, gens, bound) is not None
        else:
            assert bounded_membership(query, gens, 5) is None
