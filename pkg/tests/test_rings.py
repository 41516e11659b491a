import pytest

from ddsurf.fields import QQ
from ddsurf.parse import parse_poly
from ddsurf.poly import PolyRing
from ddsurf.rings import RingMap, RingPresentation, surface_ring, verify_ring_map
from ddsurf.surface import SurfacePresentation
from ddsurf import jsonio


def presentation(vars, relations):
    ring = PolyRing(QQ, vars)
    return RingPresentation(ring, tuple(parse_poly(t, ring) for t in relations))


def surf(d, e, p_txt, q_txt):
    ring = PolyRing(QQ)
    return SurfacePresentation(QQ, d, e, parse_poly(p_txt, ring), parse_poly(q_txt, ring))


def test_identity_map_verifies():
    pres = presentation(("X", "Z", "T"), ["X^3*T - Z^2"])
    m = RingMap(
        pres,
        pres,
        {v: pres.ring.var(v) for v in pres.vars},
        {v: pres.ring.var(v) for v in pres.vars},
    )
    ver = verify_ring_map(m)
    assert ver.is_isomorphism_certified


def test_relation_preservation_failure_detected():
    # sending t -> T between the two headline surfaces breaks the second relation
    B1 = surf(2, 4, "Z^2", "Y^2")
    B2 = surf(2, 4, "Z^2", "Y^2 - X*Y*Z^2")
    broken = RingMap(
        surface_ring(B1),
        surface_ring(B2),
        {v: B2.ring.var(v) for v in ("X", "Y", "Z", "T")},
    )
    ver = verify_ring_map(broken, target_equal=B2.equal_in_B)
    assert not ver.relations_preserved
    assert any("nonzero" in msg for msg in ver.relation_failures)


def test_missing_certs_leave_surjectivity_open():
    pres = presentation(("X", "Z", "T"), ["X^3*T - Z^2"])
    m = RingMap(pres, pres, {v: pres.ring.var(v) for v in pres.vars})
    ver = verify_ring_map(m)
    assert ver.relations_preserved
    assert ver.surjective is None
    assert not ver.is_isomorphism_certified


def test_wrong_preimage_detected():
    pres = presentation(("X", "Z", "T"), ["X^3*T - Z^2"])
    m = RingMap(
        pres,
        pres,
        {v: pres.ring.var(v) for v in pres.vars},
        {"X": pres.ring.var("X"), "Z": pres.ring.var("Z"), "T": pres.ring.var("Z")},
    )
    ver = verify_ring_map(m)
    assert ver.surjective is False
    assert any("T" in msg for msg in ver.generator_failures)


def test_compose_tracks_certs():
    B = surf(2, 4, "Z^2", "Y^2")
    pres = surface_ring(B)
    ring = B.ring
    # the scaling automorphism with lambda=2, gamma=1: y picks up
    # lambda^-d = 1/4 and t picks up nu^s / lambda^e = 1/256
    images = {
        "X": ring.var("X").scale(2),
        "Y": ring.var("Y").scale(QQ.coerce(1) / 4),
        "Z": ring.var("Z"),
        "T": ring.var("T").scale(QQ.coerce(1) / 256),
    }
    pre = {
        "X": ring.var("X").scale(QQ.coerce(1) / 2),
        "Y": ring.var("Y").scale(4),
        "Z": ring.var("Z"),
        "T": ring.var("T").scale(256),
    }
    m = RingMap(pres, pres, images, pre)
    assert verify_ring_map(m, target_equal=B.equal_in_B).is_isomorphism_certified
    mm = m.compose(m)
    assert mm.images["X"] == ring.var("X").scale(4)
    assert verify_ring_map(mm, target_equal=B.equal_in_B).is_isomorphism_certified


def test_ringmap_json_roundtrip():
    B1 = surf(2, 4, "Z^2", "Y^2")
    B2 = surf(2, 4, "Z^2", "Y^2 - X*Y*Z^2")
    m = RingMap(
        surface_ring(B1),
        surface_ring(B2),
        {
            "X": B2.ring.var("X"),
            "Y": B2.ring.var("Y"),
            "Z": B2.ring.var("Z"),
            "T": parse_poly("(1 + X^3)*T + Y*Z^2", B2.ring),
        },
        {"X": B1.ring.var("X"), "Y": B1.ring.var("Y"), "Z": B1.ring.var("Z"),
         "T": parse_poly("(1 - X^3)*T", B1.ring)},
    )
    blob = jsonio.ringmap_to_json(m)
    m2 = jsonio.ringmap_from_json(blob)
    assert m2.images == m.images
    assert m2.preimage_certs == m.preimage_certs
    assert jsonio.ringmap_to_json(m2) == blob


def test_presentation_zero_relation_rejected():
    ring = PolyRing(QQ, ("X", "Z"))
    with pytest.raises(ValueError):
        RingPresentation(ring, (ring.zero(),))
