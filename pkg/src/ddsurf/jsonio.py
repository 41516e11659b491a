"""JSON wire formats: surfaces, ideals, witnesses, ring maps, verdicts.

Readers are strict (unknown keys are rejected) and writers are canonical,
so identical inputs always serialize to byte-identical reports.
"""

from __future__ import annotations

from .classify import ClassificationVerdict, IsoWitness
from .errors import ParseError
from .fields import Field
from .groebner import IdealBasis, MembershipCertificate, MonomialOrder
from .parse import parse_poly, parse_scalar
from .poly import DEFAULT_VARS, MultiPoly, PolyRing
from .rings import RingMap, RingPresentation, surface_ring
from .surface import SurfacePresentation


def _check_keys(obj: dict, required: set[str], optional: set[str] = frozenset()):
    if not isinstance(obj, dict):
        raise ParseError(f"expected a JSON object, got {type(obj).__name__}")
    unknown = set(obj) - required - set(optional)
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise ParseError(f"missing keys {sorted(missing)}")


def field_from_obj(obj: dict) -> Field:
    """Read a field descriptor, either nested under "field" or spliced into
    the surrounding object as "field" (and "p")."""
    raw = obj.get("field")
    if isinstance(raw, dict):
        return Field.from_json(raw)
    descriptor = {"field": raw}
    if raw == "Fp":
        if "p" not in obj:
            raise ParseError("field Fp needs a modulus key 'p'")
        descriptor["p"] = obj["p"]
    return Field.from_json(descriptor)


def _field_keys(obj: dict) -> set[str]:
    return {"field", "p"} if obj.get("field") == "Fp" else {"field"}


def parse_field_flag(text: str) -> Field:
    """Parse the --field flag: Q or Fp:<p>."""
    if text == "Q":
        return Field(None)
    if text.startswith("Fp:"):
        return Field(int(text.split(":", 1)[1]))
    raise ParseError(f"bad field flag {text!r}; use Q or Fp:<p>")


# -- surfaces -------------------------------------------------------------


def surface_to_json(S: SurfacePresentation) -> dict:
    out = dict(S.field.to_json())
    out.update({"d": S.d, "e": S.e, "P": str(S.P), "Q": str(S.Q)})
    return out


def surface_from_json(obj: dict) -> SurfacePresentation:
    _check_keys(obj, {"field", "d", "e", "P", "Q"}, optional={"p"})
    fld = field_from_obj(obj)
    ring = PolyRing(fld, DEFAULT_VARS)
    return SurfacePresentation(
        fld, int(obj["d"]), int(obj["e"]), parse_poly(obj["P"], ring), parse_poly(obj["Q"], ring)
    )


def looks_like_surface(obj: dict) -> bool:
    return isinstance(obj, dict) and "d" in obj and "Q" in obj


# -- ideals ---------------------------------------------------------------


def ideal_from_json(obj: dict) -> IdealBasis:
    _check_keys(obj, {"field", "generators"}, optional={"p", "vars", "order"})
    fld = field_from_obj(obj)
    vars = tuple(obj.get("vars", DEFAULT_VARS))
    ring = PolyRing(fld, vars)
    gens = tuple(parse_poly(t, ring) for t in obj["generators"])
    order = MonomialOrder(obj.get("order", "grevlex"))
    return IdealBasis(gens, order)


def ideal_to_json(basis: IdealBasis) -> dict:
    out = dict(basis.ring.field.to_json())
    out.update(
        {
            "vars": list(basis.ring.vars),
            "generators": [str(g) for g in basis.generators],
            "order": basis.order.to_json(),
        }
    )
    return out


def certificate_to_json(cert: MembershipCertificate) -> list[str]:
    return [str(c) for c in cert.cofactors]


# -- presented rings and maps ------------------------------------------------


def presentation_to_json(pres: RingPresentation) -> dict:
    out = dict(pres.field.to_json())
    out.update({"vars": list(pres.vars), "relations": [str(r) for r in pres.relations]})
    return out


def presentation_from_json(obj: dict) -> RingPresentation:
    if looks_like_surface(obj):
        return surface_ring(surface_from_json(obj))
    _check_keys(obj, {"field", "vars", "relations"}, optional={"p"})
    fld = field_from_obj(obj)
    ring = PolyRing(fld, tuple(obj["vars"]))
    return RingPresentation(ring, tuple(parse_poly(t, ring) for t in obj["relations"]))


def ringmap_to_json(m: RingMap) -> dict:
    out = {
        "source": presentation_to_json(m.source),
        "target": presentation_to_json(m.target),
        "images": {v: str(p) for v, p in sorted(m.images.items())},
    }
    if m.preimage_certs is not None:
        out["preimages"] = {v: str(p) for v, p in sorted(m.preimage_certs.items())}
    return out


def ringmap_from_json(obj: dict) -> RingMap:
    _check_keys(obj, {"source", "target", "images"}, optional={"preimages"})
    source = presentation_from_json(obj["source"])
    target = presentation_from_json(obj["target"])
    images = {v: parse_poly(t, target.ring) for v, t in obj["images"].items()}
    preimages = None
    if "preimages" in obj:
        preimages = {v: parse_poly(t, source.ring) for v, t in obj["preimages"].items()}
    return RingMap(source, target, images, preimages)


# -- witnesses and verdicts ---------------------------------------------------


def witness_candidate_from_json(obj: dict, S: SurfacePresentation):
    """(lambda, gamma, delta, f-or-None) from witness JSON."""
    _check_keys(obj, {"lambda", "gamma"}, optional={"delta", "f"})
    fld = S.field
    lam = parse_scalar(obj["lambda"], fld)
    gamma = parse_scalar(obj["gamma"], fld)
    if not lam or not gamma:
        raise ParseError("witness scalars lambda and gamma must be nonzero")
    delta = parse_poly(obj.get("delta", "0"), S.ring)
    if delta.variables() - {"X"}:
        raise ParseError("delta must be a polynomial in X only")
    f = parse_poly(obj["f"], S.ring) if "f" in obj else None
    return lam, gamma, delta, f


def witness_to_json(w: IsoWitness) -> dict:
    out = {
        "lambda": str(w.lam),
        "gamma": str(w.gamma),
        "delta": str(w.delta),
        "f": str(w.f),
        "nu": str(w.nu),
        "g": str(w.g),
    }
    if w.h_cert is not None:
        out["h_certificate"] = certificate_to_json(w.h_cert)
    if w.h_cert_rev is not None:
        out["h_certificate_reverse"] = certificate_to_json(w.h_cert_rev)
    return out


def verdict_to_json(v: ClassificationVerdict) -> dict:
    out: dict = {"status": v.status, "log": v.log}
    if v.reason is not None:
        out["reason"] = v.reason
    if v.witness is not None:
        out["witness"] = witness_to_json(v.witness)
    if v.ring_map is not None:
        out["map"] = ringmap_to_json(v.ring_map)
    if v.verification is not None:
        out["verification"] = v.verification.to_json()
    return out
