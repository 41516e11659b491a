"""Finitely presented rings and generator-image homomorphisms.

A RingMap is verified in two halves: every source relation must map to zero
in the target ring, and every target generator must be hit by a supplied
preimage certificate.  For integral-domain presentations of equal dimension
(the only ones produced here) those two facts certify an isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Optional

from .errors import FieldMismatch
from .groebner import GroebnerBasis, IdealBasis, MonomialOrder, buchberger, reduce_full
from .poly import MultiPoly, PolyRing


@dataclass
class RingPresentation:
    """k[vars]/(relations)."""

    ring: PolyRing
    relations: tuple[MultiPoly, ...]
    _gb: Optional[GroebnerBasis] = dc_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        for rel in self.relations:
            if rel.ring != self.ring:
                raise FieldMismatch("relations must live in the presentation's ring")
            if rel.is_zero:
                raise ValueError("zero relation")

    @property
    def field(self):
        return self.ring.field

    @property
    def vars(self):
        return self.ring.vars

    def groebner(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = buchberger(IdealBasis(self.relations, MonomialOrder()))
        return self._gb

    def is_zero_element(self, p: MultiPoly) -> bool:
        """Does p represent zero in the quotient ring?"""
        nf, _ = reduce_full(p, self.groebner())
        return nf.is_zero

    def equal_elements(self, p: MultiPoly, q: MultiPoly) -> bool:
        return self.is_zero_element(p - q)

    def __str__(self):
        rels = ", ".join(str(r) for r in self.relations)
        return f"{self.ring}/({rels})"


def surface_ring(S) -> RingPresentation:
    """The coordinate-ring presentation of a surface, with the fast
    Laurent-embedding equality wired in."""
    pres = RingPresentation(S.ring, (S.relation_y(), S.relation_t()))
    pres.equal_elements = S.equal_in_B  # exact and complete for these quotients
    pres.is_zero_element = S.is_zero_in_B
    return pres


@dataclass
class RingMap:
    """A k-algebra map given by generator images, with optional surjectivity
    certificates (a preimage polynomial per target generator)."""

    source: RingPresentation
    target: RingPresentation
    images: dict[str, MultiPoly]
    preimage_certs: Optional[dict[str, MultiPoly]] = None

    def __post_init__(self):
        for v in self.source.vars:
            if v not in self.images:
                raise ValueError(f"no image for source generator {v}")
        for v, img in self.images.items():
            if img.ring != self.target.ring:
                raise FieldMismatch(f"image of {v} is not in the target ring")
        if self.preimage_certs:
            for v, pre in self.preimage_certs.items():
                if pre.ring != self.source.ring:
                    raise FieldMismatch(f"preimage certificate of {v} is not in the source ring")

    def apply(self, p: MultiPoly) -> MultiPoly:
        """Image of a source-ring polynomial."""
        return p.substitute(self.images, into=self.target.ring)

    def compose(self, after: "RingMap") -> "RingMap":
        """after o self; defined when self's target is after's source."""
        if self.target.ring != after.source.ring:
            raise FieldMismatch("maps do not compose")
        images = {v: after.apply(img) for v, img in self.images.items()}
        certs = None
        if (
            self.preimage_certs is not None
            and after.preimage_certs is not None
            and all(v in self.preimage_certs for v in self.target.vars)
        ):
            certs = {
                v: pre.substitute(self.preimage_certs, into=self.source.ring)
                for v, pre in after.preimage_certs.items()
            }
        return RingMap(self.source, after.target, images, certs)


@dataclass
class MapVerification:
    """Outcome of checking a RingMap."""

    relations_preserved: bool
    relation_failures: list[str]
    surjective: Optional[bool]  # None when no certificates were supplied
    generator_failures: list[str]

    @property
    def is_isomorphism_certified(self) -> bool:
        return self.relations_preserved and self.surjective is True

    def to_json(self) -> dict:
        return {
            "relations_preserved": self.relations_preserved,
            "relation_failures": list(self.relation_failures),
            "surjective": self.surjective,
            "generator_failures": list(self.generator_failures),
            "isomorphism_certified": self.is_isomorphism_certified,
        }


def verify_ring_map(
    m: RingMap,
    target_equal: Optional[Callable[[MultiPoly, MultiPoly], bool]] = None,
) -> MapVerification:
    """Check well-definedness and (when certificates are present) surjectivity.

    target_equal decides equality in the target ring; by default the
    target presentation's Groebner normal form is used.
    """
    equal = target_equal or m.target.equal_elements
    relation_failures = []
    for rel in m.source.relations:
        img = m.apply(rel)
        if not equal(img, m.target.ring.zero()):
            relation_failures.append(f"{rel} -> {img} is nonzero in the target")
    generator_failures: list[str] = []
    surjective: Optional[bool] = None
    if m.preimage_certs is not None:
        surjective = True
        for v in m.target.vars:
            pre = m.preimage_certs.get(v)
            if pre is None:
                surjective = False
                generator_failures.append(f"no preimage certificate for {v}")
                continue
            hit = m.apply(pre)
            if not equal(hit, m.target.ring.var(v)):
                surjective = False
                generator_failures.append(f"certificate for {v} maps to {hit}, not {v}")
    return MapVerification(
        relations_preserved=not relation_failures,
        relation_failures=relation_failures,
        surjective=surjective,
        generator_failures=generator_failures,
    )
