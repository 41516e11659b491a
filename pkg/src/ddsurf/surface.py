"""Double Danielewski surface presentations and their decision helpers.

A presentation is the datum (field, d, e, P, Q) cutting out the surface by
x^d*y = P(x,z) and x^e*t = Q(x,y,z).  Equality in the coordinate ring B is
decided through the exact embedding B -> k[x, 1/x, z]; ideal-theoretic
statements in the ambient polynomial ring go through the Groebner engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Optional

from .errors import InvalidPresentation
from .fields import Field
from .groebner import IdealBasis, MembershipCertificate, MonomialOrder, buchberger, is_member
from .laurent import LaurentPoly, laurent_from_poly
from .poly import DEFAULT_VARS, MultiPoly, PolyRing

SURFACE_VARS = DEFAULT_VARS  # (X, Y, Z, T)


@dataclass
class ApplicabilityReport:
    """Which parts of the classification apply to a presentation."""

    ml_known: bool
    theorem_I_applicable: bool
    theorem_II_applicable: bool
    notes: list[str]

    def to_json(self) -> dict:
        return {
            "ml_known": self.ml_known,
            "theorem_I_applicable": self.theorem_I_applicable,
            "theorem_II_applicable": self.theorem_II_applicable,
            "notes": list(self.notes),
        }


class SurfacePresentation:
    """One double Danielewski surface: exponents d, e and defining P, Q."""

    def __init__(self, field: Field, d: int, e: int, P: MultiPoly, Q: MultiPoly):
        self.field = field
        self.d = d
        self.e = e
        self.ring = PolyRing(field, SURFACE_VARS)
        if P.ring != self.ring or Q.ring != self.ring:
            raise InvalidPresentation("P and Q must live in k[X,Y,Z,T] over the stated field")
        self.P = P
        self.Q = Q
        self._validated = False
        self._laurent_cache: dict = {}
        self._gb_cache: dict = {}

    # -- derived invariants -------------------------------------------------

    @property
    def r(self) -> int:
        return int(self.P.degree_in("Z")) if not self.P.is_zero else -1

    @property
    def s(self) -> int:
        return int(self.Q.degree_in("Y")) if not self.Q.is_zero else -1

    def relation_y(self) -> MultiPoly:
        """X^d*Y - P."""
        return self.ring.monomial({"X": self.d, "Y": 1}) - self.P

    def relation_t(self) -> MultiPoly:
        """X^e*T - Q."""
        return self.ring.monomial({"X": self.e, "T": 1}) - self.Q

    def G(self) -> MultiPoly:
        """P - X^d*Y, the first relation as used inside k[X,Y,Z]."""
        return self.P - self.ring.monomial({"X": self.d, "Y": 1})

    def __str__(self):
        return f"({self.field}; d={self.d}, e={self.e}, P={self.P}, Q={self.Q})"

    def __eq__(self, other):
        return (
            isinstance(other, SurfacePresentation)
            and (self.field, self.d, self.e) == (other.field, other.d, other.e)
            and self.P == other.P
            and self.Q == other.Q
        )

    def __hash__(self):
        return hash((self.field, self.d, self.e, self.P, self.Q))

    # -- validation -----------------------------------------------------------

    def validate(self) -> ApplicabilityReport:
        """Check the structural invariants and report theorem applicability."""
        if self.d < 1 or self.e < 1:
            raise InvalidPresentation("exponents d and e must be at least 1")
        stray_p = self.P.variables() - {"X", "Z"}
        if stray_p:
            raise InvalidPresentation(f"P mentions {sorted(stray_p)}; only X, Z allowed")
        stray_q = self.Q.variables() - {"X", "Y", "Z"}
        if stray_q:
            raise InvalidPresentation(f"Q mentions {sorted(stray_q)}; only X, Y, Z allowed")
        if not self.P.is_monic_in("Z"):
            raise InvalidPresentation("P must be monic in Z of degree >= 1")
        if not self.Q.is_monic_in("Y"):
            raise InvalidPresentation("Q must be monic in Y of degree >= 1")
        self._validated = True
        r, s, e = self.r, self.s, self.e
        ml_known = (r >= 2 and s >= 2) or (r >= 2 and s == 1) or (r == 1 and s >= 2 and e >= 2)
        notes = []
        if r == 1:
            notes.append(
                "r = 1: the surface is an ordinary Danielewski surface; "
                "the classification theorem does not apply"
            )
        if s == 1:
            notes.append(
                "s = 1: the surface reduces to an ordinary Danielewski surface; "
                "only the d+e sum is a known invariant"
            )
        if not ml_known:
            notes.append("the x-axis subring is not known to be distinguished for these (r, s, e)")
        return ApplicabilityReport(
            ml_known=ml_known,
            theorem_I_applicable=r > 1,
            theorem_II_applicable=s > 1,
            notes=notes,
        )

    def ensure_valid(self):
        if not self._validated:
            self.validate()

    # -- Laurent embedding ------------------------------------------------------

    def _laurent_images(self):
        got = self._laurent_cache.get("images")
        if got is None:
            y_img = laurent_from_poly(self.P).div_xpow(self.d)
            iq = self.Q.ring.index("Y")
            t_acc = LaurentPoly.zero(self.field)
            for m, c in self.Q.terms.items():
                base = LaurentPoly.term(self.field, c, m[self.ring.index("X")], m[self.ring.index("Z")])
                t_acc = t_acc + base * y_img ** m[iq]
            t_img = t_acc.div_xpow(self.e)
            got = (y_img, t_img)
            self._laurent_cache["images"] = got
        return got

    def laurent_nf(self, p: MultiPoly) -> LaurentPoly:
        """Image of p in k[x, 1/x, z] under y = P/x^d, t = Q(x, y, z)/x^e."""
        self.ensure_valid()
        y_img, t_img = self._laurent_images()
        ix, iy, iz, it = (self.ring.index(v) for v in ("X", "Y", "Z", "T"))
        acc = LaurentPoly.zero(self.field)
        for m, c in p.terms.items():
            term = LaurentPoly.term(self.field, c, m[ix], m[iz])
            if m[iy]:
                term = term * y_img ** m[iy]
            if m[it]:
                term = term * t_img ** m[it]
            acc = acc + term
        return acc

    def equal_in_B(self, p: MultiPoly, q: MultiPoly) -> bool:
        """Equality of images in the coordinate ring, via the Laurent embedding."""
        return self.laurent_nf(p) == self.laurent_nf(q)

    def is_zero_in_B(self, p: MultiPoly) -> bool:
        return self.laurent_nf(p).is_zero

    # -- ideal membership modulo x^n ----------------------------------------------

    def mod_xn_basis(self, n: int) -> IdealBasis:
        return IdealBasis(
            (self.ring.monomial({"X": n}), self.relation_y(), self.relation_t()),
            MonomialOrder(),
        )

    def in_ideal_mod_xn(self, p: MultiPoly, n: int, **caps) -> Optional[MembershipCertificate]:
        """Certificate iff p lies in (X^n, X^d*Y - P, X^e*T - Q)."""
        self.ensure_valid()
        if n < 1:
            raise ValueError("n must be positive")
        gb = self._gb_cache.get(n)
        if gb is None:
            gb = buchberger(self.mod_xn_basis(n), **caps)
            self._gb_cache[n] = gb
        return is_member(p, gb)


def validate(S: SurfacePresentation) -> ApplicabilityReport:
    return S.validate()


# -- lemma oracles ------------------------------------------------------------------


def _poly_box(ring: PolyRing, bounds: dict[str, int]) -> list[tuple]:
    """All exponent tuples within per-variable bounds (unlisted vars fixed at 0)."""
    ranges = []
    for v in ring.vars:
        ranges.append(range(bounds.get(v, 0) + 1))
    return [m for m in itertools.product(*ranges)]


def _enumerate_polys(ring: PolyRing, monos: list[tuple]) -> Iterable[MultiPoly]:
    """Every polynomial supported on the given monomials, coefficients in the
    (finite) field; canonical coefficient-vector order."""
    fld = ring.field
    elems = list(fld.elements())
    for coeffs in itertools.product(elems, repeat=len(monos)):
        yield MultiPoly(ring, {m: c for m, c in zip(monos, coeffs) if c})


DEFAULT_LEMMA_BOUNDS = {"X": 2, "Y": 0, "Z": 2}


def lemma1_oracle(
    P: MultiPoly,
    d: int,
    field: Field | None = None,
    g_bounds: dict[str, int] | None = None,
    w_bounds: dict[str, int] | None = None,
) -> list[dict]:
    """Exhaustively hunt for counterexamples to the divisibility lemma:
    whenever deg_Z(h) < r and X^d | (h + g*P), both g and h must be
    divisible by X^d.

    Valid instances are generated constructively as h := X^d*w - g*P (so the
    divisibility hypothesis holds by construction) and filtered to
    deg_Z(h) < r; rejection sampling over (g, h) would essentially never
    satisfy the hypothesis.  For each g the Z-degree filter forces the
    high-Z part of w, so only the low-Z part of w is enumerated freely.
    Returns the violations found (expected: none).
    """
    ring = P.ring
    fld = field or ring.field
    if not fld.is_finite:
        raise ValueError("enumeration needs a finite field; check explicit instances instead")
    if not P.is_monic_in("Z"):
        raise ValueError("P must be monic in Z")
    r = int(P.degree_in("Z"))
    g_bounds = dict(DEFAULT_LEMMA_BOUNDS if g_bounds is None else g_bounds)
    if w_bounds is None:
        # size the w box so every forced high part g*P/X^d is representable
        px = max(int(P.degree_in("X")), 0)
        w_bounds = {
            "X": g_bounds.get("X", 0) + px,
            "Y": g_bounds.get("Y", 0),
            "Z": g_bounds.get("Z", 0) + r,
        }
    else:
        w_bounds = dict(w_bounds)
    iz = ring.index("Z")
    ix = ring.index("X")

    def split_z(p: MultiPoly):
        hi = {m: c for m, c in p.terms.items() if m[iz] >= r}
        lo = {m: c for m, c in p.terms.items() if m[iz] < r}
        return MultiPoly(ring, hi), MultiPoly(ring, lo)

    def within(p: MultiPoly, bounds: dict[str, int]) -> bool:
        for v in ring.vars:
            if p.degree_in(v) > bounds.get(v, 0):
                return False
        return True

    w_low_monos = [m for m in _poly_box(ring, w_bounds) if m[iz] < r]
    xd_shift = tuple(d if i == ix else 0 for i in range(len(ring.vars)))
    one = fld.one

    counterexamples = []
    for g in _enumerate_polys(ring, _poly_box(ring, g_bounds)):
        gp = g * P
        gp_hi, gp_lo = split_z(gp)
        # X^d*w must reproduce the high-Z part of g*P exactly
        if gp_hi.valuation("X") < d:
            continue
        w_high = gp_hi.term_mul(one, tuple(-x for x in xd_shift))
        if not within(w_high, w_bounds):
            continue
        for w_low in _enumerate_polys(ring, w_low_monos):
            w = w_high + w_low
            h = w.term_mul(one, xd_shift) - gp
            if h.degree_in("Z") >= r:
                continue
            if g.valuation("X") < d or h.valuation("X") < d:
                counterexamples.append(
                    {"g": str(g), "w": str(w), "h": str(h), "P": str(P), "d": d}
                )
    counterexamples.sort(key=lambda c: (c["g"], c["w"]))
    return counterexamples


def lemma2_oracle(
    S: SurfacePresentation,
    part: str,
    u,
    lowpoly: MultiPoly,
    n: int,
    **caps,
) -> bool:
    """Confirm one instance of the nonvanishing lemma: the stated element is
    NOT in the ideal (X^n, X^d*Y - P, X^e*T - Q).

    part "i": u*X^d*Y + lowpoly with lowpoly in X, Z only, deg_Z < r, n > d.
    part "ii": u*X^e*T + lowpoly with lowpoly in X, Y, Z, deg_Y < s, n > e.
    The preconditions are exactly the lemma's hypotheses and are enforced.
    """
    S.ensure_valid()
    fld = S.field
    u = fld.coerce(u)
    if not u:
        raise ValueError("u must be a nonzero scalar")
    if S.s <= 1:
        raise ValueError("the lemma requires s > 1")
    if part == "i":
        if lowpoly.variables() - {"X", "Z"}:
            raise ValueError("part i needs lowpoly in X and Z only")
        if lowpoly.degree_in("Z") >= S.r:
            raise ValueError("part i needs deg_Z(lowpoly) < r")
        if n <= S.d:
            raise ValueError("part i needs n > d")
        probe = S.ring.monomial({"X": S.d, "Y": 1}, u) + lowpoly
    elif part == "ii":
        if lowpoly.variables() - {"X", "Y", "Z"}:
            raise ValueError("part ii needs lowpoly in X, Y, Z")
        if lowpoly.degree_in("Y") >= S.s:
            raise ValueError("part ii needs deg_Y(lowpoly) < s")
        if n <= S.e:
            raise ValueError("part ii needs n > e")
        probe = S.ring.monomial({"X": S.e, "T": 1}, u) + lowpoly
    else:
        raise ValueError(f"unknown lemma part {part!r}")
    return S.in_ideal_mod_xn(probe, n, **caps) is None
