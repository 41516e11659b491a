"""Seeded construction of isomorphic surface pairs.

Given a surface and a witness (lambda, gamma, delta, f), the partner surface
is built so that the P-condition holds exactly (pull the transformed P back
through the inverse coordinate change) and the Q ideal-equality holds with a
planted unit cofactor of the form 1 + X^d*a(X), which is invertible modulo
(G, X^e) because X^d*a is nilpotent there.  Classification on such a pair
must come back ISOMORPHIC; the round-trip exercises the whole pipeline.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .fields import Field
from .poly import MultiPoly, PolyRing
from .surface import SURFACE_VARS, SurfacePresentation


def _random_poly(rng: random.Random, ring: PolyRing, bounds: dict[str, int], terms: int) -> MultiPoly:
    """A random polynomial with up to `terms` extra monomials inside the box."""
    fld = ring.field
    out = ring.zero()
    for _ in range(terms):
        exps = {v: rng.randrange(b + 1) for v, b in bounds.items()}
        coeff = rng.randrange(fld.p)
        out = out + ring.monomial(exps, coeff)
    return out


def random_surface(
    rng: random.Random,
    field: Field,
    d: int,
    e: int,
    r: int,
    s: int,
    xdeg: int = 2,
) -> SurfacePresentation:
    """A valid presentation with prescribed (d, e, r, s); P and Q are monic
    leading terms plus a few random lower-order terms."""
    ring = PolyRing(field, SURFACE_VARS)
    P = ring.monomial({"Z": r})
    P = P + _random_poly(rng, ring, {"X": xdeg, "Z": r - 1}, terms=2)
    Q = ring.monomial({"Y": s})
    Q = Q + _random_poly(rng, ring, {"X": xdeg, "Y": s - 1, "Z": 2}, terms=2)
    return SurfacePresentation(field, d, e, P, Q)


@dataclass
class PlantedPair:
    S1: SurfacePresentation
    S2: SurfacePresentation
    lam: object
    gamma: object
    delta: MultiPoly
    f: MultiPoly


def derive_isomorphic_partner(
    rng: random.Random,
    S1: SurfacePresentation,
    lam=None,
    gamma=None,
    delta: MultiPoly | None = None,
    f: MultiPoly | None = None,
) -> PlantedPair:
    """Build S2 isomorphic to S1 through the given (or random) witness."""
    S1.ensure_valid()
    fld = S1.field
    ring = S1.ring
    d, e, r, s = S1.d, S1.e, S1.r, S1.s
    if r < 2 or s < 2:
        raise ValueError("pair synthesis needs r >= 2 and s >= 2")
    lam = fld.coerce(rng.randrange(1, fld.p) if lam is None else lam)
    gamma = fld.coerce(rng.randrange(1, fld.p) if gamma is None else gamma)
    if delta is None:
        delta = _random_poly(rng, ring, {"X": d + e - 1}, terms=2)
    if f is None:
        f = _random_poly(rng, ring, {"X": 2, "Z": r - 1}, terms=2)

    nu = fld.mul(fld.power(lam, -d), fld.power(gamma, r))
    g = f.scale(fld.power(lam, -d))

    # inverse coordinate change: the forward images composed with these are
    # the identity, so substituting into the pulled-back polynomials makes
    # the defining conditions hold on the nose
    lam_inv = fld.inv(lam)
    pre_x = ring.var("X").scale(lam_inv)
    pre_z = (ring.var("Z") - delta.substitute({"X": pre_x}, into=ring)).scale(fld.inv(gamma))
    pre_y = (ring.var("Y") - g.substitute({"X": pre_x, "Z": pre_z}, into=ring)).scale(fld.inv(nu))
    back_xz = {"X": pre_x, "Z": pre_z}
    back_xyz = {"X": pre_x, "Y": pre_y, "Z": pre_z}

    P2 = (S1.P.scale(fld.power(gamma, r)) + f.term_mul(fld.one, _xshift(ring, d))).substitute(
        back_xz, into=ring
    )

    G = S1.G()
    a = _random_poly(rng, ring, {"X": 2}, terms=2)
    h1 = ring.one() + a.term_mul(fld.one, _xshift(ring, d))
    h2 = a * ring.monomial({"Y": s - 1}) + _random_poly(rng, ring, {"X": 1, "Y": s - 2, "Z": 1}, terms=2)
    h3 = _random_poly(rng, ring, {"X": 1, "Y": s - 1, "Z": 1}, terms=2)
    W = h1 * S1.Q + h2 * G + h3 * ring.monomial({"X": e})
    Q2 = W.substitute(back_xyz, into=ring).scale(fld.power(nu, s))

    S2 = SurfacePresentation(fld, d, e, P2, Q2)
    S2.validate()
    return PlantedPair(S1, S2, lam, gamma, delta, f)


def _xshift(ring: PolyRing, d: int) -> tuple:
    ix = ring.index("X")
    return tuple(d if i == ix else 0 for i in range(len(ring.vars)))


def random_planted_pair(seed: int, field: Field | None = None) -> PlantedPair:
    """One seeded random (S1, S2, witness) instance over F3 or F5."""
    rng = random.Random(seed)
    if field is None:
        field = Field(rng.choice([3, 5]))
    d = rng.choice([1, 2, 3])
    e = rng.choice([1, 2, 3])
    r = rng.choice([2, 3])
    s = rng.choice([2, 3])
    S1 = random_surface(rng, field, d, e, r, s)
    return derive_isomorphic_partner(rng, S1)
