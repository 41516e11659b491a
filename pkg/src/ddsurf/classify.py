"""Isomorphism classification between double Danielewski surfaces.

The decision pipeline mirrors the classification theorem: the numeric
invariants (r, s) and then (d, e) are necessary; a candidate isomorphism is
a witness (lambda, gamma, delta(X), f(X,Z)) subject to an exact divisibility
condition on P and a two-sided ideal-equality condition on Q, certified by
explicit cofactors.  A verified witness converts into an explicit generator
map which is independently re-checked before any positive verdict is
emitted.  Over finite fields the witness search is exhaustive (delta need
only be scanned to degree < d+e), so a failed search is a disproof; over
the rationals only candidate scalars are tried and failure is reported as
inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterator, Optional

from .errors import IncompleteWitness, ResourceLimitExceeded
from .fields import Scalar
from .groebner import (
    IdealBasis,
    MembershipCertificate,
    MonomialOrder,
    buchberger,
    ideals_equal,
    is_member,
    is_unit_modulo,
    reduce_full,
)
from .poly import MultiPoly
from .rings import RingMap, MapVerification, surface_ring, verify_ring_map
from .surface import SurfacePresentation

ISOMORPHIC = "ISOMORPHIC"
NOT_ISOMORPHIC = "NOT_ISOMORPHIC"
NO_WITNESS_WITHIN_BOUNDS = "NO_WITNESS_WITHIN_BOUNDS"
OUT_OF_THEOREM_SCOPE = "OUT_OF_THEOREM_SCOPE"


@dataclass
class IsoWitness:
    """The data determining an isomorphism from S2's ring to S1's ring:
    x -> lambda*x, z -> gamma*z + delta(x), y -> nu*y + g(x,z), and a
    t-image read off the forward certificate.

    h_cert expresses Q2(X2,Y2,Z2) against (Q1, G, X^e); h_cert_rev
    expresses Q1 against (Q2(X2,Y2,Z2), G, X^e), where G = P1 - X^d*Y.
    """

    lam: Scalar
    gamma: Scalar
    delta: MultiPoly
    f: MultiPoly
    nu: Scalar
    g: MultiPoly
    h_cert: Optional[MembershipCertificate] = None
    h_cert_rev: Optional[MembershipCertificate] = None

    @property
    def complete(self) -> bool:
        return self.h_cert is not None and self.h_cert_rev is not None

    def sort_key(self):
        return (
            self.lam,
            self.gamma,
            tuple(sorted(self.delta.terms.items())),
            tuple(sorted(self.f.terms.items())),
        )


@dataclass
class SearchParams:
    """Knobs for the witness search.

    delta_bound is the maximum degree of delta searched (inclusive); None
    means the completeness bound d+e-1.  Over infinite fields the scalars
    lambda, gamma range over scalar_candidates (default 1, -1) and delta
    over delta_candidates (default just 0), and the search is then only a
    semi-decision.
    """

    delta_bound: Optional[int] = None
    scalar_candidates: Optional[list] = None
    delta_candidates: Optional[list[MultiPoly]] = None
    max_basis: int = 256
    max_total_degree: int = 80

    def caps(self) -> dict:
        return {"max_basis": self.max_basis, "max_total_degree": self.max_total_degree}


@dataclass
class ClassificationVerdict:
    status: str
    reason: Optional[str] = None
    witness: Optional[IsoWitness] = None
    ring_map: Optional[RingMap] = None
    verification: Optional[MapVerification] = None
    log: list = dc_field(default_factory=list)

    @property
    def isomorphic(self) -> Optional[bool]:
        if self.status == ISOMORPHIC:
            return True
        if self.status == NOT_ISOMORPHIC:
            return False
        return None


def invariant_check(S1: SurfacePresentation, S2: SurfacePresentation) -> Optional[ClassificationVerdict]:
    """Necessary-invariant comparison; None means no objection was found."""
    S1.ensure_valid()
    S2.ensure_valid()
    log = []
    if S1.r <= 1 or S2.r <= 1:
        return ClassificationVerdict(
            OUT_OF_THEOREM_SCOPE,
            reason=f"r must exceed 1 on both sides (got r1={S1.r}, r2={S2.r}); "
            "a presentation with r = 1 is an ordinary Danielewski surface",
            log=log,
        )
    if (S1.r, S1.s) != (S2.r, S2.s):
        return ClassificationVerdict(
            NOT_ISOMORPHIC,
            reason=f"(r, s) invariants differ: ({S1.r}, {S1.s}) vs ({S2.r}, {S2.s})",
            log=log,
        )
    log.append({"step": "rs_invariants", "r": S1.r, "s": S1.s})
    if S1.s == 1:
        sums = (S1.d + S1.e, S2.d + S2.e)
        note = (
            f"s = 1: both presentations are ordinary Danielewski surfaces; the sum d+e "
            f"is a necessary invariant there ({sums[0]} vs {sums[1]}"
            + (", equal)" if sums[0] == sums[1] else ", DIFFERENT)")
        )
        return ClassificationVerdict(OUT_OF_THEOREM_SCOPE, reason=note, log=log)
    if (S1.d, S1.e) != (S2.d, S2.e):
        return ClassificationVerdict(
            NOT_ISOMORPHIC,
            reason=f"(d, e) invariants differ: ({S1.d}, {S1.e}) vs ({S2.d}, {S2.e})",
            log=log,
        )
    log.append({"step": "de_invariants", "d": S1.d, "e": S1.e})
    return None


def _p_difference(S1, S2, lam, gamma, delta: MultiPoly) -> MultiPoly:
    """P2(lambda*X, gamma*Z + delta) - gamma^r * P1."""
    ring = S1.ring
    fld = S1.field
    images = {
        "X": ring.var("X").scale(lam),
        "Z": ring.var("Z").scale(gamma) + delta,
    }
    return S2.P.substitute(images, into=ring) - S1.P.scale(fld.power(gamma, S1.r))


def p_condition_quotient(S1, S2, lam, gamma, delta):
    """(divisible, f): whether X^d divides the P-difference
    P2(lambda*X, gamma*Z + delta) - gamma^r * P1, and the exact quotient
    f(X, Z) when it does."""
    diff = _p_difference(S1, S2, lam, gamma, delta)
    d = S1.d
    if diff.valuation("X") < d:
        return False, None
    ix = S1.ring.index("X")
    shift = tuple(-d if i == ix else 0 for i in range(len(S1.ring.vars)))
    return True, diff.term_mul(S1.field.one, shift)


def iter_p_witnesses(
    S1: SurfacePresentation,
    S2: SurfacePresentation,
    params: SearchParams,
) -> Iterator[tuple]:
    """Yield (lambda, gamma, delta, f) satisfying the P-condition, in
    lexicographic order (lambda, then gamma, then delta's coefficients)."""
    if S1.r != S2.r or S1.r <= 1:
        raise ValueError("the P-condition needs r1 == r2 > 1")
    if S1.d != S2.d:
        raise ValueError("the P-condition needs d1 == d2")
    fld = S1.field
    ring = S1.ring
    d = S1.d
    bound = params.delta_bound if params.delta_bound is not None else S1.d + S1.e - 1

    if fld.is_finite and params.scalar_candidates is None:
        scalars = list(fld.nonzero_elements())
    elif params.scalar_candidates is not None:
        scalars = sorted((fld.coerce(c) for c in params.scalar_candidates), key=fld.scalar_sort_key)
        if any(not c for c in scalars):
            raise ValueError("scalar candidates must be nonzero")
    else:
        raise ValueError(
            "infinite field: supply scalar_candidates (the search cannot enumerate k*)"
        )

    if fld.is_finite and params.delta_candidates is None:
        xvar = ring.var("X")

        def deltas(lam, gamma):
            # depth-first over coefficients; a prefix failing divisibility at
            # x-adic level min(depth, d) admits no extension
            def extend(prefix: MultiPoly, depth: int):
                if depth > bound:
                    ok, f = p_condition_quotient(S1, S2, lam, gamma, prefix)
                    if ok:
                        yield prefix, f
                    return
                for c in fld.elements():
                    cand = prefix + (xvar**depth).scale(c) if c else prefix
                    if depth < d:
                        diff = _p_difference(S1, S2, lam, gamma, cand)
                        if diff.valuation("X") < depth + 1:
                            continue
                    yield from extend(cand, depth + 1)

            yield from extend(ring.zero(), 0)

    else:
        cands = params.delta_candidates if params.delta_candidates is not None else [ring.zero()]
        for c in cands:
            if c.variables() - {"X"}:
                raise ValueError("delta candidates must be polynomials in X only")

        def deltas(lam, gamma):
            for delta in sorted(cands, key=lambda p: sorted(p.terms.items())):
                ok, f = p_condition_quotient(S1, S2, lam, gamma, delta)
                if ok:
                    yield delta, f

    for lam in scalars:
        for gamma in scalars:
            for delta, f in deltas(lam, gamma):
                yield lam, gamma, delta, f


def solve_P_condition(
    S1: SurfacePresentation,
    S2: SurfacePresentation,
    delta_degree_bound: Optional[int] = None,
    scalar_candidates: Optional[list] = None,
    delta_candidates: Optional[list[MultiPoly]] = None,
) -> list[tuple]:
    """All (lambda, gamma, delta, f) with deg(delta) <= bound solving the
    exact P-condition."""
    params = SearchParams(
        delta_bound=delta_degree_bound,
        scalar_candidates=scalar_candidates,
        delta_candidates=delta_candidates,
    )
    return list(iter_p_witnesses(S1, S2, params))


def _q_ideal(S1: SurfacePresentation) -> IdealBasis:
    ring = S1.ring
    return IdealBasis(
        (S1.Q, S1.G(), ring.monomial({"X": S1.e})),
        MonomialOrder(),
    )


def _q_certificates(S1, S2, candidate, gb1=None, **caps):
    """Both membership certificates of the Q ideal-equality condition (the
    shared generators G and X^e need no checking)."""
    lam, gamma, delta, f = candidate
    fld = S1.field
    ring = S1.ring
    nu = fld.mul(fld.power(lam, -S1.d), fld.power(gamma, S1.r))
    g = f.scale(fld.power(lam, -S1.d))
    images = {
        "X": ring.var("X").scale(lam),
        "Z": ring.var("Z").scale(gamma) + delta,
        "Y": ring.var("Y").scale(nu) + g,
    }
    q2s = S2.Q.substitute(images, into=ring)
    if gb1 is None:
        gb1 = buchberger(_q_ideal(S1), **caps)
    forward = is_member(q2s, gb1)
    basis2 = IdealBasis((q2s, S1.G(), ring.monomial({"X": S1.e})), MonomialOrder())
    reverse = is_member(S1.Q, basis2, **caps)
    return nu, g, forward, reverse


def q_condition_memberships(S1, S2, candidate, **caps) -> tuple[bool, bool]:
    """Truth values of the forward and reverse Q-condition memberships."""
    _, _, forward, reverse = _q_certificates(S1, S2, candidate, **caps)
    return forward is not None, reverse is not None


def check_Q_condition(
    S1: SurfacePresentation,
    S2: SurfacePresentation,
    candidate: tuple,
    gb1=None,
    **caps,
) -> Optional[IsoWitness]:
    """Complete a P-condition witness through the two-sided Q ideal check,
    recording both membership certificates."""
    if S1.e != S2.e or S1.s != S2.s or S1.s <= 1:
        raise ValueError("the Q-condition needs e1 == e2 and s1 == s2 > 1")
    lam, gamma, delta, f = candidate
    nu, g, forward, reverse = _q_certificates(S1, S2, candidate, gb1=gb1, **caps)
    if forward is None or reverse is None:
        return None
    return IsoWitness(lam, gamma, delta, f, nu, g, forward, reverse)


def build_isomorphism(S1: SurfacePresentation, S2: SurfacePresentation, w: IsoWitness) -> RingMap:
    """The explicit generator map from S2's coordinate ring to S1's,
    including preimage certificates derived from the reverse certificate."""
    if not w.complete:
        raise IncompleteWitness("witness lacks membership certificates")
    fld = S1.field
    ring = S1.ring
    X, Y, Z, T = (ring.var(v) for v in ("X", "Y", "Z", "T"))
    h1, _, h3 = w.h_cert.cofactors
    images = {
        "X": X.scale(w.lam),
        "Z": Z.scale(w.gamma) + w.delta,
        "Y": Y.scale(w.nu) + w.g,
        "T": (h1 * T + h3).scale(fld.power(w.lam, -S1.e)),
    }
    lam_inv = fld.inv(w.lam)
    pre_x = X.scale(lam_inv)
    pre_z = (Z - w.delta.substitute({"X": pre_x}, into=ring)).scale(fld.inv(w.gamma))
    pre_y = (Y - w.g.substitute({"X": pre_x, "Z": pre_z}, into=ring)).scale(fld.inv(w.nu))
    f1, _, f3 = w.h_cert_rev.cofactors
    back = {"X": pre_x, "Y": pre_y, "Z": pre_z}
    # the reverse certificate evaluated at the target generators gives
    # t = lambda^e * f1 * phi(T) + f3, so lambda^e scales only the T term
    pre_t = f1.substitute(back, into=ring).scale(fld.power(w.lam, S1.e)) * T + f3.substitute(
        back, into=ring
    )
    preimages = {"X": pre_x, "Y": pre_y, "Z": pre_z, "T": pre_t}
    return RingMap(surface_ring(S2), surface_ring(S1), images, preimages)


def decide_isomorphic(
    S1: SurfacePresentation,
    S2: SurfacePresentation,
    params: Optional[SearchParams] = None,
) -> ClassificationVerdict:
    """Full decision pipeline: scope and invariants, then witness search with
    certificate checks, then independent re-verification of the found map."""
    params = params or SearchParams()
    log = []
    objection = invariant_check(S1, S2)
    if objection is not None:
        objection.log = log + objection.log
        return objection
    log.append({"step": "invariants", "r": S1.r, "s": S1.s, "d": S1.d, "e": S1.e})

    effective_bound = params.delta_bound if params.delta_bound is not None else S1.d + S1.e - 1
    complete = (
        S1.field.is_finite
        and params.scalar_candidates is None
        and params.delta_candidates is None
        and effective_bound >= S1.d + S1.e - 1
    )
    tried = 0
    try:
        gb1 = buchberger(_q_ideal(S1), **params.caps())
        for candidate in iter_p_witnesses(S1, S2, params):
            tried += 1
            witness = check_Q_condition(S1, S2, candidate, gb1=gb1, **params.caps())
            if witness is None:
                continue
            ring_map = build_isomorphism(S1, S2, witness)
            verification = verify_ring_map(ring_map, target_equal=S1.equal_in_B)
            log.append(
                {
                    "step": "witness_found",
                    "lambda": str(witness.lam),
                    "gamma": str(witness.gamma),
                    "delta": str(witness.delta),
                    "f": str(witness.f),
                    "reverified": verification.is_isomorphism_certified,
                }
            )
            if not verification.is_isomorphism_certified:
                # construction bug guard: never emit an unverified positive
                continue
            return ClassificationVerdict(
                ISOMORPHIC,
                witness=witness,
                ring_map=ring_map,
                verification=verification,
                log=log,
            )
    except ResourceLimitExceeded as exc:
        log.append({"step": "resource_limit", "detail": str(exc)})
        return ClassificationVerdict(
            NO_WITNESS_WITHIN_BOUNDS,
            reason=f"search aborted by resource cap: {exc}",
            log=log,
        )
    log.append({"step": "search_exhausted", "candidates_tried": tried, "complete": complete})
    if complete:
        return ClassificationVerdict(
            NOT_ISOMORPHIC,
            reason=(
                "exhaustive witness search failed: no (lambda, gamma, delta) with "
                f"deg(delta) <= {effective_bound} satisfies both the P-condition and "
                "the Q ideal equality, which the classification theorem makes conclusive"
            ),
            log=log,
        )
    return ClassificationVerdict(
        NO_WITNESS_WITHIN_BOUNDS,
        reason="witness search over the supplied candidates was exhausted without success; "
        "this is not a disproof",
        log=log,
    )


# -- automorphism checks -------------------------------------------------------


@dataclass
class CheckResult:
    passed: bool
    evidence: str = ""


@dataclass
class AutomorphismReport:
    well_defined: bool
    lam: Optional[Scalar] = None
    checks: dict = dc_field(default_factory=dict)

    @property
    def all_passed(self) -> bool:
        return self.well_defined and all(c.passed for c in self.checks.values())


def _shape_scalar_plus(poly: MultiPoly, var: str, allowed: set[str]):
    """Match poly == c*var + rest with c nonzero and rest supported on
    `allowed`; returns (c, rest) or None."""
    ring = poly.ring
    c = poly.coeff({var: 1})
    if not c:
        return None
    rest = poly - ring.var(var).scale(c)
    if rest.variables() - allowed:
        return None
    if rest.degree_in(var) >= 1:
        return None
    return c, rest


def verify_automorphism(S: SurfacePresentation, m: RingMap) -> AutomorphismReport:
    """Run the six structural checks an automorphism of the coordinate ring
    must satisfy (shape of the images of x, z, y; stability of the two
    graded ideals; and the unit condition on the t-image).

    The shape checks (i), (ii), (iv) are syntactic and always evaluated;
    the ideal-theoretic checks (iii), (v), (vi) presuppose a well-defined
    endomorphism and are skipped otherwise.
    """
    S.ensure_valid()
    if S.r < 2 or S.s < 2:
        raise ValueError("automorphism checks require r >= 2 and s >= 2")
    ring = S.ring
    report = AutomorphismReport(well_defined=False)
    ok_y = S.is_zero_in_B(m.apply(S.relation_y()))
    ok_t = S.is_zero_in_B(m.apply(S.relation_t()))
    report.well_defined = ok_y and ok_t

    psi = m.images
    # (ii) psi(x) = lambda * x
    lam = psi["X"].coeff({"X": 1})
    ii_ok = bool(lam) and psi["X"] == ring.var("X").scale(lam)
    report.checks["ii"] = CheckResult(
        ii_ok, f"psi(X) = {psi['X']}" + ("" if ii_ok else " is not a nonzero scalar multiple of X")
    )
    if ii_ok:
        report.lam = lam

    # (i) psi(z) = gamma*z + delta(x) together with (ii) pins psi on k[x,z]
    z_shape = _shape_scalar_plus(psi["Z"], "Z", {"X"})
    i_ok = ii_ok and z_shape is not None
    report.checks["i"] = CheckResult(i_ok, f"psi(Z) = {psi['Z']}")

    # (iv) psi(y) = nu*y + g(x,z)
    y_shape = _shape_scalar_plus(psi["Y"], "Y", {"X", "Z"})
    report.checks["iv"] = CheckResult(y_shape is not None, f"psi(Y) = {psi['Y']}")

    if not report.well_defined:
        report.checks["well_defined"] = CheckResult(
            False,
            f"defining relations map to zero: first={ok_y}, second={ok_t}; "
            "ideal checks skipped",
        )
        return report

    # (iii) the ideal (x^d, P) of k[x,z] is psi-stable
    xd = ring.monomial({"X": S.d})
    psi_xz = {"X": psi["X"], "Z": psi["Z"]}
    p_image = S.P.substitute(psi_xz, into=ring)
    iii_ok = ideals_equal(
        IdealBasis((xd, S.P), MonomialOrder()),
        IdealBasis((psi["X"] ** S.d, p_image), MonomialOrder()),
    )
    report.checks["iii"] = CheckResult(iii_ok, f"psi-image generators: {psi['X']**S.d}, {p_image}")

    # (v) the ideal (x^e, Q) of k[x,y,z] is psi-stable, computed with the
    # first relation G adjoined since k[x,y,z] = k[X,Y,Z]/(G)
    G = S.G()
    xe = ring.monomial({"X": S.e})
    q_image = S.Q.substitute({"X": psi["X"], "Y": psi["Y"], "Z": psi["Z"]}, into=ring)
    v_ok = ideals_equal(
        IdealBasis((xe, S.Q, G), MonomialOrder()),
        IdealBasis((psi["X"] ** S.e, q_image, G), MonomialOrder()),
    )
    report.checks["v"] = CheckResult(v_ok, f"psi-image generators: {psi['X']**S.e}, {q_image}")

    # (vi) psi(t) = f*t + g with f a unit modulo (x^e); f is the Q-cofactor
    # of the certificate for psi(Q) in (Q, G, X^e)
    cert = is_member(q_image, _q_ideal(S))
    if cert is None:
        report.checks["vi"] = CheckResult(False, "psi(Q) is not in (Q, G, X^e)")
    else:
        f1 = cert.cofactors[0]
        inv = is_unit_modulo(f1, IdealBasis((S.relation_y(), xe), MonomialOrder()))
        report.checks["vi"] = CheckResult(
            inv is not None,
            f"t-coefficient {f1} "
            + (f"has inverse {inv} modulo (X^d*Y - P, X^e)" if inv is not None else "is not a unit"),
        )
    return report
