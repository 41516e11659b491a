"""Named worked-example cases, each re-derived through public operations.

Every case builds its inputs from scratch, runs the public pipeline and
compares against the expected outcome, so the suite doubles as the golden
acceptance layer.  Case names are stable CLI identifiers.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .classify import (
    ISOMORPHIC,
    OUT_OF_THEOREM_SCOPE,
    SearchParams,
    decide_isomorphic,
    invariant_check,
)
from .fields import GF, QQ, Field
from .parse import parse_poly
from .poly import PolyRing
from .rings import RingMap, RingPresentation, surface_ring, verify_ring_map
from .surface import SurfacePresentation, lemma1_oracle, lemma2_oracle
from .synth import random_planted_pair


@dataclass
class CaseReport:
    name: str
    status: str  # "pass" | "fail" | "out-of-scope"
    details: list[str] = dc_field(default_factory=list)
    evidence: dict = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "details": list(self.details),
            "evidence": self.evidence,
        }


def _expect(report: CaseReport, condition: bool, label: str):
    report.details.append(("ok: " if condition else "FAIL: ") + label)
    if not condition:
        report.status = "fail"


def _surface(field: Field, d: int, e: int, p_txt: str, q_txt: str) -> SurfacePresentation:
    ring = PolyRing(field)
    return SurfacePresentation(field, d, e, parse_poly(p_txt, ring), parse_poly(q_txt, ring))


def _presentation(field: Field, vars: tuple[str, ...], relations: list[str]) -> RingPresentation:
    ring = PolyRing(field, vars)
    return RingPresentation(ring, tuple(parse_poly(t, ring) for t in relations))


def _map(source: RingPresentation, target: RingPresentation, images: dict[str, str],
         preimages: dict[str, str] | None) -> RingMap:
    imgs = {v: parse_poly(t, target.ring) for v, t in images.items()}
    pres = None
    if preimages is not None:
        pres = {v: parse_poly(t, source.ring) for v, t in preimages.items()}
    return RingMap(source, target, imgs, pres)


def _check_map(report: CaseReport, m: RingMap, label: str, target_equal=None):
    ver = verify_ring_map(m, target_equal=target_equal)
    _expect(report, ver.relations_preserved, f"{label}: relations map to zero")
    _expect(report, ver.surjective is True, f"{label}: all target generators hit")
    report.evidence[label] = ver.to_json()
    return ver


def case_remark_i() -> CaseReport:
    """Degenerate r = 1: the presentation collapses to a single-relation
    Danielewski surface, and the exponent d is not an invariant."""
    report = CaseReport("remark-i", "pass")
    S = _surface(QQ, 2, 1, "Z", "Y^4")
    rep = S.validate()
    _expect(report, not rep.theorem_I_applicable, "r = 1 puts the surface out of theorem scope")
    _expect(report, any("Danielewski" in n for n in rep.notes), "validation warns about r = 1")
    report.evidence["applicability"] = rep.to_json()

    three = _presentation(QQ, ("X", "Y", "T"), ["X*T - Y^4"])
    alpha = _map(surface_ring(S), three,
                 {"X": "X", "Y": "Y", "Z": "X^2*Y", "T": "T"},
                 {"X": "X", "Y": "Y", "T": "T"})
    _check_map(report, alpha, "collapse Z -> X^2*Y onto the three-variable ring")

    S4 = _surface(QQ, 4, 1, "Z", "Y^4")
    beta = _map(surface_ring(S4), surface_ring(S),
                {"X": "X", "Y": "Y", "Z": "X^2*Z", "T": "T"},
                {"X": "X", "Y": "Y", "Z": "X^2*Y", "T": "T"})
    _check_map(report, beta, "d = 4 presentation onto d = 2 via Z -> X^2*Z",
               target_equal=S.equal_in_B)
    return report


def case_remark_ii() -> CaseReport:
    """Degenerate s = 1: two presentations with different d collapse onto the
    same Danielewski ring; only d + e survives as an invariant."""
    report = CaseReport("remark-ii", "pass")
    S1 = _surface(QQ, 1, 2, "Z^2", "Y")
    S2 = _surface(QQ, 2, 1, "Z^2", "Y")
    dan = _presentation(QQ, ("X", "Z", "T"), ["X^3*T - Z^2"])

    mu1 = _map(surface_ring(S1), dan,
               {"X": "X", "Y": "X^2*T", "Z": "Z", "T": "T"},
               {"X": "X", "Z": "Z", "T": "T"})
    _check_map(report, mu1, "d=1,e=2 presentation onto the X^3*T - Z^2 ring")

    mu2 = _map(surface_ring(S2), dan,
               {"X": "X", "Y": "X*T", "Z": "Z", "T": "T"},
               {"X": "X", "Z": "Z", "T": "T"})
    _check_map(report, mu2, "d=2,e=1 presentation onto the X^3*T - Z^2 ring")

    verdict = invariant_check(S1, S2)
    _expect(report, verdict is not None and verdict.status == OUT_OF_THEOREM_SCOPE,
            "s = 1 pair is reported out of theorem scope")
    _expect(report, verdict is not None and "equal" in (verdict.reason or ""),
            "the advisory records d1+e1 = d2+e2 = 3")
    report.evidence["advisory"] = verdict.reason if verdict else None
    return report


def case_remark_iii() -> CaseReport:
    """Mixed degeneration: an r = 1 surface and an s = 1 surface both reduce
    to the same three-variable ring, so they are isomorphic to each other."""
    report = CaseReport("remark-iii", "pass")
    A = _surface(QQ, 2, 4, "Z", "Y^2")     # r = 1, s = 2
    B = _surface(QQ, 2, 2, "Z^2", "Y")     # r = 2, s = 1
    dan = _presentation(QQ, ("X", "Y", "T"), ["X^4*T - Y^2"])

    nu1 = _map(surface_ring(A), dan,
               {"X": "X", "Y": "Y", "Z": "X^2*Y", "T": "T"},
               {"X": "X", "Y": "Y", "T": "T"})
    _check_map(report, nu1, "r=1 surface collapses onto X^4*T - Y^2")

    nu2 = _map(surface_ring(B), dan,
               {"X": "X", "Y": "X^2*T", "Z": "Y", "T": "T"},
               {"X": "X", "Y": "Z", "T": "T"})
    _check_map(report, nu2, "s=1 surface collapses onto X^4*T - Y^2")
    return report


def case_remark_iv() -> CaseReport:
    """r = s = 1 gives a polynomial ring by the linear-plane theorem; the
    explicit plane coordinates are not constructed here."""
    return CaseReport(
        "remark-iv",
        "out-of-scope",
        details=[
            "with r = s = 1 the coordinate ring is a polynomial ring in two variables; "
            "constructing the coordinates needs linear-plane machinery that is out of scope"
        ],
    )


def case_remark_v() -> CaseReport:
    """The headline pair: same (d, e, P) but different Q, isomorphic through
    a t-image with the non-obvious unit 1 + X^3."""
    report = CaseReport("remark-v", "pass")
    B1 = _surface(QQ, 2, 4, "Z^2", "Y^2")
    B2 = _surface(QQ, 2, 4, "Z^2", "Y^2 - X*Y*Z^2")

    phi = _map(surface_ring(B1), surface_ring(B2),
               {"X": "X", "Y": "Y", "Z": "Z", "T": "(1 + X^3)*T + Y*Z^2"},
               {"X": "X", "Y": "Y", "Z": "Z", "T": "(1 - X^3)*T"})
    _check_map(report, phi, "phi with t -> (1+x^3)t + y*z^2", target_equal=B2.equal_in_B)
    hit = phi.apply(parse_poly("(1 - X^3)*T", B1.ring))
    _expect(report, B2.equal_in_B(hit, B2.ring.var("T")),
            "phi((1 - x^3) t) equals t in the target ring")
    report.evidence["preimage_image"] = str(hit)

    verdict = decide_isomorphic(B1, B2, SearchParams(scalar_candidates=[1, -1]))
    _expect(report, verdict.status == ISOMORPHIC, "classification finds the isomorphism")
    if verdict.witness is not None:
        unit = verdict.witness.h_cert.cofactors[0]
        report.evidence["t_unit"] = str(unit)
        _expect(report, unit.total_degree() == 3, "the t-image carries a degree-3 unit")
    return report


def _lemma2_instances(field: Field):
    """A deterministic batch of nonvanishing-lemma instances with s > 1."""
    ring = PolyRing(field)
    surfaces = [
        _surface(field, 2, 4, "Z^2", "Y^2"),
        _surface(field, 1, 2, "Z^2", "Y^2"),
        _surface(field, 2, 1, "Z^2 + Z", "Y^3"),
        _surface(field, 1, 1, "Z^3", "Y^2"),
    ]
    instances = []
    for S in surfaces:
        for low in ("0", "1", "X", "Z", "X*Z"):
            p = parse_poly(low, ring)
            if p.degree_in("Z") < S.r:
                instances.append((S, "i", p, S.d + 1))
        for low in ("0", "1", "Y", "X*Y", "Y*Z"):
            p = parse_poly(low, ring)
            if p.degree_in("Y") < S.s:
                instances.append((S, "ii", p, S.e + 1))
    return instances


def case_lemma_sweeps() -> CaseReport:
    """Exhaustive divisibility-lemma sweep plus a batch of nonvanishing
    instances, all over F2."""
    report = CaseReport("lemma-sweeps", "pass")
    f2 = GF(2)
    ring = PolyRing(f2)
    total = 0
    for p_txt in ("Z^2", "Z^2 + Z", "Z^3"):
        for d in (1, 2):
            bad = lemma1_oracle(parse_poly(p_txt, ring), d)
            total += len(bad)
            _expect(report, not bad, f"divisibility lemma sweep P={p_txt}, d={d}")
    report.evidence["lemma1_counterexamples"] = total

    instances = _lemma2_instances(f2)
    confirmed = 0
    for S, part, low, n in instances:
        ok = lemma2_oracle(S, part, 1, low, n)
        confirmed += ok
        if not ok:
            _expect(report, False, f"nonvanishing failed: part {part}, low={low}, n={n} on {S}")
    _expect(report, confirmed == len(instances) and len(instances) >= 20,
            f"all {len(instances)} nonvanishing instances confirmed")
    report.evidence["lemma2_instances"] = len(instances)
    return report


def case_theorem_roundtrip(seed: int = 2026) -> CaseReport:
    """One seeded random isomorphic pair pushed through the full decision
    pipeline; the emitted map is re-verified independently."""
    report = CaseReport("theorem-roundtrip", "pass")
    pair = random_planted_pair(seed)
    verdict = decide_isomorphic(pair.S1, pair.S2)
    _expect(report, verdict.status == ISOMORPHIC, "constructed pair classified isomorphic")
    if verdict.ring_map is not None:
        ver = verify_ring_map(verdict.ring_map, target_equal=pair.S1.equal_in_B)
        _expect(report, ver.is_isomorphism_certified, "emitted map re-verifies")
    report.evidence["surface_1"] = str(pair.S1)
    report.evidence["surface_2"] = str(pair.S2)
    if verdict.witness is not None:
        report.evidence["witness"] = {
            "lambda": str(verdict.witness.lam),
            "gamma": str(verdict.witness.gamma),
            "delta": str(verdict.witness.delta),
            "f": str(verdict.witness.f),
        }
    return report


CASES = {
    "remark-i": case_remark_i,
    "remark-ii": case_remark_ii,
    "remark-iii": case_remark_iii,
    "remark-iv": case_remark_iv,
    "remark-v": case_remark_v,
    "lemma-sweeps": case_lemma_sweeps,
    "theorem-roundtrip": case_theorem_roundtrip,
}


def run_example(name: str, seed: int | None = None) -> CaseReport:
    if name not in CASES:
        raise KeyError(f"unknown example case {name!r}; known: {sorted(CASES)}")
    if name == "theorem-roundtrip" and seed is not None:
        return case_theorem_roundtrip(seed)
    return CASES[name]()


def run_all(seed: int | None = None) -> list[CaseReport]:
    return [run_example(name, seed=seed) for name in CASES]
