"""Command-line interface.

Exit codes: 0 affirmative/pass, 1 negative/fail (always with attached
disproof evidence), 2 inconclusive (bounds, resources, or out of theorem
scope), 3 input error.  Reports are JSON on stdout with sorted keys, so
identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jsonio
from .classify import (
    ISOMORPHIC,
    NOT_ISOMORPHIC,
    SearchParams,
    build_isomorphism,
    check_Q_condition,
    decide_isomorphic,
    p_condition_quotient,
    verify_automorphism,
)
from .errors import DdsurfError, ResourceLimitExceeded
from .examples import CASES, run_example
from .groebner import MonomialOrder, buchberger, is_member
from .parse import parse_poly, parse_scalar
from .rings import RingMap, surface_ring, verify_ring_map
from .surface import lemma1_oracle, lemma2_oracle

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_INPUT = 3


def _load(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _caps(args) -> dict:
    return {"max_basis": args.max_basis, "max_total_degree": args.max_degree}


def _parse_bounds(text: str) -> dict[str, int]:
    out = {}
    for chunk in text.split(","):
        name, _, value = chunk.partition("=")
        out[name.strip()] = int(value)
    return out


def cmd_validate(args):
    S = jsonio.surface_from_json(_load(args.surface))
    report = S.validate()
    return EXIT_PASS, {"surface": jsonio.surface_to_json(S), "report": report.to_json()}


def cmd_nf(args):
    S = jsonio.surface_from_json(_load(args.surface))
    S.ensure_valid()
    p = parse_poly(args.poly, S.ring)
    return EXIT_PASS, {"poly": str(p), "laurent_nf": str(S.laurent_nf(p))}


def cmd_gb(args):
    basis = jsonio.ideal_from_json(_load(args.ideal))
    if args.order:
        basis = type(basis)(basis.generators, MonomialOrder(args.order))
    gb = buchberger(basis, **_caps(args))
    return EXIT_PASS, {
        "ideal": jsonio.ideal_to_json(basis),
        "elements": [str(g) for g in gb.elements],
        "transform": [[str(c) for c in row] for row in gb.transform],
    }


def cmd_member(args):
    obj = _load(args.file)
    if jsonio.looks_like_surface(obj):
        S = jsonio.surface_from_json(obj)
        if args.n is None:
            return EXIT_INPUT, {"error": "membership against a surface needs --n"}
        p = parse_poly(args.poly, S.ring)
        basis = S.mod_xn_basis(args.n)
        cert = S.in_ideal_mod_xn(p, args.n, **_caps(args))
    else:
        basis = jsonio.ideal_from_json(obj)
        p = parse_poly(args.poly, basis.ring)
        cert = is_member(p, basis, **_caps(args))
    report = {"poly": str(p), "ideal": jsonio.ideal_to_json(basis), "member": cert is not None}
    if cert is not None:
        report["certificate"] = jsonio.certificate_to_json(cert)
        return EXIT_PASS, report
    report["evidence"] = "Groebner normal form is nonzero; non-membership is proven"
    return EXIT_FAIL, report


def cmd_iso_check(args):
    S1 = jsonio.surface_from_json(_load(args.surface1))
    S2 = jsonio.surface_from_json(_load(args.surface2))
    S1.ensure_valid()
    S2.ensure_valid()
    lam, gamma, delta, f_given = jsonio.witness_candidate_from_json(_load(args.witness), S1)
    report: dict = {
        "surface_1": jsonio.surface_to_json(S1),
        "surface_2": jsonio.surface_to_json(S2),
        "candidate": {"lambda": str(lam), "gamma": str(gamma), "delta": str(delta)},
    }
    ok, f = p_condition_quotient(S1, S2, lam, gamma, delta)
    if not ok:
        report["failure"] = "X^d does not divide P2(lambda*X, gamma*Z + delta) - gamma^r*P1"
        return EXIT_FAIL, report
    if f_given is not None and f_given != f:
        report["failure"] = f"supplied f = {f_given} disagrees with the exact quotient {f}"
        return EXIT_FAIL, report
    witness = check_Q_condition(S1, S2, (lam, gamma, delta, f), **_caps(args))
    if witness is None:
        report["failure"] = "the Q ideal-equality condition fails for this candidate"
        return EXIT_FAIL, report
    ring_map = build_isomorphism(S1, S2, witness)
    ver = verify_ring_map(ring_map, target_equal=S1.equal_in_B)
    report["witness"] = jsonio.witness_to_json(witness)
    report["map"] = jsonio.ringmap_to_json(ring_map)
    report["verification"] = ver.to_json()
    if not ver.is_isomorphism_certified:
        report["failure"] = "constructed map failed re-verification"
        return EXIT_FAIL, report
    return EXIT_PASS, report


def cmd_iso_search(args):
    S1 = jsonio.surface_from_json(_load(args.surface1))
    S2 = jsonio.surface_from_json(_load(args.surface2))
    candidates = None
    if args.candidates:
        candidates = [parse_scalar(c, S1.field) for c in args.candidates.split(",")]
    params = SearchParams(
        delta_bound=args.delta_bound,
        scalar_candidates=candidates,
        max_basis=args.max_basis,
        max_total_degree=args.max_degree,
    )
    verdict = decide_isomorphic(S1, S2, params)
    report = {
        "surface_1": jsonio.surface_to_json(S1),
        "surface_2": jsonio.surface_to_json(S2),
        "verdict": jsonio.verdict_to_json(verdict),
    }
    if verdict.status == ISOMORPHIC:
        return EXIT_PASS, report
    if verdict.status == NOT_ISOMORPHIC:
        return EXIT_FAIL, report
    return EXIT_INCONCLUSIVE, report


def cmd_map_verify(args):
    m = jsonio.ringmap_from_json(_load(args.map))
    ver = verify_ring_map(m)
    report = {"map": jsonio.ringmap_to_json(m), "verification": ver.to_json()}
    if ver.is_isomorphism_certified:
        return EXIT_PASS, report
    if not ver.relations_preserved or ver.surjective is False:
        return EXIT_FAIL, report
    report["note"] = "well-defined and relations-preserving; surjectivity unverified"
    return EXIT_INCONCLUSIVE, report


def cmd_auto_verify(args):
    S = jsonio.surface_from_json(_load(args.surface))
    S.ensure_valid()
    obj = _load(args.map)
    if set(obj) == {"images"}:
        pres = surface_ring(S)
        m = RingMap(pres, pres, {v: parse_poly(t, S.ring) for v, t in obj["images"].items()})
    else:
        m = jsonio.ringmap_from_json(obj)
    report_obj = verify_automorphism(S, m)
    report = {
        "surface": jsonio.surface_to_json(S),
        "well_defined": report_obj.well_defined,
        "lambda": None if report_obj.lam is None else str(report_obj.lam),
        "checks": {
            name: {"passed": c.passed, "evidence": c.evidence}
            for name, c in report_obj.checks.items()
        },
    }
    return (EXIT_PASS if report_obj.all_passed else EXIT_FAIL), report


def cmd_lemma1(args):
    fld = jsonio.parse_field_flag(args.field)
    from .poly import PolyRing

    ring = PolyRing(fld)
    P = parse_poly(args.P, ring)
    g_bounds = _parse_bounds(args.bounds) if args.bounds else None
    counterexamples = lemma1_oracle(P, args.d, g_bounds=g_bounds)
    report = {
        "P": str(P),
        "d": args.d,
        "field": fld.to_json(),
        "counterexamples": counterexamples,
    }
    return (EXIT_PASS if not counterexamples else EXIT_FAIL), report


def cmd_lemma2(args):
    S = jsonio.surface_from_json(_load(args.surface))
    S.ensure_valid()
    u = parse_scalar(args.u, S.field)
    lowpoly = parse_poly(args.lowpoly, S.ring)
    confirmed = lemma2_oracle(S, args.part, u, lowpoly, args.n, **_caps(args))
    report = {
        "surface": jsonio.surface_to_json(S),
        "part": args.part,
        "u": str(u),
        "lowpoly": str(lowpoly),
        "n": args.n,
        "nonvanishing_confirmed": confirmed,
    }
    if confirmed:
        return EXIT_PASS, report
    cert = S.in_ideal_mod_xn(
        S.ring.monomial({"X": S.d, "Y": 1}, u) + lowpoly
        if args.part == "i"
        else S.ring.monomial({"X": S.e, "T": 1}, u) + lowpoly,
        args.n,
    )
    report["membership_certificate"] = jsonio.certificate_to_json(cert) if cert else None
    return EXIT_FAIL, report


def cmd_examples(args):
    names = [args.name] if args.name else list(CASES)
    reports = [run_example(n, seed=args.seed) for n in names]
    payload = {"cases": [r.to_json() for r in reports]}
    if any(r.status == "fail" for r in reports):
        return EXIT_FAIL, payload
    if len(reports) == 1 and reports[0].status == "out-of-scope":
        return EXIT_INCONCLUSIVE, payload
    return EXIT_PASS, payload


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ddsurf",
        description="Exact classification of double Danielewski surfaces: "
        "isomorphism decisions with certificates, automorphism checks, and "
        "executable lemma sweeps.",
    )
    ap.add_argument("--json-out", metavar="PATH", help="also write the JSON report to PATH")
    ap.add_argument("--max-basis", type=int, default=256, help="Groebner basis size cap")
    ap.add_argument("--max-degree", type=int, default=80, help="Groebner total-degree cap")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a surface presentation")
    p.add_argument("surface")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("nf", help="Laurent normal form of a polynomial in the coordinate ring")
    p.add_argument("surface")
    p.add_argument("--poly", required=True)
    p.set_defaults(run=cmd_nf)

    p = sub.add_parser("gb", help="Groebner basis with transform")
    p.add_argument("ideal")
    p.add_argument("--order", choices=["lex", "grevlex"])
    p.set_defaults(run=cmd_gb)

    p = sub.add_parser("member", help="certificate-producing ideal membership")
    p.add_argument("file", help="ideal JSON, or surface JSON with --n")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=int, help="adjoin X^n to a surface's relation ideal")
    p.set_defaults(run=cmd_member)

    p = sub.add_parser("iso-check", help="verify an explicit isomorphism witness")
    p.add_argument("surface1")
    p.add_argument("surface2")
    p.add_argument("--witness", required=True)
    p.set_defaults(run=cmd_iso_check)

    p = sub.add_parser("iso-search", help="decide isomorphism by witness search")
    p.add_argument("surface1")
    p.add_argument("surface2")
    p.add_argument("--delta-bound", type=int)
    p.add_argument("--candidates", help="comma-separated scalars for lambda and gamma")
    p.set_defaults(run=cmd_iso_search)

    p = sub.add_parser("map-verify", help="verify a presented-ring homomorphism")
    p.add_argument("map")
    p.set_defaults(run=cmd_map_verify)

    p = sub.add_parser("auto-verify", help="run the automorphism checks")
    p.add_argument("surface")
    p.add_argument("map")
    p.set_defaults(run=cmd_auto_verify)

    p = sub.add_parser("lemma1", help="exhaustive divisibility-lemma sweep")
    p.add_argument("--P", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--field", default="Fp:2")
    p.add_argument("--bounds", help="per-variable degree bounds, e.g. X=2,Y=0,Z=2")
    p.set_defaults(run=cmd_lemma1)

    p = sub.add_parser("lemma2", help="confirm one nonvanishing-lemma instance")
    p.add_argument("surface")
    p.add_argument("--part", choices=["i", "ii"], required=True)
    p.add_argument("--u", default="1")
    p.add_argument("--lowpoly", default="0")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(run=cmd_lemma2)

    p = sub.add_parser("examples", help="run the named example cases")
    p.add_argument("name", nargs="?", choices=sorted(CASES))
    p.add_argument("--seed", type=int)
    p.set_defaults(run=cmd_examples)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, report = args.run(args)
    except ResourceLimitExceeded as exc:
        code, report = EXIT_INCONCLUSIVE, {"error": str(exc), "kind": "resource-limit"}
    except (DdsurfError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        code, report = EXIT_INPUT, {"error": str(exc), "kind": type(exc).__name__}
    text = json.dumps(report, indent=2, sort_keys=True)
    print(text)
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
