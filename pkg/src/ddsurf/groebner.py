"""Buchberger's algorithm with cofactor tracking.

Every Groebner basis element carries a transform row expressing it as an
exact combination of the original generators, so ideal-membership answers
come with checkable certificates stated against the user's generators.
Pair handling uses the normal selection strategy with Gebauer-Moeller
elimination; configurable caps turn runaway growth into an explicit
resource error rather than a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Optional, Sequence

from .errors import FieldMismatch, ResourceLimitExceeded
from .poly import MultiPoly, PolyRing

DEFAULT_MAX_BASIS = 256
DEFAULT_MAX_TOTAL_DEGREE = 80


@dataclass(frozen=True)
class MonomialOrder:
    """A term order: lex or grevlex over a variable precedence list.

    precedence lists variables from most to least significant; when omitted
    it defaults to the ring's variables with X demoted to least significant,
    which keeps the leading terms of X^d*Y - P and X^e*T - Q controlled by
    Y and T for the structured ideals handled here.
    """

    kind: str = "grevlex"
    precedence: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")

    def effective_precedence(self, ring: PolyRing) -> tuple[str, ...]:
        if self.precedence is not None:
            if set(self.precedence) != set(ring.vars):
                raise ValueError(
                    f"order precedence {self.precedence} does not match ring vars {ring.vars}"
                )
            return self.precedence
        if "X" in ring.vars:
            return tuple(v for v in ring.vars if v != "X") + ("X",)
        return ring.vars

    def key_function(self, ring: PolyRing) -> Callable[[tuple], tuple]:
        perm = [ring.index(v) for v in self.effective_precedence(ring)]
        if self.kind == "lex":
            def key(m, _perm=perm):
                return tuple(m[i] for i in _perm)
        else:
            rev = list(reversed(perm))

            def key(m, _rev=rev):
                return (sum(m), tuple(-m[i] for i in _rev))
        return key

    def to_json(self) -> str:
        return self.kind


@dataclass(frozen=True)
class IdealBasis:
    """An ordered generator list for an ideal, with a term order."""

    generators: tuple[MultiPoly, ...]
    order: MonomialOrder = MonomialOrder()

    def __post_init__(self):
        if not self.generators:
            raise ValueError("empty generator list")
        ring = self.generators[0].ring
        for g in self.generators:
            if g.ring != ring:
                raise FieldMismatch("generators live in different rings")
            if g.is_zero:
                raise ValueError("zero generator")

    @property
    def ring(self) -> PolyRing:
        return self.generators[0].ring


@dataclass(frozen=True)
class MembershipCertificate:
    """Cofactors, one per original generator, reconstructing the query."""

    cofactors: tuple[MultiPoly, ...]

    def reconstruct(self, generators: Sequence[MultiPoly]) -> MultiPoly:
        acc = generators[0].ring.zero()
        for c, g in zip(self.cofactors, generators):
            acc = acc + c * g
        return acc

    def verify(self, target: MultiPoly, generators: Sequence[MultiPoly]) -> bool:
        return self.reconstruct(generators) == target


@dataclass
class GroebnerBasis:
    """Reduced Groebner basis plus the transform back to the original generators."""

    elements: list[MultiPoly]
    transform: list[list[MultiPoly]]  # elements[i] == sum_j transform[i][j] * generators[j]
    basis: IdealBasis
    _key: Callable = dc_field(repr=False, default=None)
    _lms: list[tuple] = dc_field(repr=False, default=None)

    @property
    def order(self) -> MonomialOrder:
        return self.basis.order

    def check_transform(self) -> bool:
        gens = self.basis.generators
        for el, row in zip(self.elements, self.transform):
            acc = el.ring.zero()
            for c, g in zip(row, gens):
                acc = acc + c * g
            if acc != el:
                return False
        return True


def _leading(p: MultiPoly, key):
    lm = max(p.terms, key=key)
    return lm, p.terms[lm]


def _mono_divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def _mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _mono_sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def _divide_tracking(p: MultiPoly, divisors: list[MultiPoly], lms: list[tuple], key):
    """Full multivariate division: p = sum quots[i]*divisors[i] + nf.

    Divisors must be monic w.r.t. the order.  No term of nf is divisible by
    any divisor leading monomial.
    """
    ring = p.ring
    quots = [ring.zero()] * len(divisors)
    nf = ring.zero()
    h = p
    while not h.is_zero:
        lm, lc = _leading(h, key)
        for i, g in enumerate(divisors):
            if _mono_divides(lms[i], lm):
                shift = _mono_sub(lm, lms[i])
                quots[i] = quots[i] + MultiPoly(ring, {shift: lc})
                h = h - g.term_mul(lc, shift)
                break
        else:
            nf = nf + MultiPoly(ring, {lm: lc})
            h = h - MultiPoly(ring, {lm: lc})
    return nf, quots


def _spair(fi: MultiPoly, fj: MultiPoly, lmi: tuple, lmj: tuple):
    """S-polynomial of monic fi, fj, with the two multiplier terms."""
    lcm = _mono_lcm(lmi, lmj)
    si = _mono_sub(lcm, lmi)
    sj = _mono_sub(lcm, lmj)
    one = fi.ring.field.one
    return fi.term_mul(one, si) - fj.term_mul(one, sj), si, sj


def buchberger(
    basis: IdealBasis,
    *,
    max_basis: int = DEFAULT_MAX_BASIS,
    max_total_degree: int = DEFAULT_MAX_TOTAL_DEGREE,
) -> GroebnerBasis:
    """Compute the reduced Groebner basis with transform tracking."""
    ring = basis.ring
    fld = ring.field
    key = basis.order.key_function(ring)
    gens = basis.generators
    nzero = [ring.zero()] * len(gens)

    G: list[MultiPoly] = []
    rows: list[list[MultiPoly]] = []
    lms: list[tuple] = []
    pairs: set[tuple[int, int]] = set()

    def gm_update(f: MultiPoly, row: list[MultiPoly]):
        # Gebauer-Moeller pair update for the new element f
        nonlocal pairs
        lmf, _ = _leading(f, key)
        new_idx = len(G)
        kept = set()
        for (i, j) in pairs:
            lcm_ij = _mono_lcm(lms[i], lms[j])
            if (
                not _mono_divides(lmf, lcm_ij)
                or lcm_ij == _mono_lcm(lms[i], lmf)
                or lcm_ij == _mono_lcm(lms[j], lmf)
            ):
                kept.add((i, j))
        buckets: dict[tuple, list[int]] = {}
        for i in range(new_idx):
            buckets.setdefault(_mono_lcm(lms[i], lmf), []).append(i)
        minimal: list[tuple] = []
        for L in sorted(buckets, key=key):
            if not any(_mono_divides(M, L) for M in minimal):
                minimal.append(L)
        for L in minimal:
            if not any(_mono_lcm(lms[i], lmf) == _mono_mul(lms[i], lmf) for i in buckets[L]):
                kept.add((min(buckets[L]), new_idx))
        pairs = kept
        G.append(f)
        rows.append(row)
        lms.append(lmf)
        if len(G) > max_basis:
            raise ResourceLimitExceeded(f"basis size exceeded {max_basis}")

    for j, g in enumerate(gens):
        _, lc = _leading(g, key)
        inv = fld.inv(lc)
        row = list(nzero)
        row[j] = ring.const(inv)
        gm_update(g.scale(inv), row)

    while pairs:
        i, j = min(pairs, key=lambda p: (key(_mono_lcm(lms[p[0]], lms[p[1]])), p))
        pairs.discard((i, j))
        s, si, sj = _spair(G[i], G[j], lms[i], lms[j])
        if s.is_zero:
            continue
        nf, quots = _divide_tracking(s, G, lms, key)
        if nf.is_zero:
            continue
        if nf.total_degree() > max_total_degree:
            raise ResourceLimitExceeded(f"total degree exceeded {max_total_degree}")
        one = fld.one
        row = [
            rows[i][k].term_mul(one, si) - rows[j][k].term_mul(one, sj)
            for k in range(len(gens))
        ]
        for q, qrow in zip(quots, rows):
            if not q.is_zero:
                row = [r - q * qr for r, qr in zip(row, qrow)]
        _, lc = _leading(nf, key)
        inv = fld.inv(lc)
        gm_update(nf.scale(inv), [r.scale(inv) for r in row])

    # minimalize: drop elements whose leading monomial another one divides
    order_idx = sorted(range(len(G)), key=lambda i: key(lms[i]))
    kept: list[int] = []
    for i in order_idx:
        if not any(_mono_divides(lms[k], lms[i]) for k in kept):
            kept.append(i)
    elements = [G[i] for i in kept]
    rws = [rows[i] for i in kept]
    klms = [lms[i] for i in kept]

    # interreduce tails; leading monomials are pairwise indivisible so stay put
    for i in range(len(elements)):
        others = elements[:i] + elements[i + 1 :]
        olms = klms[:i] + klms[i + 1 :]
        if not others:
            continue
        nf, quots = _divide_tracking(elements[i], others, olms, key)
        if nf == elements[i]:
            continue
        row = rws[i]
        orows = rws[:i] + rws[i + 1 :]
        for q, qrow in zip(quots, orows):
            if not q.is_zero:
                row = [r - q * qr for r, qr in zip(row, qrow)]
        elements[i] = nf
        rws[i] = row

    return GroebnerBasis(elements, rws, basis, _key=key, _lms=klms)


def reduce_full(p: MultiPoly, gb: GroebnerBasis):
    """Canonical normal form of p with a certificate against the original
    generators: p == certificate . generators + normal_form."""
    if p.ring != gb.basis.ring:
        raise FieldMismatch("polynomial and basis rings differ")
    nf, quots = _divide_tracking(p, gb.elements, gb._lms, gb._key)
    gens = gb.basis.generators
    cof = [p.ring.zero()] * len(gens)
    for q, row in zip(quots, gb.transform):
        if q.is_zero:
            continue
        cof = [c + q * r for c, r in zip(cof, row)]
    return nf, MembershipCertificate(tuple(cof))


def is_member(p: MultiPoly, basis: IdealBasis | GroebnerBasis, **caps) -> Optional[MembershipCertificate]:
    """Certificate iff p lies in the ideal; None is a proof of non-membership."""
    gb = basis if isinstance(basis, GroebnerBasis) else buchberger(basis, **caps)
    nf, cert = reduce_full(p, gb)
    return cert if nf.is_zero else None


def ideals_equal(a: IdealBasis | GroebnerBasis, b: IdealBasis | GroebnerBasis, **caps) -> bool:
    """Two-way generator membership."""
    gba = a if isinstance(a, GroebnerBasis) else buchberger(a, **caps)
    gbb = b if isinstance(b, GroebnerBasis) else buchberger(b, **caps)
    if gba.basis.ring != gbb.basis.ring:
        raise FieldMismatch("ideals live in different rings")
    return all(is_member(g, gbb) is not None for g in gba.basis.generators) and all(
        is_member(g, gba) is not None for g in gbb.basis.generators
    )


def is_unit_modulo(p: MultiPoly, basis: IdealBasis, **caps) -> Optional[MultiPoly]:
    """An inverse of p modulo the ideal, when 1 lies in (p) + ideal."""
    if p.is_zero:
        return None
    augmented = IdealBasis(basis.generators + (p,), basis.order)
    cert = is_member(p.ring.one(), augmented, **caps)
    if cert is None:
        return None
    return cert.cofactors[-1]
