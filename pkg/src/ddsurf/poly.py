"""Sparse exact multivariate polynomials over a fixed variable universe.

A polynomial is a map from exponent tuples to nonzero field scalars.  The
default universe is (X, Y, Z, T); presented rings may declare any finite
variable list.  All values are immutable after construction and all
operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import FieldMismatch, NotMonic
from .fields import Field, Scalar

DEFAULT_VARS = ("X", "Y", "Z", "T")

NEG_INF = -math.inf
POS_INF = math.inf


@dataclass(frozen=True)
class PolyRing:
    """A coefficient field together with an ordered variable list."""

    field: Field
    vars: tuple[str, ...] = DEFAULT_VARS

    def __post_init__(self):
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate variables in {self.vars}")

    def index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise KeyError(f"unknown variable {var!r} in {self.vars}") from None

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.const(self.field.one)

    def const(self, value) -> "MultiPoly":
        c = self.field.coerce(value)
        if not c:
            return self.zero()
        return MultiPoly(self, {(0,) * len(self.vars): c})

    def var(self, name: str) -> "MultiPoly":
        return self.monomial({name: 1})

    def monomial(self, exps: Mapping[str, int], coeff=1) -> "MultiPoly":
        e = [0] * len(self.vars)
        for v, k in exps.items():
            if k < 0:
                raise ValueError("negative exponent")
            e[self.index(v)] = k
        c = self.field.coerce(coeff)
        if not c:
            return self.zero()
        return MultiPoly(self, {tuple(e): c})

    def __str__(self) -> str:
        return f"{self.field}[{','.join(self.vars)}]"


class MultiPoly:
    """A sparse polynomial; term map from exponent tuples to nonzero scalars."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- construction helpers -------------------------------------------

    @staticmethod
    def _make(ring: PolyRing, terms: dict) -> "MultiPoly":
        # prune explicit zeros so equality is term-map equality
        return MultiPoly(ring, {m: c for m, c in terms.items() if c})

    # -- predicates and accessors ----------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        if not self.terms:
            return True
        zero = (0,) * len(self.ring.vars)
        return len(self.terms) == 1 and zero in self.terms

    def constant_value(self) -> Scalar:
        """The scalar value of a constant polynomial."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        if not self.terms:
            return self.ring.field.zero
        return next(iter(self.terms.values()))

    def coeff(self, exps: Mapping[str, int]) -> Scalar:
        e = [0] * len(self.ring.vars)
        for v, k in exps.items():
            e[self.ring.index(v)] = k
        return self.terms.get(tuple(e), self.ring.field.zero)

    def variables(self) -> set[str]:
        """Variables that actually occur."""
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(self.ring.vars[i])
        return used

    def degree_in(self, var: str):
        """Max exponent of var across terms; -inf for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        i = self.ring.index(var)
        return max(m[i] for m in self.terms)

    def total_degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(m) for m in self.terms)

    def valuation(self, var: str = "X"):
        """Largest k with var**k dividing self; +inf for zero."""
        if not self.terms:
            return POS_INF
        i = self.ring.index(var)
        return min(m[i] for m in self.terms)

    def divisible_by_power(self, var: str, k: int) -> bool:
        return self.valuation(var) >= k

    # -- ring arithmetic --------------------------------------------------

    def _check_compat(self, other: "MultiPoly"):
        if self.ring != other.ring:
            raise FieldMismatch(f"incompatible rings {self.ring} and {other.ring}")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = self.ring.const(other)
        self._check_compat(other)
        fld = self.ring.field
        p = fld.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            if acc is None:
                out[m] = c
            else:
                s = acc + c if p is None else (acc + c) % p
                if s:
                    out[m] = s
                else:
                    del out[m]
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        fld = self.ring.field
        return MultiPoly(self.ring, {m: fld.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = self.ring.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return self.ring.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check_compat(other)
        p = self.ring.field.p
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                c = ca * cb if p is None else (ca * cb) % p
                acc = out.get(m)
                if acc is None:
                    out[m] = c
                else:
                    s = acc + c if p is None else (acc + c) % p
                    if s:
                        out[m] = s
                    else:
                        del out[m]
        return MultiPoly(self.ring, {m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, scalar) -> "MultiPoly":
        fld = self.ring.field
        c = fld.coerce(scalar)
        if not c:
            return self.ring.zero()
        return MultiPoly(self.ring, {m: fld.mul(cc, c) for m, cc in self.terms.items()})

    def term_mul(self, coeff: Scalar, exps: tuple) -> "MultiPoly":
        """Multiply by a single term given as (coefficient, exponent tuple)."""
        if not coeff:
            return self.ring.zero()
        fld = self.ring.field
        return MultiPoly(
            self.ring,
            {
                tuple(x + y for x, y in zip(m, exps)): fld.mul(c, coeff)
                for m, c in self.terms.items()
            },
        )

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers take non-negative integers")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int,)) and not isinstance(other, bool):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- division and substitution ----------------------------------------

    def leading_in(self, var: str) -> tuple[int, "MultiPoly"]:
        """(degree, coefficient polynomial) of self viewed in k[others][var]."""
        i = self.ring.index(var)
        d = self.degree_in(var)
        if d is NEG_INF:
            return -1, self.ring.zero()
        coeff = {
            m[:i] + (0,) + m[i + 1 :]: c for m, c in self.terms.items() if m[i] == d
        }
        return d, MultiPoly(self.ring, coeff)

    def is_monic_in(self, var: str) -> bool:
        d, lead = self.leading_in(var)
        return d >= 0 and lead == self.ring.one()

    def divide_by_monic(self, m: "MultiPoly", var: str) -> tuple["MultiPoly", "MultiPoly"]:
        """Exact division with remainder by a polynomial monic in var.

        Returns (q, r) with self == q*m + r and degree_in(r, var) < degree_in(m, var).
        """
        self._check_compat(m)
        dm, lead = m.leading_in(var)
        if dm < 1 or lead != self.ring.one():
            raise NotMonic(f"divisor must be monic in {var} with degree >= 1")
        i = self.ring.index(var)
        q = self.ring.zero()
        r = self
        dr = r.degree_in(var)
        while not r.is_zero and dr >= dm:
            _, lr = r.leading_in(var)
            shift = (0,) * i + (dr - dm,) + (0,) * (len(self.ring.vars) - i - 1)
            t = lr.term_mul(self.ring.field.one, shift)
            q = q + t
            r = r - t * m
            dr = r.degree_in(var)
        return q, r

    def substitute(self, images: Mapping[str, "MultiPoly"], into: PolyRing | None = None) -> "MultiPoly":
        """Ring-homomorphic evaluation; unmapped variables map to their
        namesakes in the target ring."""
        if into is None:
            into = next(iter(images.values())).ring if images else self.ring
        for img in images.values():
            if img.ring != into:
                raise FieldMismatch("substitution images live in different rings")
        if into.field != self.ring.field:
            raise FieldMismatch("substitution cannot change the coefficient field")
        full = {}
        for v in self.ring.vars:
            if v in images:
                full[v] = images[v]
            else:
                full[v] = into.var(v)  # raises KeyError if absent from target
        pow_cache: dict[tuple[str, int], MultiPoly] = {}

        def ipow(v: str, n: int) -> MultiPoly:
            key = (v, n)
            got = pow_cache.get(key)
            if got is None:
                got = full[v] ** n
                pow_cache[key] = got
            return got

        out = into.zero()
        for m, c in self.terms.items():
            term = into.const(c)
            for i, e in enumerate(m):
                if e:
                    term = term * ipow(self.ring.vars[i], e)
            out = out + term
        return out

    # -- canonical text form ----------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, Scalar]]:
        """Terms in canonical order: exponent tuples lexicographic, highest first."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        fld = self.ring.field
        chunks = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.ring.vars, m)
                if e
            )
            negative = fld.p is None and c < 0
            mag = -c if negative else c
            if not mono:
                body = str(mag)
            elif mag == fld.one:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not chunks:
                chunks.append(f"-{body}" if negative else body)
            else:
                chunks.append(f" - {body}" if negative else f" + {body}")
        return "".join(chunks)

    def __repr__(self):
        return f"MultiPoly({self.ring}, {self})"
