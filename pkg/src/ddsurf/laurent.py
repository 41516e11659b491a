"""Exact Laurent polynomials in x (any integer exponent) and z (non-negative).

This is the ambient ring k[x, 1/x, z] in which every double Danielewski
coordinate ring embeds; equality of embedded images decides equality in
the quotient ring.
"""

from __future__ import annotations

from .errors import FieldMismatch
from .fields import Field
from .poly import MultiPoly


class LaurentPoly:
    """Sparse map (x-exponent, z-exponent) -> nonzero scalar; z-exponent >= 0."""

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: dict):
        self.field = field
        self.terms = terms

    @staticmethod
    def zero(field: Field) -> "LaurentPoly":
        return LaurentPoly(field, {})

    @staticmethod
    def one(field: Field) -> "LaurentPoly":
        return LaurentPoly(field, {(0, 0): field.one})

    @staticmethod
    def term(field: Field, coeff, i: int, j: int) -> "LaurentPoly":
        if j < 0:
            raise ValueError("z-exponent must be non-negative")
        c = field.coerce(coeff)
        return LaurentPoly(field, {(i, j): c} if c else {})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "LaurentPoly"):
        if self.field != other.field:
            raise FieldMismatch("Laurent operands over different fields")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        fld = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = fld.add(out.get(m, fld.zero), c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentPoly(fld, out)

    def __neg__(self) -> "LaurentPoly":
        fld = self.field
        return LaurentPoly(fld, {m: fld.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        fld = self.field
        p = fld.p
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                c = c1 * c2 if p is None else (c1 * c2) % p
                acc = out.get(m)
                if acc is None:
                    out[m] = c
                else:
                    s = acc + c if p is None else (acc + c) % p
                    if s:
                        out[m] = s
                    else:
                        del out[m]
        return LaurentPoly(fld, {m: c for m, c in out.items() if c})

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("Laurent powers take non-negative integers")
        result = LaurentPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def div_xpow(self, k: int) -> "LaurentPoly":
        """Divide by x**k, shifting every x-exponent down by k."""
        return LaurentPoly(self.field, {(i - k, j): c for (i, j), c in self.terms.items()})

    def scale(self, coeff) -> "LaurentPoly":
        fld = self.field
        c = fld.coerce(coeff)
        if not c:
            return LaurentPoly.zero(fld)
        return LaurentPoly(fld, {m: fld.mul(cc, c) for m, cc in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                s
                for s in (
                    "" if i == 0 else (f"x^{i}" if i != 1 else "x"),
                    "" if j == 0 else (f"z^{j}" if j != 1 else "z"),
                )
                if s
            )
            parts.append(f"{c}" if not mono else f"{c}*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def laurent_from_poly(p: MultiPoly) -> LaurentPoly:
    """Embed a polynomial in X and Z only; rejects Y or T occurrences."""
    used = p.variables()
    bad = used - {"X", "Z"}
    if bad:
        raise ValueError(f"polynomial mentions {sorted(bad)}; only X and Z embed directly")
    ix = p.ring.index("X")
    iz = p.ring.index("Z")
    return LaurentPoly(p.ring.field, {(m[ix], m[iz]): c for m, c in p.terms.items()})
