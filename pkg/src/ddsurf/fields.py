"""Exact coefficient fields: arbitrary-precision rationals and prime fields.

Rational values are `fractions.Fraction` (always in lowest terms with a
positive denominator); prime-field values are plain ints reduced to [0, p).
No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import ParseError

Scalar = Union[Fraction, int]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (p is None) or the prime field with p elements."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ParseError(f"modulus {self.p} is not prime")

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    def coerce(self, value) -> Scalar:
        """Convert an int or Fraction into this field's canonical scalar."""
        if self.p is None:
            if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
                raise TypeError(f"cannot coerce {value!r} into Q")
            return Fraction(value)
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"cannot coerce {value!r} into F{self.p}")
        return value % self.p

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.p is None else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.p is None else 1

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.p is None else (-a) % self.p

    def inv(self, a: Scalar) -> Scalar:
        if not a:
            raise ZeroDivisionError("division by zero in coefficient field")
        if self.p is None:
            return 1 / a
        return pow(a, self.p - 2, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def power(self, a: Scalar, n: int) -> Scalar:
        """a**n for any integer n (negative n inverts first)."""
        if n < 0:
            return self.power(self.inv(a), -n)
        if self.p is None:
            return a**n
        return pow(a, n, self.p)

    def elements(self) -> Iterator[Scalar]:
        """All field elements in canonical order; finite fields only."""
        if self.p is None:
            raise ValueError("cannot enumerate the rationals")
        return iter(range(self.p))

    def nonzero_elements(self) -> Iterator[Scalar]:
        if self.p is None:
            raise ValueError("cannot enumerate the rationals")
        return iter(range(1, self.p))

    def scalar_str(self, a: Scalar) -> str:
        return str(a)

    def scalar_sort_key(self, a: Scalar):
        # canonical enumeration/report order: 0, 1, 2, ... resp. Fraction order
        return a

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"

    def to_json(self) -> dict:
        if self.p is None:
            return {"field": "Q"}
        return {"field": "Fp", "p": self.p}

    @staticmethod
    def from_json(obj: dict) -> "Field":
        kind = obj.get("field")
        if kind == "Q":
            return QQ
        if kind == "Fp":
            if "p" not in obj:
                raise ParseError("prime field descriptor needs a modulus 'p'")
            return Field(int(obj["p"]))
        raise ParseError(f"unknown field descriptor {obj!r}")


QQ = Field(None)


def GF(p: int) -> Field:
    return Field(p)
