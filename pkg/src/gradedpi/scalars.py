"""Exact field arithmetic over the rationals and over prime fields F_p.

Every scalar in this package is either a reduced arbitrary-precision
fraction or a canonical residue in [0, p).  There is deliberately no
floating-point field: all downstream verdicts are exact zero tests, and a
float can certify none of them.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, FieldMismatch, ParseError

__all__ = [
    "FieldKind",
    "FieldSpec",
    "Scalar",
    "RATIONALS",
    "is_prime",
    "xgcd",
]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, x, y) with g = gcd(a, b) = a*x + b*y."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


# Witnesses making Miller-Rabin deterministic for all n below this bound
# (Sorenson & Webster).  Larger moduli are refused rather than guessed at.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_BOUND = 318_665_857_834_031_151_167_461


def is_prime(n: int) -> bool:
    """Deterministic primality test for n < 3.18e23."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    if n >= _MR_BOUND:
        raise ValueError(f"cannot certify primality of {n}: modulus too large")
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldKind(enum.Enum):
    RATIONALS = "rationals"
    PRIME_FIELD = "prime-field"


_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


@dataclass(frozen=True)
class FieldSpec:
    """An exact base field: the rationals, or F_p for a prime p."""

    kind: FieldKind
    modulus: int | None = None

    def __post_init__(self):
        if self.kind is FieldKind.RATIONALS:
            if self.modulus is not None:
                raise ValueError("rationals take no modulus")
        else:
            if self.modulus is None or not is_prime(self.modulus):
                raise ValueError(f"modulus {self.modulus!r} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(FieldKind.PRIME_FIELD, p)

    @classmethod
    def from_string(cls, text: str) -> "FieldSpec":
        """Parse a CLI field selector: "Q" or "Fp:<p>"."""
        if text == "Q":
            return cls.rationals()
        if text.startswith("Fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ParseError(f"bad field selector {text!r}") from None
            try:
                return cls.prime(p)
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        raise ParseError(f"bad field selector {text!r}: expected Q or Fp:<p>")

    def to_string(self) -> str:
        if self.kind is FieldKind.RATIONALS:
            return "Q"
        return f"Fp:{self.modulus}"

    def characteristic(self) -> int:
        return 0 if self.kind is FieldKind.RATIONALS else self.modulus

    @property
    def zero(self) -> "Scalar":
        return self.from_int(0)

    @property
    def one(self) -> "Scalar":
        return self.from_int(1)

    def from_int(self, k: int) -> "Scalar":
        if self.kind is FieldKind.RATIONALS:
            return Scalar(self, Fraction(k))
        return Scalar(self, k % self.modulus)

    def parse(self, text: str) -> "Scalar":
        """Parse "a" or "a/b"; in F_p the "/" denotes field division."""
        m = _SCALAR_RE.match(text)
        if not m:
            raise ParseError(f"bad scalar {text!r}", 0)
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if self.kind is FieldKind.RATIONALS:
            if den == 0:
                raise DivisionByZero(f"zero denominator in {text!r}")
            return Scalar(self, Fraction(num, den))
        return self.from_int(num) / self.from_int(den)

    def __str__(self):
        return self.to_string()


RATIONALS = FieldSpec.rationals()


class Scalar:
    """Immutable exact field element.

    Over the rationals the value is a reduced ``Fraction`` (gcd(|num|, den)
    = 1, den >= 1); over F_p it is the canonical residue in [0, p).
    Arithmetic mixes freely with Python ints, which embed into the field.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        self.field = field
        self.value = value

    def _coerce(self, other: Union["Scalar", int]) -> "Scalar":
        if isinstance(other, int):
            return self.field.from_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.field.kind is FieldKind.RATIONALS:
            return Scalar(self.field, self.value + other.value)
        return Scalar(self.field, (self.value + other.value) % self.field.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.field.kind is FieldKind.RATIONALS:
            return Scalar(self.field, self.value - other.value)
        return Scalar(self.field, (self.value - other.value) % self.field.modulus)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.field.kind is FieldKind.RATIONALS:
            return Scalar(self.field, self.value * other.value)
        return Scalar(self.field, (self.value * other.value) % self.field.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise DivisionByZero("division by zero scalar")
        if self.field.kind is FieldKind.RATIONALS:
            return Scalar(self.field, self.value / other.value)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.from_int(other) / self

    def __neg__(self):
        if self.field.kind is FieldKind.RATIONALS:
            return Scalar(self.field, -self.value)
        return Scalar(self.field, (-self.value) % self.field.modulus)

    def inverse(self) -> "Scalar":
        if not self:
            raise DivisionByZero("zero scalar has no inverse")
        if self.field.kind is FieldKind.RATIONALS:
            return Scalar(self.field, 1 / self.value)
        p = self.field.modulus
        g, x, _ = xgcd(self.value, p)
        assert g == 1
        return Scalar(self.field, x % p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    @property
    def numerator(self) -> int:
        if self.field.kind is not FieldKind.RATIONALS:
            raise FieldMismatch("numerator is only defined over the rationals")
        return self.value.numerator

    @property
    def denominator(self) -> int:
        if self.field.kind is not FieldKind.RATIONALS:
            raise FieldMismatch("denominator is only defined over the rationals")
        return self.value.denominator

    @property
    def residue(self) -> int:
        if self.field.kind is not FieldKind.PRIME_FIELD:
            raise FieldMismatch("residue is only defined over a prime field")
        return self.value

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Scalar({self.field}, {self.value})"
