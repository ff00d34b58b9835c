"""Exact base fields: the rationals and prime fields GF(p).

A FieldSpec names the field; a Scalar is a field element tagged with its
spec.  Rational values are fractions.Fraction, prime-field values are
residues in [0, p).  Containers elsewhere in the package store the raw
values and rebuild Scalars at the API surface, so the arithmetic helpers
here (`raw_*`) are the hot path.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FieldMismatch, UnsupportedField

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_INT_RE = re.compile(r"^[+-]?\d+$")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class FieldSpec:
    """Identifies a base field: rationals (p is None) or GF(p)."""

    __slots__ = ("p",)
    _cache: dict[int | None, "FieldSpec"] = {}

    def __new__(cls, p: int | None = None) -> "FieldSpec":
        cached = cls._cache.get(p)
        if cached is not None:
            return cached
        if p is not None:
            if not isinstance(p, int) or not _is_prime(p):
                raise UnsupportedField(f"modulus {p!r} is not prime")
        inst = object.__new__(cls)
        inst.p = p
        cls._cache[p] = inst
        return inst

    @property
    def kind(self) -> str:
        return "rationals" if self.p is None else "prime"

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("FieldSpec", self.p))

    def __repr__(self) -> str:
        return "FieldSpec(Q)" if self.p is None else f"FieldSpec(GF({self.p}))"

    def __reduce__(self):
        # unpickling must go through __new__ so instances stay interned
        return (FieldSpec, (self.p,))

    # --- raw-value helpers -------------------------------------------------

    def coerce(self, value) -> Fraction | int:
        """Bring an int/Fraction/Scalar/str into canonical raw form."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"{value.field!r} vs {self!r}")
            return value.value
        if self.p is None:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            if isinstance(value, str):
                return self._parse_raw(value)
            raise TypeError(f"cannot coerce {value!r} into Q")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, str):
            return self._parse_raw(value)
        raise TypeError(f"cannot coerce {value!r} into GF({self.p})")

    def _parse_raw(self, text: str) -> Fraction | int:
        from .errors import ParseError

        text = text.strip()
        if self.p is None:
            if not _RAT_RE.match(text):
                raise ParseError(f"bad rational literal {text!r}")
            try:
                return Fraction(text)
            except ZeroDivisionError:
                raise ParseError(f"zero denominator in {text!r}") from None
        if not _INT_RE.match(text):
            raise ParseError(f"bad residue literal {text!r}")
        return int(text) % self.p

    def scalar(self, value) -> "Scalar":
        return Scalar(self, self.coerce(value))

    @property
    def zero(self) -> "Scalar":
        return Scalar(self, 0 if self.p is not None else Fraction(0))

    @property
    def one(self) -> "Scalar":
        return Scalar(self, 1 if self.p is not None else Fraction(1))

    def raw_inv(self, a):
        if self.p is None:
            if not a:
                raise ZeroDivisionError("inverse of zero")
            return 1 / a
        return pow(a, -1, self.p)

    def raw_div(self, a, b):
        if self.p is None:
            return a / b
        return a * pow(b, -1, self.p) % self.p

    def raw_str(self, a) -> str:
        return str(a)


def rationals() -> FieldSpec:
    return FieldSpec(None)


def gf(p: int) -> FieldSpec:
    return FieldSpec(p)


class Scalar:
    """A field element carrying its FieldSpec.

    Values are kept canonical: reduced Fraction over Q, residue in [0, p)
    over GF(p).  Mixed-field arithmetic raises FieldMismatch.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        self.field = field
        self.value = value

    @classmethod
    def of(cls, field: FieldSpec, value) -> "Scalar":
        return cls(field, field.coerce(value))

    def _check(self, other: "Scalar") -> None:
        if not isinstance(other, Scalar):
            raise TypeError(f"expected Scalar, got {other!r}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        v = self.value + other.value
        if self.field.p is not None:
            v %= self.field.p
        return Scalar(self.field, v)

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        v = self.value - other.value
        if self.field.p is not None:
            v %= self.field.p
        return Scalar(self.field, v)

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        v = self.value * other.value
        if self.field.p is not None:
            v %= self.field.p
        return Scalar(self.field, v)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        if not other.value:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar(self.field, self.field.raw_div(self.value, other.value))

    def __neg__(self) -> "Scalar":
        v = -self.value
        if self.field.p is not None:
            v %= self.field.p
        return Scalar(self.field, v)

    def inverse(self) -> "Scalar":
        if not self.value:
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(self.field, self.field.raw_inv(self.value))

    def __bool__(self) -> bool:
        return bool(self.value)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Scalar)
            and other.field == self.field
            and other.value == self.value
        )

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        if self.field.p is None:
            return f"Scalar(Q, {self.value})"
        return f"Scalar(GF({self.field.p}), {self.value})"

    @classmethod
    def parse(cls, field: FieldSpec, text: str) -> "Scalar":
        return cls(field, field._parse_raw(text))
