"""Dense univariate polynomials over a FieldSpec.

Coefficients are stored constant-first with no trailing zeros; the zero
polynomial has an empty coefficient list and degree -1.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    BothZero,
    DivisionByZeroPoly,
    FieldMismatch,
    ZeroPolynomial,
)
from .fields import FieldSpec, Scalar


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs):
        """coeffs: iterable of raw values/ints/Scalars, constant term first."""
        raw = [field.coerce(c) for c in coeffs]
        while raw and not raw[-1]:
            raw.pop()
        self.field = field
        self.coeffs = tuple(raw)

    # --- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: FieldSpec) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: FieldSpec) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, s: Scalar) -> "Poly":
        return cls(s.field, (s.value,))

    @classmethod
    def linear(cls, root: Scalar) -> "Poly":
        """x - root."""
        return cls(root.field, (-root.value, 1))

    # --- basic queries ------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.coerce(1)

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> Scalar:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return Scalar(self.field, self.coeffs[-1])

    def coeff(self, k: int) -> Scalar:
        v = self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.coerce(0)
        return Scalar(self.field, v)

    def scalars(self) -> tuple[Scalar, ...]:
        return tuple(Scalar(self.field, c) for c in self.coeffs)

    # --- arithmetic ---------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {other!r}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.field, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.field)
        p = self.field.p
        out = [0 if p is not None else Fraction(0)] * (
            len(self.coeffs) + len(other.coeffs) - 1
        )
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        if p is not None:
            out = [c % p for c in out]
        return Poly(self.field, out)

    def scale(self, s: Scalar) -> "Poly":
        if s.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {s.field!r}")
        p = self.field.p
        out = [c * s.value for c in self.coeffs]
        if p is not None:
            out = [c % p for c in out]
        return Poly(self.field, out)

    def shift(self, k: int) -> "Poly":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        zero = 0 if self.field.p is not None else Fraction(0)
        return Poly(self.field, (zero,) * k + self.coeffs)

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lead = self.coeffs[-1]
        if lead == self.field.coerce(1):
            return self
        inv = self.field.raw_inv(lead)
        p = self.field.p
        out = [c * inv for c in self.coeffs]
        if p is not None:
            out = [c % p for c in out]
        return Poly(self.field, out)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval(self, s: Scalar) -> Scalar:
        """Horner evaluation at a scalar point."""
        if s.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {s.field!r}")
        p = self.field.p
        acc = 0 if p is not None else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * s.value + c
            if p is not None:
                acc %= p
        return Scalar(self.field, acc)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append("x" if c == self.field.coerce(1) else f"{c}*x")
            else:
                parts.append(f"x^{k}" if c == self.field.coerce(1) else f"{c}*x^{k}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Poly({self.field!r}, {list(self.coeffs)!r})"


def poly_divrem(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with deg r < deg g."""
    f._check(g)
    if g.is_zero:
        raise DivisionByZeroPoly("division by the zero polynomial")
    if f.degree < g.degree:
        return Poly.zero(f.field), f
    field = f.field
    p = field.p
    rem = list(f.coeffs)
    div = g.coeffs
    dg = len(div) - 1
    lead_inv = field.raw_inv(div[-1])
    quot = [0 if p is not None else Fraction(0)] * (len(rem) - dg)
    for top in range(len(rem) - 1, dg - 1, -1):
        c = rem[top]
        if not c:
            continue
        q = c * lead_inv
        if p is not None:
            q %= p
        quot[top - dg] = q
        for j in range(dg + 1):
            rem[top - dg + j] -= q * div[j]
            if p is not None:
                rem[top - dg + j] %= p
    return Poly(field, quot), Poly(field, rem[:dg])


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    f._check(g)
    if f.is_zero and g.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero:
        _, r = poly_divrem(a, b)
        a, b = b, r
    return a.monic()


def derivative(f: Poly) -> Poly:
    p = f.field.p
    out = []
    for k in range(1, len(f.coeffs)):
        v = k * f.coeffs[k]
        if p is not None:
            v %= p
        out.append(v)
    return Poly(f.field, out)


def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _root_multiplicity(f: Poly, r: Scalar) -> tuple[Poly, int]:
    """Divide out (x - r) as often as it goes exactly."""
    lin = Poly.linear(r)
    mult = 0
    while f.degree >= 1:
        q, rem = poly_divrem(f, lin)
        if not rem.is_zero:
            break
        f = q
        mult += 1
    return f, mult


def rational_roots(f: Poly) -> list[tuple[Scalar, int]]:
    """All roots in the base field with multiplicities.

    Over Q the candidates come from the rational root theorem applied to a
    primitive integer form of f; over GF(p) every residue is tested.
    Returned pairs are sorted by root value.
    """
    if f.is_zero:
        raise ZeroPolynomial("the zero polynomial has every element as a root")
    field = f.field
    found: list[tuple[Scalar, int]] = []
    if field.p is not None:
        for v in range(field.p):
            s = Scalar(field, v)
            if not f.eval(s):
                f, m = _root_multiplicity(f, s)
                found.append((s, m))
        return found

    # factor out x^v first so the constant term is nonzero
    zero = Scalar(field, Fraction(0))
    f, mult0 = _root_multiplicity(f, zero)
    if mult0:
        found.append((zero, mult0))
    if f.degree >= 1:
        from math import lcm, gcd

        den = lcm(*[c.denominator for c in f.coeffs])
        ints = [int(c * den) for c in f.coeffs]
        content = 0
        for c in ints:
            content = gcd(content, c)
        ints = [c // content for c in ints]
        tail, lead = ints[0], ints[-1]
        cands = set()
        for num in _int_divisors(tail):
            for d in _int_divisors(lead):
                cands.add(Fraction(num, d))
                cands.add(Fraction(-num, d))
        for v in sorted(cands):
            s = Scalar(field, v)
            if not f.eval(s):
                f, m = _root_multiplicity(f, s)
                found.append((s, m))
    found.sort(key=lambda pair: pair[0].value)
    return found
