"""Zero test for determinants of matrices of linear forms.

The Frobenius oracle needs one symbolic fact: whether the determinant
of the Gram pencil G(phi) = sum_t phi_t G_t is the zero polynomial.
The determinant is expanded row by row over column subsets, so every
multiplication is by a linear form and no polynomial division occurs.
Exponent vectors are packed into integers, four bits per variable, and
coefficients stay integral: rational rows are rescaled to coprime
integers, which multiplies the determinant by a nonzero constant and
leaves its vanishing intact.
"""

from __future__ import annotations

from math import gcd, lcm

from .errors import SizeMismatch
from .fields import FieldSpec

_EXP_BITS = 4


def _pack_row(field: FieldSpec, row: list[list]) -> list:
    """One pencil row as [(column, [(packed shift, int coeff), ...])].

    Keeps only nonzero coefficients.  Over the rationals the whole row
    is scaled by the denominator lcm and divided by the numerator gcd,
    so the packed coefficients are coprime integers.
    """
    entries = []
    for col, coeffs in enumerate(row):
        form = [(var, c) for var, c in enumerate(coeffs) if c]
        if form:
            entries.append((col, form))
    if field.p is not None:
        return [
            (col, [(1 << (_EXP_BITS * var), c) for var, c in form])
            for col, form in entries
        ]
    denom = 1
    for _, form in entries:
        for _, c in form:
            denom = lcm(denom, c.denominator)
    common = 0
    scaled = []
    for col, form in entries:
        ints = [(var, c.numerator * (denom // c.denominator)) for var, c in form]
        for _, value in ints:
            common = gcd(common, value)
        scaled.append((col, ints))
    return [
        (col, [(1 << (_EXP_BITS * var), value // common) for var, value in ints])
        for col, ints in scaled
    ]


def linear_pencil_det_is_zero(field: FieldSpec, rows: list[list[list]]) -> bool:
    """True iff the pencil with the given linear-form entries has det = 0.

    rows[i][j] is the dense coefficient list of the linear form in
    entry (i, j), indexed by variable, with raw field values.  The
    matrix must be square and small enough that no packed exponent
    overflows its four bits; the variable count is unconstrained.
    """
    d = len(rows)
    if any(len(row) != d for row in rows):
        raise SizeMismatch("pencil is not square")
    if d >= (1 << _EXP_BITS) - 1:
        raise SizeMismatch(f"pencil of size {d} overflows packed exponents")
    if d == 0:
        return False
    p = field.p
    prepared = []
    for row in rows:
        packed = _pack_row(field, row)
        if not packed:
            return True
        prepared.append(packed)
    # sparse rows first keeps the intermediate minors small
    prepared.sort(key=lambda entry: (len(entry), sum(len(f) for _, f in entry)))

    # states[mask] is the minor of the rows consumed so far against the
    # column set in mask (of the reordered matrix, so det holds up to sign)
    states: dict[int, dict[int, int]] = {0: {0: 1}}
    for level, row in enumerate(prepared):
        nxt: dict[int, dict[int, int]] = {}
        for mask, poly in states.items():
            for col, form in row:
                bit = 1 << col
                if mask & bit:
                    continue
                negate = (level + (mask & (bit - 1)).bit_count()) & 1
                dest = nxt.get(mask | bit)
                if dest is None:
                    dest = nxt[mask | bit] = {}
                get = dest.get
                for shift, coeff in form:
                    factor = -coeff if negate else coeff
                    for expo, value in poly.items():
                        key = expo + shift
                        acc = get(key, 0) + factor * value
                        if p is not None:
                            acc %= p
                        if acc:
                            dest[key] = acc
                        elif key in dest:
                            del dest[key]
        states = {mask: poly for mask, poly in nxt.items() if poly}
        if not states:
            return True
    return not states.get((1 << d) - 1)
