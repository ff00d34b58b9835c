"""Exact dense matrices over a FieldSpec.

Entries are stored as raw values (Fraction over Q, residues over GF(p));
the Scalar wrapper appears only at the API surface.  All elimination
routines use the same deterministic pivot rule: scan columns left to
right, take the first nonzero entry from the top.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    FieldMismatch,
    IndexOutOfRange,
    NonSquare,
    Singular,
    SizeMismatch,
)
from .fields import FieldSpec, Scalar


def _raw_zero(field: FieldSpec):
    return 0 if field.p is not None else Fraction(0)


def _raw_one(field: FieldSpec):
    return 1 if field.p is not None else Fraction(1)


class Mat:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: FieldSpec, rows, *, _raw: bool = False):
        """rows: sequence of equal-length rows of Scalars/ints/strings.

        With _raw=True the rows are adopted as already-canonical raw
        values (internal fast path; rows must be fresh lists).
        """
        if _raw:
            self.rows = tuple(tuple(r) for r in rows)
        else:
            self.rows = tuple(
                tuple(field.coerce(v) for v in row) for row in rows
            )
        self.field = field
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise SizeMismatch("ragged rows")

    # --- constructors -------------------------------------------------------

    @classmethod
    def zeros(cls, field: FieldSpec, m: int, n: int) -> "Mat":
        z = _raw_zero(field)
        return cls(field, [[z] * n for _ in range(m)], _raw=True)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Mat":
        z, o = _raw_zero(field), _raw_one(field)
        rows = [[z] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = o
        return cls(field, rows, _raw=True)

    @classmethod
    def from_scalars(cls, rows) -> "Mat":
        flat = [s for row in rows for s in row]
        if not flat:
            raise SizeMismatch("cannot infer field of an empty matrix")
        field = flat[0].field
        return cls(field, rows)

    # --- queries ------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def is_zero(self) -> bool:
        return all(not v for row in self.rows for v in row)

    def entry(self, i: int, j: int) -> Scalar:
        """0-based entry access."""
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexOutOfRange(f"({i}, {j}) outside {self.shape}")
        return Scalar(self.field, self.rows[i][j])

    def scalars(self) -> tuple[tuple[Scalar, ...], ...]:
        return tuple(
            tuple(Scalar(self.field, v) for v in row) for row in self.rows
        )

    def _check(self, other: "Mat") -> None:
        if not isinstance(other, Mat):
            raise TypeError(f"expected Mat, got {other!r}")
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    # --- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        if other.shape != self.shape:
            raise SizeMismatch(f"{self.shape} + {other.shape}")
        p = self.field.p
        if p is None:
            rows = [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        else:
            rows = [
                [(a + b) % p for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        return Mat(self.field, rows, _raw=True)

    def __sub__(self, other: "Mat") -> "Mat":
        self._check(other)
        if other.shape != self.shape:
            raise SizeMismatch(f"{self.shape} - {other.shape}")
        p = self.field.p
        if p is None:
            rows = [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        else:
            rows = [
                [(a - b) % p for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        return Mat(self.field, rows, _raw=True)

    def __neg__(self) -> "Mat":
        p = self.field.p
        if p is None:
            rows = [[-a for a in row] for row in self.rows]
        else:
            rows = [[(-a) % p for a in row] for row in self.rows]
        return Mat(self.field, rows, _raw=True)

    def __mul__(self, other: "Mat") -> "Mat":
        self._check(other)
        if self.ncols != other.nrows:
            raise SizeMismatch(f"{self.shape} * {other.shape}")
        p = self.field.p
        z = _raw_zero(self.field)
        brows = other.rows
        n = other.ncols
        out = []
        for arow in self.rows:
            acc = [z] * n
            for k, aval in enumerate(arow):
                if not aval:
                    continue
                brow = brows[k]
                for j in range(n):
                    bv = brow[j]
                    if bv:
                        acc[j] += aval * bv
            if p is not None:
                acc = [v % p for v in acc]
            out.append(acc)
        return Mat(self.field, out, _raw=True)

    def scale(self, s) -> "Mat":
        v = self.field.coerce(s)
        p = self.field.p
        if p is None:
            rows = [[v * a for a in row] for row in self.rows]
        else:
            rows = [[v * a % p for a in row] for row in self.rows]
        return Mat(self.field, rows, _raw=True)

    def transpose(self) -> "Mat":
        return Mat(self.field, list(zip(*self.rows)) if self.rows else [], _raw=True)

    def trace(self) -> Scalar:
        if not self.is_square:
            raise NonSquare(f"trace of {self.shape}")
        p = self.field.p
        acc = _raw_zero(self.field)
        for i in range(self.nrows):
            acc += self.rows[i][i]
        if p is not None:
            acc %= p
        return Scalar(self.field, acc)

    def pow(self, n: int) -> "Mat":
        if not self.is_square:
            raise NonSquare(f"power of {self.shape}")
        if n < 0:
            raise ValueError("negative power")
        result = Mat.identity(self.field, self.nrows)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # --- vectorization (column-major throughout the package) ----------------

    def vec_raw(self) -> list:
        return [self.rows[i][j] for j in range(self.ncols) for i in range(self.nrows)]

    def vec(self) -> list[Scalar]:
        return [Scalar(self.field, v) for v in self.vec_raw()]

    @classmethod
    def devec_raw(cls, field: FieldSpec, m: int, n: int, values) -> "Mat":
        if len(values) != m * n:
            raise SizeMismatch(f"{len(values)} values for {m}x{n}")
        rows = [[values[j * m + i] for j in range(n)] for i in range(m)]
        return cls(field, rows, _raw=True)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Mat)
            and other.field == self.field
            and other.rows == self.rows
        )

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(v) for v in row) for row in self.rows
        )
        return f"Mat({self.field!r}, {self.nrows}x{self.ncols}: {body})"


# --- standard constructions ------------------------------------------------


def matrix_unit(field: FieldSpec, m: int, n: int, i: int, j: int) -> Mat:
    """The m x n matrix with a single 1 at 1-based position (i, j)."""
    if not (1 <= i <= m and 1 <= j <= n):
        raise IndexOutOfRange(f"unit position ({i}, {j}) outside {m}x{n}")
    z = _raw_zero(field)
    rows = [[z] * n for _ in range(m)]
    rows[i - 1][j - 1] = _raw_one(field)
    return Mat(field, rows, _raw=True)


def shift_matrix(field: FieldSpec, m: int, n: int, k: int) -> Mat:
    """Rectangular shift: ones on the k-th superdiagonal, zero elsewhere.

    Row r holds a 1 in column r + k for 0 <= r < min(m, n - k); k at or
    beyond n gives the zero matrix.
    """
    if m < 1 or n < 1 or k < 0:
        raise IndexOutOfRange(f"bad shift parameters m={m} n={n} k={k}")
    z, o = _raw_zero(field), _raw_one(field)
    rows = [[z] * n for _ in range(m)]
    for r in range(min(m, n - k)):
        rows[r][r + k] = o
    return Mat(field, rows, _raw=True)


def jordan_block(n: int, eigenvalue: Scalar) -> Mat:
    """n x n upper Jordan block with the given eigenvalue."""
    if n < 1:
        raise IndexOutOfRange(f"block size {n}")
    field = eigenvalue.field
    m = shift_matrix(field, n, n, 1)
    rows = [list(r) for r in m.rows]
    for i in range(n):
        rows[i][i] = eigenvalue.value
    return Mat(field, rows, _raw=True)


def kron(a: Mat, b: Mat) -> Mat:
    """Kronecker product; block (i, j) equals a[i][j] * b."""
    a._check(b)
    p = a.field.p
    out = []
    for arow in a.rows:
        for brow_i in range(b.nrows):
            brow = b.rows[brow_i]
            line = []
            for aval in arow:
                if not aval:
                    line.extend([_raw_zero(a.field)] * b.ncols)
                elif p is None:
                    line.extend([aval * bv for bv in brow])
                else:
                    line.extend([aval * bv % p for bv in brow])
            out.append(line)
    return Mat(a.field, out, _raw=True)


def direct_sum(a: Mat, b: Mat) -> Mat:
    """Block-diagonal sum; a zero-dimensional summand acts as identity."""
    a._check(b)
    if b.nrows == 0 and b.ncols == 0:
        return a
    if a.nrows == 0 and a.ncols == 0:
        return b
    z = _raw_zero(a.field)
    out = []
    for row in a.rows:
        out.append(list(row) + [z] * b.ncols)
    for row in b.rows:
        out.append([z] * a.ncols + list(row))
    return Mat(a.field, out, _raw=True)


# --- elimination ------------------------------------------------------------


def rref_raw(rows: list[list], field: FieldSpec, pivot_limit: int | None = None):
    """In-place reduced row echelon form; returns pivot column list.

    Pivot selection: columns left to right (up to pivot_limit), first
    nonzero entry from the top of the unreduced block.
    """
    if not rows:
        return []
    p = field.p
    ncols = len(rows[0])
    limit = ncols if pivot_limit is None else pivot_limit
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(limit):
        pivot_row = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        prow = rows[r]
        pv = prow[c]
        if pv != _raw_one(field):
            inv = field.raw_inv(pv)
            if p is None:
                rows[r] = prow = [v * inv for v in prow]
            else:
                rows[r] = prow = [v * inv % p for v in prow]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if not f:
                continue
            row = rows[i]
            if p is None:
                rows[i] = [v - f * pv2 for v, pv2 in zip(row, prow)]
            else:
                rows[i] = [(v - f * pv2) % p for v, pv2 in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def kernel_raw(a: Mat) -> list[list]:
    """Right null space basis as raw column vectors."""
    field = a.field
    rows = [list(r) for r in a.rows]
    pivots = rref_raw(rows, field)
    z, o = _raw_zero(field), _raw_one(field)
    pivot_set = set(pivots)
    basis = []
    p = field.p
    for free in range(a.ncols):
        if free in pivot_set:
            continue
        v = [z] * a.ncols
        v[free] = o
        for r, pc in enumerate(pivots):
            coeff = rows[r][free]
            if coeff:
                v[pc] = (-coeff) % p if p is not None else -coeff
        basis.append(v)
    return basis


def kernel_basis(a: Mat) -> list[list[Scalar]]:
    """Basis of {v : a v = 0}, in the eliminator's canonical form."""
    return [[Scalar(a.field, x) for x in v] for v in kernel_raw(a)]


def rank(a: Mat) -> int:
    rows = [list(r) for r in a.rows]
    return len(rref_raw(rows, a.field))


def inverse(a: Mat) -> Mat:
    if not a.is_square:
        raise NonSquare(f"inverse of {a.shape}")
    n = a.nrows
    field = a.field
    z, o = _raw_zero(field), _raw_one(field)
    rows = []
    for i, row in enumerate(a.rows):
        aug = list(row) + [z] * n
        aug[n + i] = o
        rows.append(aug)
    pivots = rref_raw(rows, field, pivot_limit=n)
    if len(pivots) != n:
        raise Singular(f"rank {len(pivots)} < {n}")
    return Mat(field, [row[n:] for row in rows], _raw=True)


def solve_raw(a: Mat, b: list) -> list | None:
    """One solution of a x = b (free variables zero), or None."""
    if len(b) != a.nrows:
        raise SizeMismatch(f"{a.shape} with rhs of length {len(b)}")
    field = a.field
    rows = [list(r) + [bv] for r, bv in zip(a.rows, b)]
    if not rows:
        return [_raw_zero(field)] * a.ncols
    pivots = rref_raw(rows, field, pivot_limit=a.ncols)
    # inconsistent iff a nonzero entry remains in the rhs column below the pivots
    for i in range(len(pivots), a.nrows):
        if rows[i][a.ncols]:
            return None
    x = [_raw_zero(field)] * a.ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][a.ncols]
    return x


def solve(a: Mat, b: list[Scalar]) -> list[Scalar] | None:
    raw = solve_raw(a, [a.field.coerce(v) for v in b])
    if raw is None:
        return None
    return [Scalar(a.field, v) for v in raw]


class Echelon:
    """Incremental row echelon over raw vectors.

    Feeds a stream of vectors; keeps an independent, pivot-normalized
    subset and (optionally) the expression of each kept row in terms of
    the vectors fed in so far.  Used for span membership and for
    extending partial bases deterministically.
    """

    __slots__ = ("field", "track", "pivots", "rows", "combos", "fed")

    def __init__(self, field: FieldSpec, track: bool = False):
        self.field = field
        self.track = track
        self.pivots: list[int] = []
        self.rows: list[list] = []
        self.combos: list[list] = []
        self.fed = 0

    def _reduce(self, v: list):
        """Return (residual, gammas) with v = residual + sum(g * row)."""
        p = self.field.p
        v = list(v)
        gammas = [_raw_zero(self.field)] * len(self.rows)
        for r, (pc, row) in enumerate(zip(self.pivots, self.rows)):
            f = v[pc]
            if not f:
                continue
            gammas[r] = f
            if p is None:
                v = [a - f * b for a, b in zip(v, row)]
            else:
                v = [(a - f * b) % p for a, b in zip(v, row)]
        return v, gammas

    def add(self, v) -> bool:
        """Feed one vector; True if it enlarged the span."""
        idx = self.fed
        self.fed += 1
        res, gammas = self._reduce(v)
        pc = next((i for i, x in enumerate(res) if x), None)
        if pc is None:
            return False
        p = self.field.p
        inv = self.field.raw_inv(res[pc])
        if p is None:
            row = [x * inv for x in res]
        else:
            row = [x * inv % p for x in res]
        combo = None
        if self.track:
            combo = [_raw_zero(self.field)] * (idx + 1)
            combo[idx] = inv if p is None else inv % p
            for r, g in enumerate(gammas):
                if not g:
                    continue
                gi = g * inv
                if p is not None:
                    gi %= p
                old = self.combos[r]
                for i, cv in enumerate(old):
                    if cv:
                        combo[i] -= gi * cv
                        if p is not None:
                            combo[i] %= p
        # keep rows sorted by pivot column so reduction is deterministic
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < pc:
            pos += 1
        self.pivots.insert(pos, pc)
        self.rows.insert(pos, row)
        if self.track:
            self.combos.insert(pos, combo)
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v) -> bool:
        res, _ = self._reduce(v)
        return not any(res)

    def coordinates(self, v) -> list | None:
        """Coefficients over the fed vectors expressing v, or None.

        Requires track=True and that every fed vector was independent
        (each add() returned True), so the coefficient list has one slot
        per fed vector.
        """
        if not self.track:
            raise ValueError("echelon built without tracking")
        res, gammas = self._reduce(v)
        if any(res):
            return None
        p = self.field.p
        out = [_raw_zero(self.field)] * self.fed
        for r, g in enumerate(gammas):
            if not g:
                continue
            for i, cv in enumerate(self.combos[r]):
                if cv:
                    out[i] += g * cv
                    if p is not None:
                        out[i] %= p
        return out
