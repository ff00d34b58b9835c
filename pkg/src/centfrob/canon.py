"""Canonical forms: invariant factors and Jordan data.

The invariant factors of a square matrix c are read off the Smith normal
form of xI - c over F[x], computed with unimodular row/column operations
and a degree-minimal pivot rule.  Jordan block data is derived from rank
sequences of (c - lambda*I)^k; the explicit transform is assembled from
kernel-filtration chains.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonSquare, NotSplit, SizeMismatch
from .fields import FieldSpec, Scalar
from .matrices import (
    Echelon,
    Mat,
    _raw_zero,
    direct_sum,
    jordan_block,
    kernel_raw,
    rank,
)
from .polys import Poly, poly_divrem, rational_roots


def scalar_key(s: Scalar):
    """Sort key giving the canonical eigenvalue order (ascending value)."""
    return s.value


@dataclass(frozen=True)
class InvariantFactors:
    """Nonunit diagonal of the Smith form of xI - c, in divisibility order."""

    chain: tuple[Poly, ...]

    def __post_init__(self):
        if not self.chain:
            raise SizeMismatch("empty invariant factor chain")
        for f in self.chain:
            if not f.is_monic or f.degree < 1:
                raise SizeMismatch(f"invariant factor {f} is not monic nonconstant")
        for a, b in zip(self.chain, self.chain[1:]):
            _, rem = poly_divrem(b, a)
            if not rem.is_zero:
                raise SizeMismatch(f"{a} does not divide {b}")

    @property
    def field(self) -> FieldSpec:
        return self.chain[0].field

    @property
    def minimal_polynomial(self) -> Poly:
        return self.chain[-1]

    @property
    def characteristic_polynomial(self) -> Poly:
        out = Poly.one(self.field)
        for f in self.chain:
            out = out * f
        return out


@dataclass(frozen=True)
class JordanSpec:
    """An ordered list of (eigenvalue, size) Jordan blocks."""

    blocks: tuple[tuple[Scalar, int], ...]

    def __post_init__(self):
        if not self.blocks:
            raise SizeMismatch("empty Jordan spec")
        field = self.blocks[0][0].field
        for eig, size in self.blocks:
            if eig.field != field:
                raise SizeMismatch("mixed fields in Jordan spec")
            if size < 1:
                raise SizeMismatch(f"block size {size}")

    @property
    def field(self) -> FieldSpec:
        return self.blocks[0][0].field

    @property
    def total(self) -> int:
        return sum(size for _, size in self.blocks)

    def canonical(self) -> "JordanSpec":
        """Blocks sorted by eigenvalue ascending, then size descending."""
        order = sorted(
            self.blocks, key=lambda b: (scalar_key(b[0]), -b[1])
        )
        return JordanSpec(tuple(order))

    def grouped(self) -> list[tuple[Scalar, list[int]]]:
        """Sizes per eigenvalue, eigenvalues in canonical order."""
        seen: dict = {}
        for eig, size in self.blocks:
            seen.setdefault(scalar_key(eig), (eig, []))[1].append(size)
        return [
            (eig, sorted(sizes, reverse=True))
            for _, (eig, sizes) in sorted(seen.items(), key=lambda kv: kv[0])
        ]


def build_jordan_matrix(spec: JordanSpec) -> Mat:
    out = None
    for eig, size in spec.blocks:
        block = jordan_block(size, eig)
        out = block if out is None else direct_sum(out, block)
    return out


def char_matrix(c: Mat) -> list[list[Poly]]:
    """xI - c as a grid of polynomials."""
    if not c.is_square:
        raise NonSquare(f"characteristic matrix of {c.shape}")
    field = c.field
    n = c.nrows
    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(Poly(field, (-c.rows[i][j], 1)))
            else:
                row.append(Poly(field, (-c.rows[i][j],)))
        grid.append(row)
    return grid


def _smith_diagonal(grid: list[list[Poly]], field: FieldSpec) -> list[Poly]:
    """Smith normal form diagonal of a square polynomial matrix.

    Unimodular row/column operations only; the pivot at each stage is a
    nonzero entry of minimal degree in the trailing submatrix, ties
    broken by smallest row then column.
    """
    n = len(grid)
    a = [list(row) for row in grid]

    def pick_pivot(t: int):
        best = None
        for i in range(t, n):
            for j in range(t, n):
                if not a[i][j].is_zero:
                    d = a[i][j].degree
                    if best is None or d < best[0]:
                        best = (d, i, j)
        return best

    for t in range(n):
        while True:
            best = pick_pivot(t)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                if a[i][t].is_zero:
                    continue
                q, r = poly_divrem(a[i][t], pivot)
                if not q.is_zero:
                    for col in range(t, n):
                        a[i][col] = a[i][col] - q * a[t][col]
                if not r.is_zero:
                    dirty = True
            for j in range(t + 1, n):
                if a[t][j].is_zero:
                    continue
                q, r = poly_divrem(a[t][j], pivot)
                if not q.is_zero:
                    for row in range(t, n):
                        a[row][j] = a[row][j] - q * a[row][t]
                if not r.is_zero:
                    dirty = True
            if dirty:
                continue
            # row and column are clear; enforce divisibility into the rest
            fix = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if a[i][j].is_zero:
                        continue
                    _, rem = poly_divrem(a[i][j], pivot)
                    if not rem.is_zero:
                        fix = i
                        break
                if fix is not None:
                    break
            if fix is None:
                break
            for col in range(t, n):
                a[t][col] = a[t][col] + a[fix][col]
        if not a[t][t].is_zero:
            a[t][t] = a[t][t].monic()
    return [a[t][t] for t in range(n)]


def invariant_factors(c: Mat) -> InvariantFactors:
    """Invariant factor chain d_1 | d_2 | ... of xI - c."""
    diag = _smith_diagonal(char_matrix(c), c.field)
    chain = tuple(f for f in diag if f.degree >= 1)
    inv = InvariantFactors(chain)
    if inv.characteristic_polynomial.degree != c.nrows:
        raise SizeMismatch("invariant factor degrees do not sum to n")
    return inv


def jordan_structure(
    c: Mat, charpoly: Poly | None = None
) -> list[tuple[Scalar, list[int]]] | None:
    """Block sizes per eigenvalue, or None when c does not split over F.

    The number of blocks of size >= k for eigenvalue lam equals
    rank((c - lam I)^(k-1)) - rank((c - lam I)^k).  A precomputed
    characteristic polynomial skips the Smith form pass.
    """
    if not c.is_square:
        raise NonSquare(f"jordan structure of {c.shape}")
    n = c.nrows
    if charpoly is None:
        charpoly = invariant_factors(c).characteristic_polynomial
    roots = rational_roots(charpoly)
    if sum(m for _, m in roots) != n:
        return None
    out = []
    ident = Mat.identity(c.field, n)
    for eig, mult in roots:
        nilp = c - ident.scale(eig)
        ranks = [n]
        power = ident
        while ranks[-1] > n - mult:
            power = power * nilp
            ranks.append(rank(power))
        ge = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
        ge.append(0)
        sizes = []
        for k in range(1, len(ge)):
            sizes.extend([k] * (ge[k - 1] - ge[k]))
        sizes.sort(reverse=True)
        assert sum(sizes) == mult
        out.append((eig, sizes))
    return out


def jordan_transform(
    c: Mat, structure: list[tuple[Scalar, list[int]]] | None = None
) -> tuple[Mat, JordanSpec]:
    """Invertible u and spec with u^{-1} c u = build_jordan_matrix(spec).

    Raises NotSplit when the characteristic polynomial has irrational
    (or extension-field) roots.  Chain tops are chosen by feeding the
    kernel bases of (c - lam I)^k through a deterministic echelon.  A
    precomputed jordan_structure(c) result may be passed through.
    """
    if structure is None:
        structure = jordan_structure(c)
    if structure is None:
        raise NotSplit("characteristic polynomial does not split over the base field")
    field = c.field
    n = c.nrows
    ident = Mat.identity(field, n)
    columns: list[list] = []
    blocks: list[tuple[Scalar, int]] = []

    for eig, sizes in structure:
        nilp = c - ident.scale(eig)
        smax = sizes[0]
        powers = [ident]
        for _ in range(smax):
            powers.append(powers[-1] * nilp)
        kernels = [kernel_raw(powers[k]) for k in range(smax + 1)]

        def apply(matpow: Mat, vec: list) -> list:
            p = field.p
            out = []
            for row in matpow.rows:
                acc = _raw_zero(field)
                for a, b in zip(row, vec):
                    if a and b:
                        acc += a * b
                if p is not None:
                    acc %= p
                out.append(acc)
            return out

        tops: list[tuple[int, list]] = []  # (height, top vector)
        for k in range(smax, 0, -1):
            ech = Echelon(field)
            for v in kernels[k - 1]:
                ech.add(v)
            for height, w in tops:
                ech.add(apply(powers[height - k], w))
            for v in kernels[k]:
                if ech.add(v):
                    tops.append((k, v))
        # chains: heights descending, then discovery order
        tops.sort(key=lambda hw: -hw[0])
        for height, w in tops:
            for step in range(height - 1, -1, -1):
                columns.append(apply(powers[step], w))
            blocks.append((eig, height))

    rows = [[columns[j][i] for j in range(n)] for i in range(n)]
    u = Mat(field, rows, _raw=True)
    return u, JordanSpec(tuple(blocks))


def poly_eval_matrix(f: Poly, c: Mat) -> Mat:
    """Horner evaluation of f at a square matrix."""
    if not c.is_square:
        raise NonSquare(f"polynomial of {c.shape}")
    acc = Mat.zeros(c.field, c.nrows, c.nrows)
    ident = Mat.identity(c.field, c.nrows)
    for coeff in reversed(f.coeffs):
        acc = acc * c + ident.scale(Scalar(f.field, coeff))
    return acc
