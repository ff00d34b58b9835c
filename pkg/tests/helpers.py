"""Shared test utilities: shape enumeration, random matrices, oracles.

A "shape" here is a multiset of integer partitions: one partition of
block sizes per distinct eigenvalue.  Enumerating multisets (instead of
ordered tuples) avoids re-testing relabelings of the same geometry.
"""

from __future__ import annotations

import random
from fractions import Fraction

from centfrob.canon import JordanSpec
from centfrob.fields import FieldSpec
from centfrob.matrices import Mat
from centfrob.polys import Poly


def partitions(n: int, maxpart: int | None = None):
    """Integer partitions of n as descending tuples."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def shapes_of_total(total: int) -> list[tuple[tuple[int, ...], ...]]:
    """Multisets of partitions whose combined size is exactly total."""
    atoms = [
        tuple(p) for t in range(1, total + 1) for p in partitions(t)
    ]
    out: list[tuple[tuple[int, ...], ...]] = []

    def rec(remaining: int, start: int, acc: list) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(atoms)):
            part = atoms[i]
            if sum(part) <= remaining:
                acc.append(part)
                rec(remaining - sum(part), i, acc)
                acc.pop()

    rec(total, 0, [])
    return out


def shapes_up_to(total: int) -> list[tuple[tuple[int, ...], ...]]:
    out = []
    for t in range(1, total + 1):
        out.extend(shapes_of_total(t))
    return out


def equal_size_shapes_of_total(total: int) -> list[tuple[tuple[int, int], ...]]:
    """Multisets of (count, size) atoms with sum(count*size) = total.

    Each atom is one eigenvalue carrying `count` Jordan blocks that all
    share `size`; these are exactly the shapes the explicit constructor
    accepts.
    """
    atoms = [
        (m, s)
        for s in range(1, total + 1)
        for m in range(1, total // s + 1)
    ]
    out: list[tuple[tuple[int, int], ...]] = []

    def rec(remaining: int, start: int, acc: list) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(atoms)):
            m, s = atoms[i]
            if m * s <= remaining:
                acc.append((m, s))
                rec(remaining - m * s, i, acc)
                acc.pop()

    rec(total, 0, [])
    return out


def spec_from_partitions(
    field: FieldSpec,
    parts,
    eigs=None,
) -> JordanSpec:
    """JordanSpec assigning one eigenvalue per partition (0, 1, 2, ... by default)."""
    parts = list(parts)
    if eigs is None:
        eigs = list(range(len(parts)))
    blocks = []
    for eig, part in zip(eigs, parts):
        for size in part:
            blocks.append((field.scalar(eig), size))
    return JordanSpec(tuple(blocks))


def centralizer_dim_formula(parts) -> int:
    """sum over same-eigenvalue block pairs of min(size_i, size_j)."""
    return sum(
        min(a, b) for part in parts for a in part for b in part
    )


def rand_scalar(field: FieldSpec, rng: random.Random):
    if field.p is None:
        return field.scalar(Fraction(rng.randint(-5, 5)))
    return field.scalar(rng.randrange(field.p))


def rand_matrix(field: FieldSpec, m: int, n: int, rng: random.Random) -> Mat:
    if field.p is None:
        rows = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(m)]
    else:
        rows = [[rng.randrange(field.p) for _ in range(n)] for _ in range(m)]
    return Mat(field, rows)


def rand_unimodular(field: FieldSpec, n: int, rng: random.Random, ops: int | None = None) -> Mat:
    """Product of elementary shear matrices; always invertible."""
    if ops is None:
        ops = 3 * n
    u = Mat.identity(field, n)
    for _ in range(ops):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        if field.p is None:
            val = rng.choice([-2, -1, 1, 2])
        else:
            val = rng.randrange(1, field.p)
        rows = [
            [
                field.coerce(1) if r == c else field.coerce(0)
                for c in range(n)
            ]
            for r in range(n)
        ]
        rows[i][j] = field.coerce(val)
        u = u * Mat(field, rows, _raw=True)
    return u


def poly_det_cofactor(grid: list[list[Poly]]) -> Poly:
    """Determinant of a polynomial matrix by first-row cofactor expansion.

    Deliberately naive so it shares no code with the production Smith
    form path; intended for n <= 5.
    """
    n = len(grid)
    if n == 1:
        return grid[0][0]
    total = None
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in grid[1:]]
        term = grid[0][j] * poly_det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def charpoly_cofactor(c: Mat) -> Poly:
    """det(xI - c) via cofactor expansion, independent of the Smith path."""
    field = c.field
    n = c.nrows
    x = Poly.x(field)
    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = Poly.constant(c.entry(i, j))
            row.append(x - entry if i == j else -entry)
        grid.append(row)
    return poly_det_cofactor(grid)
