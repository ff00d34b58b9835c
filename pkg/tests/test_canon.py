"""Invariant factors, Jordan structure, and the explicit transform."""

import random

import pytest

import helpers
from centfrob.canon import (
    InvariantFactors,
    JordanSpec,
    build_jordan_matrix,
    invariant_factors,
    jordan_structure,
    jordan_transform,
    poly_eval_matrix,
)
from centfrob.errors import NonSquare, NotSplit, SizeMismatch
from centfrob.fields import gf, rationals
from centfrob.matrices import Mat, direct_sum, inverse, jordan_block
from centfrob.polys import Poly, poly_divrem

Q = rationals()


def lin(field, root):
    """x - root as a Poly."""
    return Poly.linear(field.scalar(root))


def test_jordan_spec_validation():
    with pytest.raises(SizeMismatch):
        JordanSpec(())
    with pytest.raises(SizeMismatch):
        JordanSpec(((Q.one, 0),))
    spec = JordanSpec(((Q.scalar(2), 1), (Q.scalar(1), 3), (Q.scalar(1), 1)))
    assert spec.total == 5
    assert spec.canonical().blocks == (
        (Q.scalar(1), 3),
        (Q.scalar(1), 1),
        (Q.scalar(2), 1),
    )
    assert spec.grouped() == [
        (Q.scalar(1), [3, 1]),
        (Q.scalar(2), [1]),
    ]


def test_build_jordan_matrix():
    spec = JordanSpec(((Q.one, 2), (Q.zero, 1)))
    assert build_jordan_matrix(spec) == Mat(Q, [[1, 1, 0], [0, 1, 0], [0, 0, 0]])


def test_invariant_factors_examples():
    # J_2(1) + J_1(1): two blocks, same eigenvalue
    c = direct_sum(jordan_block(2, Q.one), jordan_block(1, Q.one))
    inv = invariant_factors(c)
    assert list(inv.chain) == [lin(Q, 1), lin(Q, 1) * lin(Q, 1)]
    assert inv.minimal_polynomial == lin(Q, 1) * lin(Q, 1)

    # J_1(0) + J_2(1): distinct eigenvalues, single cyclic factor x(x-1)^2
    c = direct_sum(jordan_block(1, Q.zero), jordan_block(2, Q.one))
    inv = invariant_factors(c)
    assert list(inv.chain) == [lin(Q, 0) * lin(Q, 1) * lin(Q, 1)]

    # identity: n copies of (x - 1)
    inv = invariant_factors(Mat.identity(Q, 4))
    assert list(inv.chain) == [lin(Q, 1)] * 4


def test_invariant_factors_divisibility_and_annihilation():
    rng = random.Random(61)
    for field in (Q, gf(5)):
        for _ in range(25):
            n = rng.randrange(1, 6)
            c = helpers.rand_matrix(field, n, n, rng)
            inv = invariant_factors(c)
            for a, b in zip(inv.chain, inv.chain[1:]):
                _, rem = poly_divrem(b, a)
                assert rem.is_zero
            for f in inv.chain:
                assert f.is_monic
            # the minimal polynomial annihilates c
            assert poly_eval_matrix(inv.minimal_polynomial, c).is_zero
            assert inv.characteristic_polynomial.degree == n


def test_characteristic_polynomial_against_cofactor_expansion():
    """Product of the chain equals det(xI - c) computed independently."""
    rng = random.Random(67)
    for field in (Q, gf(5)):
        for _ in range(30):
            n = rng.randrange(1, 6)
            c = helpers.rand_matrix(field, n, n, rng)
            expected = helpers.charpoly_cofactor(c).monic()
            assert invariant_factors(c).characteristic_polynomial == expected


def test_invariant_factors_rejects_nonsquare():
    with pytest.raises(NonSquare):
        invariant_factors(Mat(Q, [[1, 2, 3]]))


def test_jordan_structure_examples():
    # one eigenvalue, blocks of sizes 2 and 1
    a = Mat(Q, [[0, 1, 1], [-1, 2, 1], [0, 0, 1]])
    assert jordan_structure(a) == [(Q.one, [2, 1])]

    # eigenvalues 0 and 1 with one block each
    b = direct_sum(jordan_block(1, Q.zero), jordan_block(2, Q.one))
    assert jordan_structure(b) == [(Q.zero, [1]), (Q.one, [2])]

    # rotation matrix does not split over Q
    assert jordan_structure(Mat(Q, [[0, -1], [1, 0]])) is None

    # same matrix splits over GF(5): x^2 + 1 = (x-2)(x-3)
    f5 = gf(5)
    assert jordan_structure(Mat(f5, [[0, -1], [1, 0]])) == [
        (f5.scalar(2), [1]),
        (f5.scalar(3), [1]),
    ]

    # scalar matrix
    assert jordan_structure(Mat.identity(Q, 3).scale(2)) == [(Q.scalar(2), [1, 1, 1])]


def test_jordan_structure_accepts_precomputed_charpoly():
    c = direct_sum(jordan_block(2, Q.one), jordan_block(1, Q.one))
    cp = invariant_factors(c).characteristic_polynomial
    assert jordan_structure(c, cp) == jordan_structure(c)


def test_jordan_transform_identity_cases():
    j = jordan_block(3, Q.zero)
    u, spec = jordan_transform(j)
    assert u == Mat.identity(Q, 3)
    assert spec.blocks == ((Q.zero, 3),)


def test_jordan_transform_reorders_diagonal():
    """diag(3, 1) is permuted into canonical ascending order by a swap."""
    c = Mat(Q, [[3, 0], [0, 1]])
    u, spec = jordan_transform(c)
    assert spec.blocks == ((Q.one, 1), (Q.scalar(3), 1))
    assert u == Mat(Q, [[0, 1], [1, 0]])
    assert inverse(u) * c * u == build_jordan_matrix(spec)


def test_jordan_transform_rejects_non_split():
    with pytest.raises(NotSplit):
        jordan_transform(Mat(Q, [[0, -1], [1, 0]]))


def test_jordan_transform_round_trip_random():
    """u^{-1} c u equals the canonical Jordan matrix of the reported spec."""
    rng = random.Random(71)
    for field in (Q, gf(7)):
        for _ in range(25):
            shapes = helpers.shapes_up_to(5)
            parts = shapes[rng.randrange(len(shapes))]
            if field.p is not None and len(parts) > field.p:
                continue
            spec = helpers.spec_from_partitions(field, parts)
            j = build_jordan_matrix(spec)
            v = helpers.rand_unimodular(field, spec.total, rng)
            c = v * j * inverse(v)
            u, found = jordan_transform(c)
            assert inverse(u) * c * u == build_jordan_matrix(found)
            # canonical spec is recovered exactly (same multiset of blocks,
            # eigenvalues ascending, sizes descending within an eigenvalue)
            assert found == spec.canonical()


def test_jordan_structure_matches_invariant_factor_exponents():
    """Block sizes of eigenvalue lam = exponents of (x - lam) in the chain."""
    rng = random.Random(73)
    for _ in range(25):
        shapes = helpers.shapes_up_to(5)
        parts = shapes[rng.randrange(len(shapes))]
        spec = helpers.spec_from_partitions(Q, parts)
        c = build_jordan_matrix(spec)
        chain = invariant_factors(c).chain
        structure = jordan_structure(c)
        assert structure is not None
        for eig, sizes in structure:
            factor = Poly.linear(eig)
            exps = []
            for d in chain:
                e = 0
                while True:
                    q, rem = poly_divrem(d, factor)
                    if not rem.is_zero:
                        break
                    d = q
                    e += 1
                if e:
                    exps.append(e)
            assert sorted(exps, reverse=True) == sizes


def test_invariant_factors_validation():
    x = Poly.x(Q)
    one = Poly.one(Q)
    with pytest.raises(SizeMismatch):
        InvariantFactors(())
    with pytest.raises(SizeMismatch):
        InvariantFactors((x * x, x))  # wrong divisibility order
    with pytest.raises(SizeMismatch):
        InvariantFactors((one,))  # constants are dropped, never stored
