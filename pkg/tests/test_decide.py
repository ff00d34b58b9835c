"""End-to-end classification: verdicts, witnesses, batch behavior."""

import itertools
import random

import pytest

import helpers
from centfrob.canon import build_jordan_matrix
from centfrob.centralizer import centralizer_basis
from centfrob.decide import BatchFailure, DecisionReport, decide, decide_batch
from centfrob.errors import NonSquare
from centfrob.fields import gf, rationals
from centfrob.frobsys import SearchSpace
from centfrob.matrices import Mat, direct_sum, inverse, jordan_block

Q = rationals()

# the worked trio: one eigenvalue with mixed sizes, two eigenvalues with
# one size each, and a matrix that only splits over an extension
MIXED_SIZES = Mat(Q, [[0, 1, 1], [-1, 2, 1], [0, 0, 1]])
TWO_EIGENVALUES = Mat(Q, [[0, 0, 0], [0, 1, 1], [0, 0, 1]])
ROTATION = Mat(Q, [[0, -1], [1, 0]])


def test_mixed_block_sizes_refuse_frobenius():
    report = decide(MIXED_SIZES)
    assert report.frobenius == "no"
    assert report.separable_frobenius == "no"
    assert report.split_over_base == "yes"
    assert report.jordan is not None
    assert [(str(e), s) for e, s in report.jordan.blocks] == [("1", 2), ("1", 1)]
    assert report.witness_system is None
    assert report.separability_probe is None
    chain = [str(f) for f in report.invariant_factors.chain]
    assert len(chain) == 2


def test_two_eigenvalues_frobenius_but_not_separable():
    report = decide(TWO_EIGENVALUES)
    assert report.frobenius == "yes"
    assert report.separable_frobenius == "no"
    assert report.split_over_base == "yes"
    assert report.diagonalizable_over_closure == "no"
    # single cyclic invariant factor x(x-1)^2
    assert len(report.invariant_factors.chain) == 1
    assert report.invariant_factors.chain[0].degree == 3
    witness = report.witness_system
    assert witness is not None
    assert witness.verified
    assert witness.algebra.same_span(centralizer_basis(TWO_EIGENVALUES))
    probe = report.separability_probe
    assert probe is not None
    assert probe[SearchSpace.RELATIVE_CENTRALIZER] is None


def test_rotation_is_separable_without_splitting():
    report = decide(ROTATION)
    assert report.frobenius == "yes"
    assert report.separable_frobenius == "yes"
    assert report.split_over_base == "no"
    assert report.diagonalizable_over_closure == "yes"
    assert report.jordan is None
    assert report.witness_system is None

    # the same matrix over GF(5) splits and gets a verified witness
    f5 = gf(5)
    report5 = decide(Mat(f5, [[0, -1], [1, 0]]))
    assert report5.split_over_base == "yes"
    assert report5.separable_frobenius == "yes"
    assert report5.witness_system is not None
    assert report5.separability_probe[SearchSpace.SCALARS_OF_BASE] is not None


def test_decide_rejects_nonsquare():
    with pytest.raises(NonSquare):
        decide(Mat(Q, [[1, 2, 3]]))


def test_digest_is_stable_and_input_sensitive():
    a = decide(MIXED_SIZES)
    b = decide(MIXED_SIZES)
    assert a.input_digest == b.input_digest
    assert a.input_digest["size"] == [3, 3]
    assert a.input_digest["field"] == "Q"
    c = decide(TWO_EIGENVALUES)
    assert c.input_digest["sha256"] != a.input_digest["sha256"]


def test_every_two_by_two_over_gf3():
    """Exhaustive 2x2 sanity: verdicts agree with first principles."""
    f3 = gf(3)
    for entries in itertools.product(range(3), repeat=4):
        c = Mat(f3, [list(entries[:2]), list(entries[2:])])
        report = decide(c)
        # 2x2 can only fail Frobenius with two blocks of sizes {1,1} at
        # one eigenvalue (that is the scalar case, which IS equal) so
        # every 2x2 is Frobenius
        assert report.frobenius == "yes"
        if report.split_over_base == "yes":
            sizes = [s for _, s in report.jordan.blocks]
            expect_sep = all(s == 1 for s in sizes)
            assert (report.separable_frobenius == "yes") == expect_sep
            assert report.witness_system is not None
            assert report.witness_system.verified
        else:
            # irreducible characteristic polynomial: separable
            assert report.separable_frobenius == "yes"


def test_random_two_by_two_over_q_are_frobenius():
    rng = random.Random(107)
    for _ in range(100):
        c = helpers.rand_matrix(Q, 2, 2, rng)
        report = decide(c)
        assert report.frobenius == "yes"
        assert (report.separable_frobenius == "yes") == (
            report.diagonalizable_over_closure == "yes"
        )


def test_witness_spans_the_centralizer_of_the_input():
    rng = random.Random(109)
    for field in (Q, gf(7)):
        for _ in range(10):
            shapes = [((2,), (1,)), ((1, 1),), ((3,),), ((2, 2),)]
            parts = shapes[rng.randrange(len(shapes))]
            spec = helpers.spec_from_partitions(field, parts)
            j = build_jordan_matrix(spec)
            v = helpers.rand_unimodular(field, spec.total, rng)
            c = v * j * inverse(v)
            report = decide(c)
            assert report.frobenius == "yes"
            witness = report.witness_system
            assert witness is not None
            assert witness.verified
            assert witness.algebra.same_span(centralizer_basis(c))
            for m in witness.algebra.elements:
                assert m * c == c * m


def test_report_invariants_on_random_inputs():
    """separable implies frobenius; witness implies split and frobenius."""
    rng = random.Random(113)
    for field in (Q, gf(5)):
        for _ in range(30):
            n = rng.randrange(1, 5)
            c = helpers.rand_matrix(field, n, n, rng)
            report = decide(c)
            if report.separable_frobenius == "yes":
                assert report.frobenius == "yes"
            assert report.separable_frobenius == report.diagonalizable_over_closure
            if report.witness_system is not None:
                assert report.split_over_base == "yes"
                assert report.frobenius == "yes"
                assert report.witness_system.verified
            if report.split_over_base == "yes":
                assert report.jordan is not None
                assert report.jordan.total == n


def test_characteristic_caveat_warning():
    f2 = gf(2)
    report = decide(Mat(f2, [[1, 1], [0, 1]]))
    assert any("characteristic caveat" in w for w in report.warnings)
    # characteristic comfortably above n: no caveat
    report = decide(Mat(gf(7), [[1, 1], [0, 1]]))
    assert not any("characteristic caveat" in w for w in report.warnings)


def test_probe_disagreement_surfaces_in_report_warnings():
    """M_2 over GF(2): separable by gcd, but no base-scalar witness."""
    f2 = gf(2)
    c = Mat(f2, [[0, 1], [1, 0]])  # eigenvalues 1, 1? no: x^2-1=(x-1)^2 mod 2
    report = decide(c)
    # this one is NOT separable: (x-1)^2 is the minimal polynomial
    assert report.separable_frobenius == "no"

    d = Mat(f2, [[0, 1], [1, 1]])  # irreducible x^2+x+1: no witness built
    report = decide(d)
    assert report.split_over_base == "no"

    e = Mat(f2, [[0, 0], [0, 1]])  # diag(0,1): M_1 x M_1, scalars solve it
    report = decide(e)
    assert report.separable_frobenius == "yes"
    assert report.separability_probe[SearchSpace.SCALARS_OF_BASE] is not None


def test_batch_empty_and_small():
    assert decide_batch([]) == []
    out = decide_batch([Mat.identity(Q, 2), jordan_block(2, Q.zero)])
    assert len(out) == 2
    assert all(isinstance(r, DecisionReport) for r in out)
    assert out[0].separable_frobenius == "yes"
    assert out[1].separable_frobenius == "no"
    assert out[1].frobenius == "yes"


def test_batch_isolates_failures_in_order():
    good = Mat.identity(Q, 2)
    bad = Mat(Q, [[1, 2, 3]])
    out = decide_batch([good, bad, good])
    assert isinstance(out[0], DecisionReport)
    assert isinstance(out[1], BatchFailure)
    assert out[1].kind == "NonSquare"
    assert isinstance(out[2], DecisionReport)


def test_batch_parallel_matches_sequential():
    rng = random.Random(127)
    mats = [helpers.rand_matrix(Q, 2, 2, rng) for _ in range(6)]
    mats.append(Mat(gf(3), [[1, 1], [0, 1]]))
    seq = decide_batch(mats)
    par = decide_batch(mats, jobs=2)
    assert len(seq) == len(par)
    for a, b in zip(seq, par):
        assert type(a) is type(b)
        if isinstance(a, DecisionReport):
            assert a.input_digest == b.input_digest
            assert a.frobenius == b.frobenius
            assert a.separable_frobenius == b.separable_frobenius
            assert a.warnings == b.warnings


def test_single_entry_never_uses_the_pool():
    out = decide_batch([Mat.identity(Q, 1)], jobs=4)
    assert len(out) == 1
    assert out[0].separable_frobenius == "yes"
