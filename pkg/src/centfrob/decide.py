"""Classify centralizer algebras from invariant factors.

decide() digests a square matrix c into a DecisionReport: is the algebra
S_n(c,F) a Frobenius extension of F, is it separable, and what witnesses
back that up.  Both verdicts are read off the invariant factor chain
d_1 | ... | d_k of xI - c:

  frobenius          gcd(d_i, d_k / d_i) = 1 for every i < k
  separable          gcd(d_k, d_k') = 1

Over the perfect base fields supported here the exponent of an
irreducible factor inside each d_i equals a geometric block size, so the
gcd conditions say exactly "all blocks of one eigenvalue share a size"
and "all blocks have size one".  When the characteristic polynomial
splits over the base field the block sizes are computed directly and the
two readings are cross-checked; a disagreement is a bug, not an answer,
and raises ConsistencyError.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dataclass_field

from . import jsonio
from .canon import (
    InvariantFactors,
    JordanSpec,
    invariant_factors,
    jordan_structure,
    jordan_transform,
)
from .errors import ConsistencyError, NonSquare
from .frobsys import (
    EqualSizeViolation,
    FrobeniusSystem,
    SearchSpace,
    build_centralizer_system,
    conjugate_system,
    separability_probe,
)
from .matrices import Mat, inverse

YES = "yes"
NO = "no"


@dataclass
class DecisionReport:
    """Structured verdict for one input matrix.

    The yes/no fields hold the literal strings "yes" and "no" so the
    in-memory report and its JSON form read identically.
    """

    input_digest: dict
    invariant_factors: InvariantFactors
    frobenius: str
    separable_frobenius: str
    diagonalizable_over_closure: str
    split_over_base: str
    jordan: JordanSpec | None = None
    witness_system: FrobeniusSystem | None = None
    separability_probe: dict | None = None
    warnings: list[str] = dataclass_field(default_factory=list)


@dataclass
class BatchFailure:
    """Per-entry error carrier for decide_batch."""

    kind: str
    error: str


def _verdict(flag: bool) -> str:
    return YES if flag else NO


def _gcd_frobenius(chain) -> bool:
    """gcd(d_i, d_k / d_i) = 1 for every proper member of the chain."""
    from .polys import poly_divrem, poly_gcd

    top = chain[-1]
    for d in chain[:-1]:
        quot, rem = poly_divrem(top, d)
        if not rem.is_zero:
            raise ConsistencyError(f"chain member {d} does not divide {top}")
        if poly_gcd(d, quot).degree != 0:
            return False
    return True


def _gcd_separable(chain) -> bool:
    """Minimal polynomial squarefree: gcd(d_k, d_k') = 1."""
    from .polys import derivative, poly_gcd

    top = chain[-1]
    return poly_gcd(top, derivative(top)).degree == 0


def decide(c: Mat) -> DecisionReport:
    """Full classification of S_n(c, F) over the base field of c."""
    if not c.is_square:
        raise NonSquare(f"decide needs a square matrix, got {c.shape}")
    field = c.field
    n = c.nrows
    digest = {
        "size": [n, n],
        "field": jsonio.field_to_json(field),
        "sha256": jsonio.matrix_digest(c),
    }

    inv = invariant_factors(c)
    frob = _gcd_frobenius(inv.chain)
    sep = _gcd_separable(inv.chain)
    if sep and not frob:
        raise ConsistencyError(
            "separable verdict without frobenius verdict on " + digest["sha256"]
        )

    warnings: list[str] = []
    if field.p is not None and field.p <= n:
        warnings.append(
            f"characteristic caveat: base field GF({field.p}) has p <= {n}, "
            "the ambient size; the separability classification assumes "
            "1..n invertible, so verdicts follow the invariant-factor "
            "criterion alone"
        )

    structure = jordan_structure(c, charpoly=inv.characteristic_polynomial)
    jordan: JordanSpec | None = None
    witness: FrobeniusSystem | None = None
    probe: dict | None = None
    if structure is not None:
        jordan = JordanSpec(
            tuple(
                (eig, size) for eig, sizes in structure for size in sizes
            )
        )
        frob_literal = all(len(set(sizes)) == 1 for _, sizes in structure)
        sep_literal = all(
            all(s == 1 for s in sizes) for _, sizes in structure
        )
        if frob_literal != frob or sep_literal != sep:
            raise ConsistencyError(
                "gcd criterion disagrees with literal block sizes on "
                + digest["sha256"]
            )
        if frob:
            u, jspec = jordan_transform(c, structure=structure)
            system = build_centralizer_system(jspec)
            if isinstance(system, EqualSizeViolation):
                raise ConsistencyError(
                    "equal-size violation on a matrix already judged Frobenius"
                )
            if u != Mat.identity(field, n):
                system = conjugate_system(system, inverse(u))
            witness = system
            probe = separability_probe(witness)
            warnings.extend(probe.pop("warnings"))

    return DecisionReport(
        input_digest=digest,
        invariant_factors=inv,
        frobenius=_verdict(frob),
        separable_frobenius=_verdict(sep),
        diagonalizable_over_closure=_verdict(sep),
        split_over_base=_verdict(structure is not None),
        jordan=jordan,
        witness_system=witness,
        separability_probe=probe,
        warnings=warnings,
    )


def _decide_entry(c: Mat) -> DecisionReport | BatchFailure:
    try:
        return decide(c)
    except Exception as exc:  # isolate per entry, whatever went wrong
        return BatchFailure(kind=type(exc).__name__, error=str(exc))


def decide_batch(
    inputs: list[Mat], jobs: int | None = None
) -> list[DecisionReport | BatchFailure]:
    """Independent decide per input; failures become BatchFailure entries.

    With jobs > 1 the entries run in a process pool; pool-level trouble
    (not per-entry errors) falls back to the sequential path.
    """
    inputs = list(inputs)
    if not inputs:
        return []
    if jobs is not None and jobs > 1 and len(inputs) > 1:
        try:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                return list(pool.map(_decide_entry, inputs))
        except Exception:
            pass
    return [_decide_entry(c) for c in inputs]
