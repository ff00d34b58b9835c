"""From a matrix to its invariant factors, Jordan data, and back.

The invariant-factor chain d_1 | d_2 | ... | d_k of xI - c drives the
whole decision procedure: the top member is the minimal polynomial and
the gcd conditions on the chain settle the Frobenius and separability
questions without ever leaving the base field.
"""

from centfrob.canon import (
    build_jordan_matrix,
    invariant_factors,
    jordan_structure,
    jordan_transform,
)
from centfrob.fields import rationals
from centfrob.matrices import Mat, inverse


def main() -> None:
    q = rationals()
    c = Mat(q, [[2, 1, 0, 0],
                [0, 2, 0, 0],
                [0, 0, 2, 0],
                [0, 0, 0, 5]])

    chain = invariant_factors(c).chain
    print("invariant factors of xI - c:")
    for f in chain:
        print(f"  {f}")

    structure = jordan_structure(c)
    print("eigenvalues with block sizes:")
    for eig, sizes in structure:
        print(f"  {eig}: {sizes}")

    # the transform returns u with u^-1 c u equal to the Jordan matrix
    u, spec = jordan_transform(c)
    j = build_jordan_matrix(spec)
    print(f"canonical spec: {[(str(e), s) for e, s in spec.blocks]}")
    print(f"u^-1 c u == J: {inverse(u) * c * u == j}")

    # a matrix that the chain calls diagonalizable without eigenvalues:
    # x^2 + 1 is squarefree, so the rotation is separable over Q even
    # though its spectrum lives upstairs
    rotation = Mat(q, [[0, 1], [-1, 0]])
    top = invariant_factors(rotation).chain[-1]
    print(f"rotation minimal polynomial: {top}")
    print(f"rational eigenvalue structure: {jordan_structure(rotation)}")


if __name__ == "__main__":
    main()
