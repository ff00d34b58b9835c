"""Build Frobenius systems, verify them, and probe separability.

A system (E, X_i, Y_i) certifies a Frobenius extension: E maps the
algebra onto its base and the dual pairs satisfy both reconstruction
identities.  This script builds systems for a single Jordan block, a
full matrix algebra, and a mixed centralizer, then shows how the three
separability search spaces can disagree over a small field.
"""

from centfrob.fields import gf, rationals
from centfrob.frobsys import (
    SearchSpace,
    build_centralizer_system,
    conjugate_system,
    full_matrix_system,
    jordan_block_system,
    separability_probe,
    verify_system,
)
from centfrob.canon import JordanSpec
from centfrob.matrices import Mat


def main() -> None:
    q = rationals()

    # the centralizer of one nilpotent Jordan block is spanned by its
    # powers; E reads the top coefficient of that expansion
    block = jordan_block_system(4, q)
    print(f"jordan block n=4: {len(block.xs)} dual pairs,",
          f"verified={block.verified}")
    print(f"re-check: {verify_system(block).passed}")

    # full matrix algebras carry the trace system
    full = full_matrix_system(3, q)
    probe = separability_probe(full)
    element = probe[SearchSpace.SCALARS_OF_BASE]
    print(f"M_3 over Q: scalar separability element =\n{element}")

    # equal block sizes per eigenvalue admit a direct construction
    spec = JordanSpec(((q.scalar(2), 2), (q.scalar(2), 2), (q.scalar(7), 1)))
    system = build_centralizer_system(spec)
    print(f"centralizer of J_2(2)+J_2(2)+J_1(7): dim {system.algebra.dimension},",
          f"verified={system.verified}")

    # conjugation transports a system to any similar matrix and re-verifies
    u = Mat(q, [[1, 1, 0, 0, 0],
                [0, 1, 2, 0, 0],
                [0, 0, 1, 0, 1],
                [0, 0, 0, 1, 0],
                [0, 0, 0, 0, 1]])
    moved = conjugate_system(system, u)
    print(f"after conjugation: verified={moved.verified}")

    # over GF(2) the scalar convention and the broad one part ways for M_2
    tiny = full_matrix_system(2, gf(2))
    probe = separability_probe(tiny)
    narrow = probe[SearchSpace.SCALARS_OF_BASE]
    broad = probe[SearchSpace.RELATIVE_CENTRALIZER]
    print(f"M_2 over GF(2): scalars solvable={narrow is not None},",
          f"relative centralizer solvable={broad is not None}")
    for note in probe["warnings"]:
        print(f"note: {note}")


if __name__ == "__main__":
    main()
