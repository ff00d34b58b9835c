"""Classify three small matrices and read the full decision reports.

Three contrasting inputs: one eigenvalue with mismatched Jordan block
sizes (not Frobenius), two eigenvalues with one block each (Frobenius
but not separable), and a rotation with no rational eigenvalues
(separable, decided through the invariant-factor gcd route without
splitting the spectrum).
"""

from centfrob.decide import decide
from centfrob.fields import gf, rationals
from centfrob.jsonio import dumps, report_to_json
from centfrob.matrices import Mat


def show(title: str, report) -> None:
    print(f"--- {title} ---")
    print(f"frobenius            {report.frobenius}")
    print(f"separable_frobenius  {report.separable_frobenius}")
    print(f"split_over_base      {report.split_over_base}")
    if report.jordan is not None:
        blocks = [(str(e), s) for e, s in report.jordan.blocks]
        print(f"jordan blocks        {blocks}")
    if report.witness_system is not None:
        print(f"witness verified     {report.witness_system.verified}")
    for note in report.warnings:
        print(f"note: {note}")
    print()


def main() -> None:
    q = rationals()

    mismatched = Mat(q, [[0, 0, 1], [0, 1, 0], [-1, 0, 2]])
    show("one eigenvalue, block sizes 2 and 1", decide(mismatched))

    one_each = Mat(q, [[0, 0, 1], [0, 0, 0], [-1, 0, 2]])
    show("two eigenvalues, one block each", decide(one_each))

    rotation = Mat(q, [[0, 1], [-1, 0]])
    show("rotation, no rational eigenvalues", decide(rotation))

    # the same rotation splits over GF(5), where -1 is a square
    show("rotation over GF(5)", decide(Mat(gf(5), [[0, 1], [4, 0]])))

    # reports serialize to a stable JSON layout, handy for diffing
    print("JSON form of the first report:")
    print(dumps(report_to_json(decide(mismatched))))


if __name__ == "__main__":
    main()
