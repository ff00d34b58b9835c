"""Command-line front end.

Subcommands: analyze (decision report for a matrix), centralizer (basis
of the commuting algebra), system (Frobenius system for a Jordan spec),
corpus (batch run with expectation checking).  All input and output is
JSON; output bytes are stable across runs for identical inputs.

Exit codes: 0 success, 1 expectation mismatch, 2 parse error,
3 unsupported field, 4 equal-size violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from importlib import resources

from . import jsonio
from .centralizer import centralizer_basis, structured_centralizer_basis
from .decide import decide, decide_batch
from .errors import AlgebraError, ParseError, UnsupportedField
from .fields import FieldSpec
from .frobsys import (
    EqualSizeViolation,
    SearchSpace,
    build_centralizer_system,
    separability_element,
    verify_system,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_FIELD = 3
EXIT_UNEQUAL = 4

_SPACE_ALIASES = {
    "scalars": SearchSpace.SCALARS_OF_BASE,
    "scalars_of_base": SearchSpace.SCALARS_OF_BASE,
    "center": SearchSpace.CENTER_OF_ALGEBRA,
    "center_of_algebra": SearchSpace.CENTER_OF_ALGEBRA,
    "relative": SearchSpace.RELATIVE_CENTRALIZER,
    "relative_centralizer": SearchSpace.RELATIVE_CENTRALIZER,
}


@dataclass
class CorpusEntry:
    name: str
    matrix_json: dict
    expected: dict | None


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc


def _field_override(value: str | None) -> FieldSpec | None:
    if value is None:
        return None
    if value == "Q":
        return FieldSpec(None)
    try:
        p = int(value)
    except ValueError:
        raise ParseError(f"bad field override {value!r}; use Q or a prime")
    return FieldSpec(p)


def _emit(obj) -> None:
    sys.stdout.write(jsonio.dumps(obj) + "\n")


def cmd_analyze(args) -> int:
    obj = _load_json(_read_input(args.path))
    c = jsonio.matrix_from_json(obj, _field_override(args.field))
    report = decide(c)
    _emit(jsonio.report_to_json(report))
    return EXIT_OK


def cmd_centralizer(args) -> int:
    obj = _load_json(_read_input(args.path))
    override = _field_override(args.field)
    if args.structured:
        spec = jsonio.jordan_spec_from_json(obj, override)
        basis = structured_centralizer_basis(spec)
    else:
        basis = centralizer_basis(jsonio.matrix_from_json(obj, override))
    _emit({"basis": jsonio.basis_to_json(basis), "dimension": basis.dimension})
    return EXIT_OK


def cmd_system(args) -> int:
    obj = _load_json(_read_input(args.path))
    spec = jsonio.jordan_spec_from_json(obj, _field_override(args.field))
    system = build_centralizer_system(spec)
    if isinstance(system, EqualSizeViolation):
        sys.stderr.write(
            "equal-size violation at eigenvalue "
            f"{system.eigenvalue}: block sizes {list(system.sizes)}\n"
        )
        return EXIT_UNEQUAL
    out = jsonio.system_to_json(system)
    if args.verify:
        report = verify_system(system)
        out["verification"] = {
            "passed": report.passed,
            "checked": report.checked,
            "failure": report.failure,
        }
    if args.separability is not None:
        space = _SPACE_ALIASES[args.separability]
        element = separability_element(system, space)
        out["separability"] = {
            "space": space.value,
            "solvable": "yes" if element is not None else "no",
            "element": None if element is None else jsonio.matrix_to_json(element),
        }
    _emit(out)
    return EXIT_OK


def _parse_corpus(obj) -> list[CorpusEntry]:
    entries = obj.get("entries") if isinstance(obj, dict) else obj
    if not isinstance(entries, list):
        raise ParseError("corpus JSON must be a list or {'entries': [...]}")
    out = []
    seen = set()
    for item in entries:
        if not isinstance(item, dict) or "name" not in item or "matrix" not in item:
            raise ParseError(f"corpus entry needs name and matrix: {item!r}")
        name = item["name"]
        if not isinstance(name, str):
            raise ParseError(f"corpus entry name must be a string: {name!r}")
        if name in seen:
            raise ParseError(f"duplicate corpus entry name {name!r}")
        seen.add(name)
        expected = item.get("expected")
        if expected is not None and not isinstance(expected, dict):
            raise ParseError(f"expected block of {name!r} must be an object")
        out.append(CorpusEntry(name, item["matrix"], expected))
    return out


def _partial_match(expected, actual, trail: str, mismatches: list[str]) -> None:
    """Collect paths where the actual value diverges from the expectation.

    Dicts match key by key on the keys the expectation mentions; all
    other values must be equal outright.
    """
    if isinstance(expected, dict) and isinstance(actual, dict):
        for key, want in expected.items():
            if key not in actual:
                mismatches.append(f"{trail}{key}: missing from report")
            else:
                _partial_match(want, actual[key], f"{trail}{key}.", mismatches)
        return
    if expected != actual:
        mismatches.append(f"{trail[:-1]}: expected {expected!r}, got {actual!r}")


def cmd_corpus(args) -> int:
    if args.path is None:
        source = resources.files("centfrob").joinpath("data/corpus.json")
        text = source.read_text(encoding="utf-8")
    else:
        text = _read_input(args.path)
    obj = _load_json(text)
    entries = _parse_corpus(obj)
    matrices = [jsonio.matrix_from_json(e.matrix_json) for e in entries]
    results = decide_batch(matrices, jobs=args.jobs)
    failures = 0
    lines = []
    for entry, result in zip(entries, results):
        payload = jsonio.batch_entry_to_json(result)
        _emit({"name": entry.name, "report": payload})
        if entry.expected is None:
            lines.append((entry.name, "ran"))
            continue
        mismatches: list[str] = []
        if "error" in payload:
            mismatches.append(f"entry errored: {payload['error']}")
        else:
            _partial_match(entry.expected, payload, "", mismatches)
        if mismatches:
            failures += 1
            lines.append((entry.name, "FAIL " + "; ".join(mismatches)))
        else:
            lines.append((entry.name, "pass"))
    width = max((len(name) for name, _ in lines), default=4)
    sys.stdout.write(f"{'name'.ljust(width)}  result\n")
    for name, status in lines:
        sys.stdout.write(f"{name.ljust(width)}  {status}\n")
    sys.stdout.write(
        f"{len(entries)} entries, {failures} mismatch"
        f"{'es' if failures != 1 else ''}\n"
    )
    return EXIT_MISMATCH if failures else EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centfrob",
        description="Centralizer matrix algebras and their Frobenius systems.",
    )
    parser.add_argument(
        "--field",
        metavar="Q|P",
        help="override the field of the input (Q or a prime modulus)",
    )
    parser.add_argument(
        "--jobs", type=int, default=None, help="parallel workers for corpus runs"
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="seed for the randomized oracle fast path",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="decision report for a matrix")
    p.add_argument("path", nargs="?", default="-", help="matrix JSON file or - for stdin")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("centralizer", help="basis of the commuting algebra")
    p.add_argument("path", nargs="?", default="-")
    p.add_argument(
        "--structured",
        action="store_true",
        help="input is a Jordan spec; use the block-shift basis",
    )
    p.set_defaults(func=cmd_centralizer)

    p = sub.add_parser("system", help="Frobenius system for a Jordan spec")
    p.add_argument("path", nargs="?", default="-")
    p.add_argument("--verify", action="store_true", help="attach a verification report")
    p.add_argument(
        "--separability",
        choices=sorted(_SPACE_ALIASES),
        default=None,
        help="attach a separability probe for the chosen search space",
    )
    p.set_defaults(func=cmd_system)

    p = sub.add_parser("corpus", help="batch decide with expectation checks")
    p.add_argument(
        "path",
        nargs="?",
        default=None,
        help="corpus JSON file or - for stdin; default is the shipped corpus",
    )
    p.set_defaults(func=cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedField as exc:
        sys.stderr.write(f"unsupported field: {exc}\n")
        return EXIT_FIELD
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except OSError as exc:
        sys.stderr.write(f"cannot read input: {exc}\n")
        return EXIT_PARSE
    except AlgebraError as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
