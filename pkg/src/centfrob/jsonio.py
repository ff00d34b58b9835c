"""JSON wire formats and canonical serialization.

Scalars travel as strings ("num/den" or "num" over Q, decimal residues
over GF(p)); polynomials as coefficient arrays, constant term first;
matrices as {"field": "Q" | {"Fp": p}, "rows": [[str, ...], ...]}.
Dumps are compact with insertion-ordered keys, so identical inputs give
byte-identical output and golden files diff cleanly.
"""

from __future__ import annotations

import hashlib
import json

from .canon import InvariantFactors, JordanSpec
from .centralizer import SubalgebraBasis
from .errors import ConsistencyError, ParseError
from .fields import FieldSpec, Scalar
from .frobsys import (
    FrobeniusSystem,
    LinearMapMat,
    SearchSpace,
    verify_system,
)
from .matrices import Mat
from .polys import Poly

_PROBE_ORDER = (
    SearchSpace.SCALARS_OF_BASE,
    SearchSpace.CENTER_OF_ALGEBRA,
    SearchSpace.RELATIVE_CENTRALIZER,
)


def dumps(obj) -> str:
    """Canonical compact JSON text (insertion-ordered keys)."""
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True)


# --- fields and scalars -------------------------------------------------------


def field_to_json(field: FieldSpec):
    return "Q" if field.p is None else {"Fp": field.p}


def field_from_json(obj) -> FieldSpec:
    if obj == "Q":
        return FieldSpec(None)
    if isinstance(obj, dict) and set(obj) == {"Fp"}:
        p = obj["Fp"]
        if not isinstance(p, int) or isinstance(p, bool):
            raise ParseError(f"modulus must be an integer, got {p!r}")
        return FieldSpec(p)
    raise ParseError(f"bad field spec {obj!r}")


def _scalar_str(field: FieldSpec, raw) -> str:
    return field.raw_str(raw)


def _scalar_from_json(field: FieldSpec, obj) -> Scalar:
    if not isinstance(obj, str):
        raise ParseError(f"scalar must be a string, got {obj!r}")
    return Scalar.parse(field, obj)


# --- matrices -----------------------------------------------------------------


def matrix_to_json(m: Mat) -> dict:
    field = m.field
    return {
        "field": field_to_json(field),
        "rows": [[_scalar_str(field, v) for v in row] for row in m.rows],
    }


def matrix_from_json(obj, field_override: FieldSpec | None = None) -> Mat:
    if not isinstance(obj, dict) or set(obj) != {"field", "rows"}:
        raise ParseError(f"matrix JSON needs field and rows, got {obj!r}")
    field = field_override or field_from_json(obj["field"])
    rows = obj["rows"]
    if not isinstance(rows, list) or not rows:
        raise ParseError("matrix rows must be a nonempty list")
    width = None
    parsed = []
    for row in rows:
        if not isinstance(row, list) or not row:
            raise ParseError("matrix rows must be nonempty lists")
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError("matrix rows must share one length")
        parsed.append([_scalar_from_json(field, v).value for v in row])
    return Mat(field, parsed, _raw=True)


def matrix_digest(m: Mat) -> str:
    """sha256 of the canonical matrix serialization."""
    return hashlib.sha256(dumps(matrix_to_json(m)).encode()).hexdigest()


# --- polynomials and invariant factors -----------------------------------------


def poly_to_json(f: Poly) -> list[str]:
    return [_scalar_str(f.field, c) for c in f.coeffs]


def poly_from_json(field: FieldSpec, obj) -> Poly:
    if not isinstance(obj, list):
        raise ParseError(f"polynomial must be a coefficient list, got {obj!r}")
    return Poly(field, [_scalar_from_json(field, c).value for c in obj])


def invariant_factors_to_json(inv: InvariantFactors) -> dict:
    return {
        "field": field_to_json(inv.field),
        "chain": [poly_to_json(f) for f in inv.chain],
    }


def invariant_factors_from_json(obj) -> InvariantFactors:
    if not isinstance(obj, dict) or set(obj) != {"field", "chain"}:
        raise ParseError("invariant factors JSON needs field and chain")
    field = field_from_json(obj["field"])
    chain = obj["chain"]
    if not isinstance(chain, list) or not chain:
        raise ParseError("invariant factor chain must be a nonempty list")
    return InvariantFactors(tuple(poly_from_json(field, f) for f in chain))


# --- Jordan specs ---------------------------------------------------------------


def jordan_spec_to_json(spec: JordanSpec) -> dict:
    field = spec.field
    return {
        "blocks": [
            {"eig": _scalar_str(field, eig.value), "size": size}
            for eig, size in spec.blocks
        ],
        "field": field_to_json(field),
    }


def jordan_spec_from_json(obj, field_override: FieldSpec | None = None) -> JordanSpec:
    if not isinstance(obj, dict) or set(obj) != {"blocks", "field"}:
        raise ParseError("Jordan spec JSON needs blocks and field")
    field = field_override or field_from_json(obj["field"])
    blocks = obj["blocks"]
    if not isinstance(blocks, list) or not blocks:
        raise ParseError("Jordan spec blocks must be a nonempty list")
    out = []
    for b in blocks:
        if not isinstance(b, dict) or set(b) != {"eig", "size"}:
            raise ParseError(f"bad Jordan block entry {b!r}")
        size = b["size"]
        if not isinstance(size, int) or isinstance(size, bool) or size < 1:
            raise ParseError(f"bad Jordan block size {size!r}")
        out.append((_scalar_from_json(field, b["eig"]), size))
    return JordanSpec(tuple(out))


# --- bases and systems -----------------------------------------------------------


def basis_to_json(basis: SubalgebraBasis) -> dict:
    return {
        "ambient": basis.ambient,
        "field": field_to_json(basis.field),
        "elements": [matrix_to_json(m) for m in basis.elements],
    }


def basis_from_json(obj) -> SubalgebraBasis:
    if not isinstance(obj, dict) or set(obj) != {"ambient", "field", "elements"}:
        raise ParseError("basis JSON needs ambient, field, elements")
    field = field_from_json(obj["field"])
    ambient = obj["ambient"]
    if not isinstance(ambient, int) or isinstance(ambient, bool) or ambient < 1:
        raise ParseError(f"bad ambient size {ambient!r}")
    elements = obj["elements"]
    if not isinstance(elements, list) or not elements:
        raise ParseError("basis elements must be a nonempty list")
    mats = [matrix_from_json(e) for e in elements]
    for m in mats:
        if m.field != field:
            raise ParseError("basis element field disagrees with the basis field")
        if m.shape != (ambient, ambient):
            raise ParseError(
                f"basis element shape {m.shape} disagrees with ambient {ambient}"
            )
    return SubalgebraBasis(mats)


def system_to_json(system: FrobeniusSystem) -> dict:
    return {
        "algebra": basis_to_json(system.algebra),
        "base": "ground" if system.base is None else basis_to_json(system.base),
        "E": {"action": matrix_to_json(system.e_map.action)},
        "X": [matrix_to_json(x) for x in system.xs],
        "Y": [matrix_to_json(y) for y in system.ys],
        "verified": system.verified,
    }


def system_from_json(obj) -> FrobeniusSystem:
    """Rebuild a system; a verified:true payload is re-verified on load."""
    required = {"algebra", "base", "E", "X", "Y", "verified"}
    if not isinstance(obj, dict) or set(obj) != required:
        raise ParseError("system JSON needs algebra, base, E, X, Y, verified")
    algebra = basis_from_json(obj["algebra"])
    base = None if obj["base"] == "ground" else basis_from_json(obj["base"])
    e_obj = obj["E"]
    if not isinstance(e_obj, dict) or set(e_obj) != {"action"}:
        raise ParseError("system E must be an action matrix")
    action = matrix_from_json(e_obj["action"])
    n = algebra.ambient
    target = (1, 1) if base is None else (n, n)
    e_map = LinearMapMat((n, n), target, action)
    xs = [matrix_from_json(x) for x in obj["X"]]
    ys = [matrix_from_json(y) for y in obj["Y"]]
    flagged = obj["verified"]
    if not isinstance(flagged, bool):
        raise ParseError("system verified flag must be a bool")
    system = FrobeniusSystem(algebra, base, e_map, xs, ys)
    if flagged:
        report = verify_system(system)
        if not report.passed:
            raise ConsistencyError(
                f"stored system claims verified but fails: {report.failure}"
            )
    return system


# --- decision reports -------------------------------------------------------------


def probe_to_json(probe: dict | None) -> dict | None:
    if probe is None:
        return None
    out = {}
    for space in _PROBE_ORDER:
        element = probe[space]
        out[space.value] = {
            "solvable": "yes" if element is not None else "no",
            "element": None if element is None else matrix_to_json(element),
        }
    return out


def report_to_json(report) -> dict:
    """DecisionReport as a JSON dict with pinned key order."""
    return {
        "input_digest": report.input_digest,
        "invariant_factors": invariant_factors_to_json(report.invariant_factors),
        "frobenius": report.frobenius,
        "separable_frobenius": report.separable_frobenius,
        "diagonalizable_over_closure": report.diagonalizable_over_closure,
        "split_over_base": report.split_over_base,
        "jordan": None if report.jordan is None else jordan_spec_to_json(report.jordan),
        "witness_system": (
            None
            if report.witness_system is None
            else system_to_json(report.witness_system)
        ),
        "separability_probe": probe_to_json(report.separability_probe),
        "warnings": list(report.warnings),
    }


def batch_entry_to_json(entry) -> dict:
    """Report dict, or {"error": ..., "kind": ...} for a failed entry."""
    if hasattr(entry, "input_digest"):
        return report_to_json(entry)
    return {"error": entry.error, "kind": entry.kind}
