"""Frobenius systems: explicit dual bases (E, X_i, Y_i) and their algebra.

A system certifies that an extension A/B is Frobenius: E is a B-bimodule
map A -> B and sum X_i E(Y_i a) = a = sum E(a X_i) Y_i for all a.  The
constructors here build such systems for Jordan-block centralizers, full
matrix algebras, composites of compatible towers, direct sums, and
conjugates, and verify them on the spot.  Separability elements are
searched in three nested spaces; a randomized-then-symbolic oracle
decides the abstract Frobenius property from structure constants.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .canon import JordanSpec
from .centralizer import SubalgebraBasis
from .errors import (
    BaseMismatch,
    ConsistencyError,
    DimensionTooLarge,
    FieldMismatch,
    NonGroundBase,
    SizeMismatch,
    UnverifiedSystem,
)
from .fields import FieldSpec, Scalar
from .matrices import (
    Echelon,
    Mat,
    _raw_one,
    _raw_zero,
    direct_sum,
    inverse,
    kernel_raw,
    kron,
    matrix_unit,
    rref_raw,
    shift_matrix,
    solve_raw,
)
from .multipoly import linear_pencil_det_is_zero

DEFAULT_ORACLE_SEED = 0
MAX_SYMBOLIC_DIM = 10


class LinearMapMat:
    """A linear map between matrix spaces, stored as one matrix.

    The action matrix has shape (tr*tc) x (sr*sc) and acts on
    column-major vectorizations.
    """

    __slots__ = ("source_shape", "target_shape", "action", "_sparse")

    def __init__(self, source_shape, target_shape, action: Mat):
        sr, sc = source_shape
        tr, tc = target_shape
        if action.shape != (tr * tc, sr * sc):
            raise SizeMismatch(
                f"action {action.shape} for {source_shape}->{target_shape}"
            )
        self.source_shape = (sr, sc)
        self.target_shape = (tr, tc)
        self.action = action
        self._sparse = None

    @property
    def field(self) -> FieldSpec:
        return self.action.field

    @classmethod
    def from_function(cls, field, source_shape, target_shape, fn) -> "LinearMapMat":
        """Sample fn on the matrix units of the source, column-major order."""
        sr, sc = source_shape
        cols = []
        for j in range(sc):
            for i in range(sr):
                image = fn(matrix_unit(field, sr, sc, i + 1, j + 1))
                if image.shape != tuple(target_shape):
                    raise SizeMismatch("image shape disagrees with target")
                cols.append(image.vec_raw())
        rows = [[col[r] for col in cols] for r in range(target_shape[0] * target_shape[1])]
        return cls(source_shape, target_shape, Mat(field, rows, _raw=True))

    @classmethod
    def identity(cls, field, shape) -> "LinearMapMat":
        r, c = shape
        return cls(shape, shape, Mat.identity(field, r * c))

    def apply_raw(self, vec: list) -> list:
        if self._sparse is None:
            self._sparse = [
                [(j, v) for j, v in enumerate(row) if v]
                for row in self.action.rows
            ]
        p = self.field.p
        out = []
        for row in self._sparse:
            acc = _raw_zero(self.field)
            for j, v in row:
                if vec[j]:
                    acc += v * vec[j]
            if p is not None:
                acc %= p
            out.append(acc)
        return out

    def apply(self, m: Mat) -> Mat:
        if m.shape != self.source_shape:
            raise SizeMismatch(f"{m.shape} into map from {self.source_shape}")
        if m.field != self.field:
            raise FieldMismatch(f"{m.field!r} vs {self.field!r}")
        tr, tc = self.target_shape
        return Mat.devec_raw(self.field, tr, tc, self.apply_raw(m.vec_raw()))

    def compose(self, inner: "LinearMapMat") -> "LinearMapMat":
        """self after inner."""
        if inner.target_shape != self.source_shape:
            raise SizeMismatch(
                f"{inner.target_shape} does not feed {self.source_shape}"
            )
        return LinearMapMat(
            inner.source_shape, self.target_shape, self.action * inner.action
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LinearMapMat)
            and other.source_shape == self.source_shape
            and other.target_shape == self.target_shape
            and other.action == self.action
        )


@dataclass
class VerificationReport:
    passed: bool
    checked: int
    failure: str | None = None


@dataclass
class EqualSizeViolation:
    """Jordan spec with unequal block sizes at one eigenvalue."""

    eigenvalue: Scalar
    sizes: tuple[int, ...]


class SearchSpace(Enum):
    RELATIVE_CENTRALIZER = "relative_centralizer"
    CENTER_OF_ALGEBRA = "center_of_algebra"
    SCALARS_OF_BASE = "scalars_of_base"


class FrobeniusSystem:
    """Candidate Frobenius system for span(algebra) over its base.

    base None means the ground field; then E maps into 1x1 matrices.
    An embedded base is a SubalgebraBasis in the same ambient and E maps
    ambient to ambient with values in the base span.
    """

    __slots__ = ("algebra", "base", "e_map", "xs", "ys", "verified", "permutation")

    def __init__(
        self,
        algebra: SubalgebraBasis,
        base: SubalgebraBasis | None,
        e_map: LinearMapMat,
        xs: list[Mat],
        ys: list[Mat],
        verified: bool = False,
    ):
        n = algebra.ambient
        field = algebra.field
        if len(xs) != len(ys) or not xs:
            raise SizeMismatch("dual bases must pair up and be nonempty")
        if e_map.source_shape != (n, n):
            raise SizeMismatch("E source shape disagrees with the ambient")
        expected_target = (1, 1) if base is None else (n, n)
        if e_map.target_shape != expected_target:
            raise SizeMismatch("E target shape disagrees with the base kind")
        if e_map.field != field:
            raise FieldMismatch("E field disagrees with the algebra")
        if base is not None:
            if base.field != field or base.ambient != n:
                raise SizeMismatch("base does not live in the ambient algebra")
            for b in base.elements:
                if not algebra.contains(b):
                    raise SizeMismatch("base element outside the algebra span")
        for m in xs + ys:
            if m.field != field:
                raise FieldMismatch("dual basis field mismatch")
            if m.shape != (n, n):
                raise SizeMismatch("dual basis shape mismatch")
            if not algebra.contains(m):
                raise SizeMismatch("dual basis element outside the algebra span")
        self.algebra = algebra
        self.base = base
        self.e_map = e_map
        self.xs = list(xs)
        self.ys = list(ys)
        self.verified = verified
        self.permutation = None

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def ambient(self) -> int:
        return self.algebra.ambient

    def e_scalar_raw(self, m: Mat):
        """E(m) as a raw field value; only for ground-base systems."""
        if self.base is not None:
            raise NonGroundBase("E of an embedded-base system is a matrix")
        return self.e_map.apply_raw(m.vec_raw())[0]


def _sum_scaled(field: FieldSpec, n: int, pairs) -> Mat:
    """Sum of coeff * mat over (mat, raw coeff) pairs, skipping zeros."""
    p = field.p
    rows = [[_raw_zero(field)] * n for _ in range(n)]
    for mat, coeff in pairs:
        if not coeff:
            continue
        for i in range(n):
            src = mat.rows[i]
            dst = rows[i]
            for j in range(n):
                if src[j]:
                    dst[j] += coeff * src[j]
    if p is not None:
        rows = [[v % p for v in row] for row in rows]
    return Mat(field, rows, _raw=True)


def verify_system(system: FrobeniusSystem) -> VerificationReport:
    """Check the Frobenius system conditions on the algebra basis.

    Returns the first counterexample found; on success marks the system
    verified.  Checks: E lands in the base, E is a base-bimodule map
    (embedded bases only), and both dual-basis identities.
    """
    algebra = system.algebra
    base = system.base
    field = system.field
    n = system.ambient
    checked = 0

    def fail(msg: str) -> VerificationReport:
        return VerificationReport(False, checked, msg)

    if base is not None:
        for idx, a in enumerate(algebra.elements):
            checked += 1
            if not base.contains(system.e_map.apply(a)):
                return fail(f"E(algebra[{idx}]) is outside the base span")
        for bi, b in enumerate(base.elements):
            for bj, b2 in enumerate(base.elements):
                for ai, a in enumerate(algebra.elements):
                    checked += 1
                    lhs = system.e_map.apply(b * a * b2)
                    rhs = b * system.e_map.apply(a) * b2
                    if lhs != rhs:
                        return fail(
                            f"E(b{bi} algebra[{ai}] b{bj}) breaks the bimodule law"
                        )

    for idx, a in enumerate(algebra.elements):
        checked += 1
        if base is None:
            left = _sum_scaled(
                field, n,
                ((x, system.e_scalar_raw(y * a)) for x, y in zip(system.xs, system.ys)),
            )
            right = _sum_scaled(
                field, n,
                ((y, system.e_scalar_raw(a * x)) for x, y in zip(system.xs, system.ys)),
            )
        else:
            left = Mat.zeros(field, n, n)
            right = Mat.zeros(field, n, n)
            for x, y in zip(system.xs, system.ys):
                left = left + x * system.e_map.apply(y * a)
                right = right + system.e_map.apply(a * x) * y
        if left != a:
            return fail(f"sum X_i E(Y_i a) != a at algebra[{idx}]")
        if right != a:
            return fail(f"sum E(a X_i) Y_i != a at algebra[{idx}]")

    system.verified = True
    return VerificationReport(True, checked, None)


def _verify_or_raise(system: FrobeniusSystem, origin: str) -> FrobeniusSystem:
    report = verify_system(system)
    if not report.passed:
        raise ConsistencyError(f"{origin} produced an invalid system: {report.failure}")
    return system


# --- elementary constructors -------------------------------------------------


def jordan_block_system(n: int, field: FieldSpec) -> FrobeniusSystem:
    """System for the centralizer of one n x n Jordan block over F.

    The algebra is spanned by the shift powers J^0..J^(n-1); E reads the
    top coefficient (the (1, n) entry), X_i = J^i and Y_i = J^(n-1-i).
    """
    if n < 1:
        raise SizeMismatch(f"block size {n}")
    shift = shift_matrix(field, n, n, 1)
    powers = [Mat.identity(field, n)]
    for _ in range(n - 1):
        powers.append(powers[-1] * shift)
    algebra = SubalgebraBasis(powers)
    row = [[_raw_zero(field)] * (n * n)]
    row[0][(n - 1) * n + 0] = _raw_one(field)
    e_map = LinearMapMat((n, n), (1, 1), Mat(field, row, _raw=True))
    xs = list(powers)
    ys = list(reversed(powers))
    return _verify_or_raise(
        FrobeniusSystem(algebra, None, e_map, xs, ys), "jordan_block_system"
    )


def full_matrix_system(n: int, field: FieldSpec) -> FrobeniusSystem:
    """Trace system for the full matrix algebra M_n(F)."""
    if n < 1:
        raise SizeMismatch(f"matrix size {n}")
    units = [
        matrix_unit(field, n, n, i + 1, j + 1)
        for i in range(n)
        for j in range(n)
    ]
    algebra = SubalgebraBasis(units)
    row = [[_raw_zero(field)] * (n * n)]
    for i in range(n):
        row[0][i * n + i] = _raw_one(field)
    e_map = LinearMapMat((n, n), (1, 1), Mat(field, row, _raw=True))
    xs = list(units)
    ys = [
        matrix_unit(field, n, n, j + 1, i + 1)
        for i in range(n)
        for j in range(n)
    ]
    return _verify_or_raise(
        FrobeniusSystem(algebra, None, e_map, xs, ys), "full_matrix_system"
    )


def _matrix_units_over(m: int, inner_basis: list[Mat]):
    """Lifted system for M_m(T) over T, T spanned by inner_basis in M_s.

    Returns (system, embed) where embed maps M_s into M_(m*s) by
    t -> I_m (x) t and E collapses a block matrix to the embedded sum of
    its diagonal blocks.
    """
    field = inner_basis[0].field
    s = inner_basis[0].nrows
    n = m * s
    ident_m = Mat.identity(field, m)
    algebra = SubalgebraBasis(
        [
            kron(matrix_unit(field, m, m, i + 1, j + 1), t)
            for i in range(m)
            for j in range(m)
            for t in inner_basis
        ]
    )
    base = SubalgebraBasis([kron(ident_m, t) for t in inner_basis])

    def block_trace(x: Mat) -> Mat:
        rows = [[_raw_zero(field)] * s for _ in range(s)]
        for d in range(m):
            for i in range(s):
                xrow = x.rows[d * s + i]
                row = rows[i]
                for j in range(s):
                    v = xrow[d * s + j]
                    if v:
                        row[j] += v
        if field.p is not None:
            rows = [[v % field.p for v in row] for row in rows]
        return kron(ident_m, Mat(field, rows, _raw=True))

    e_map = LinearMapMat.from_function(field, (n, n), (n, n), block_trace)
    xs = [
        kron(matrix_unit(field, m, m, i + 1, j + 1), Mat.identity(field, s))
        for i in range(m)
        for j in range(m)
    ]
    ys = [
        kron(matrix_unit(field, m, m, j + 1, i + 1), Mat.identity(field, s))
        for i in range(m)
        for j in range(m)
    ]
    embed = LinearMapMat.from_function(
        field, (s, s), (n, n), lambda t: kron(ident_m, t)
    )
    system = _verify_or_raise(
        FrobeniusSystem(algebra, base, e_map, xs, ys), "matrix units lift"
    )
    return system, embed


# --- combinators --------------------------------------------------------------


def _left_inverse(action: Mat) -> Mat:
    """Left inverse of a full-column-rank matrix, or BaseMismatch."""
    field = action.field
    nrows, ncols = action.shape
    z, o = _raw_zero(field), _raw_one(field)
    rows = []
    for i, row in enumerate(action.rows):
        aug = list(row) + [z] * nrows
        aug[ncols + i] = o
        rows.append(aug)
    pivots = rref_raw(rows, field, pivot_limit=ncols)
    if len(pivots) != ncols:
        raise BaseMismatch("embedding map is not injective")
    return Mat(field, [row[ncols:] for row in rows[:ncols]], _raw=True)


def compose_systems(
    outer: FrobeniusSystem, inner: FrobeniusSystem, embed: LinearMapMat
) -> FrobeniusSystem:
    """Transitivity: a system for A/B and one for B/F give one for A/F.

    embed realizes the inner ambient inside the outer ambient; its image
    of the inner algebra must coincide with the outer base span.
    """
    field = outer.field
    if inner.field != field or embed.field != field:
        raise FieldMismatch("composite pieces over different fields")
    n = outer.ambient
    k = inner.ambient
    if embed.source_shape != (k, k) or embed.target_shape != (n, n):
        raise SizeMismatch("embedding shapes do not match the systems")
    embedded = [embed.apply(b) for b in inner.algebra.elements]

    if outer.base is None:
        # only the trivial tower: the inner system lives on a 1x1 ambient
        if k != 1 or inner.base is not None:
            raise BaseMismatch("ground-base outer admits only a scalar inner system")
        if embed.apply(Mat.identity(field, 1)) != Mat.identity(field, n):
            raise BaseMismatch("embedding does not send 1 to the identity")
        e_one = inner.e_scalar_raw(Mat.identity(field, 1))
        e_action = outer.e_map.action.scale(Scalar(field, e_one))
        e_map = LinearMapMat((n, n), (1, 1), e_action)
        new_base = None
    else:
        if outer.base.dimension != inner.algebra.dimension or not outer.base.spans_all(
            embedded
        ):
            raise BaseMismatch(
                "embedded inner algebra does not span the outer base"
            )
        unembed = _left_inverse(embed.action)
        collapse = unembed * outer.e_map.action
        if inner.base is None:
            e_map = LinearMapMat((n, n), (1, 1), inner.e_map.action * collapse)
            new_base = None
        else:
            action = embed.action * inner.e_map.action * collapse
            e_map = LinearMapMat((n, n), (n, n), action)
            new_base = SubalgebraBasis(
                [embed.apply(b) for b in inner.base.elements]
            )
    xs = []
    ys = []
    embedded_xs = [embed.apply(x) for x in inner.xs]
    embedded_ys = [embed.apply(y) for y in inner.ys]
    for xo, yo in zip(outer.xs, outer.ys):
        for xi, yi in zip(embedded_xs, embedded_ys):
            xs.append(xo * xi)
            ys.append(yi * yo)
    return _verify_or_raise(
        FrobeniusSystem(outer.algebra, new_base, e_map, xs, ys),
        "compose_systems",
    )


def direct_sum_systems(
    first: FrobeniusSystem, second: FrobeniusSystem
) -> FrobeniusSystem:
    """System for the block-diagonal sum of two ground-base systems."""
    field = first.field
    if second.field != field:
        raise FieldMismatch("direct sum over different fields")
    if first.base is not None or second.base is not None:
        raise NonGroundBase("direct sums require ground-base systems")
    n1, n2 = first.ambient, second.ambient
    n = n1 + n2
    z1 = Mat.zeros(field, n1, n1)
    z2 = Mat.zeros(field, n2, n2)
    algebra = SubalgebraBasis(
        [direct_sum(a, z2) for a in first.algebra.elements]
        + [direct_sum(z1, b) for b in second.algebra.elements]
    )
    row = [[_raw_zero(field)] * (n * n)]
    for col in range(n1):
        for r in range(n1):
            src = first.e_map.action.rows[0][col * n1 + r]
            if src:
                row[0][col * n + r] = src
    for col in range(n2):
        for r in range(n2):
            src = second.e_map.action.rows[0][col * n2 + r]
            if src:
                row[0][(n1 + col) * n + (n1 + r)] = src
    e_map = LinearMapMat((n, n), (1, 1), Mat(field, row, _raw=True))
    xs = [direct_sum(x, z2) for x in first.xs] + [
        direct_sum(z1, x) for x in second.xs
    ]
    ys = [direct_sum(y, z2) for y in first.ys] + [
        direct_sum(z1, y) for y in second.ys
    ]
    return _verify_or_raise(
        FrobeniusSystem(algebra, None, e_map, xs, ys), "direct_sum_systems"
    )


def conjugate_system(system: FrobeniusSystem, u: Mat) -> FrobeniusSystem:
    """Transport a system along conjugation a -> u^{-1} a u."""
    field = system.field
    if u.field != field:
        raise FieldMismatch("conjugator over a different field")
    n = system.ambient
    if u.shape != (n, n):
        raise SizeMismatch(f"conjugator {u.shape} in ambient {n}")
    uinv = inverse(u)

    def conj(a: Mat) -> Mat:
        return uinv * a * u

    algebra = SubalgebraBasis([conj(a) for a in system.algebra.elements])
    # vec matrix of b -> u b u^{-1}
    undo = kron(uinv.transpose(), u)
    if system.base is None:
        e_map = LinearMapMat((n, n), (1, 1), system.e_map.action * undo)
        base = None
    else:
        redo = kron(u.transpose(), uinv)
        e_map = LinearMapMat((n, n), (n, n), redo * system.e_map.action * undo)
        base = SubalgebraBasis([conj(b) for b in system.base.elements])
    xs = [conj(x) for x in system.xs]
    ys = [conj(y) for y in system.ys]
    return _verify_or_raise(
        FrobeniusSystem(algebra, base, e_map, xs, ys), "conjugate_system"
    )


# --- the centralizer construction ---------------------------------------------


def _grouped_block_order(spec: JordanSpec) -> list[int]:
    """Stable order putting equal-eigenvalue blocks next to each other."""
    first_seen: dict = {}
    for idx, (eig, _) in enumerate(spec.blocks):
        first_seen.setdefault(eig, len(first_seen))
    return sorted(
        range(len(spec.blocks)),
        key=lambda idx: (first_seen[spec.blocks[idx][0]], idx),
    )


def build_centralizer_system(
    spec: JordanSpec, field: FieldSpec | None = None
) -> FrobeniusSystem | EqualSizeViolation:
    """Frobenius system for the centralizer of the Jordan matrix of spec.

    Works when every eigenvalue's blocks share one size; otherwise
    returns the EqualSizeViolation naming the first offending eigenvalue.
    Non-contiguous specs are handled by building the grouped arrangement
    and conjugating back with the block permutation matrix.
    """
    if field is not None and spec.field != field:
        raise FieldMismatch(f"{spec.field!r} vs {field!r}")
    field = spec.field
    for eig, sizes in spec.grouped():
        if len(set(sizes)) > 1:
            return EqualSizeViolation(eig, tuple(sizes))

    order = _grouped_block_order(spec)
    permuted = order != list(range(len(spec.blocks)))
    blocks = [spec.blocks[idx] for idx in order]

    # per-eigenvalue systems, in first-occurrence order
    groups: list[tuple[int, int]] = []  # (count m, size s)
    pos = 0
    while pos < len(blocks):
        eig, size = blocks[pos]
        count = 0
        while pos + count < len(blocks) and blocks[pos + count][0] == eig:
            count += 1
        groups.append((count, size))
        pos += count

    system = None
    for m, s in groups:
        if m == 1:
            part = jordan_block_system(s, field)
        else:
            inner = jordan_block_system(s, field)
            outer, embed = _matrix_units_over(m, list(inner.algebra.elements))
            part = compose_systems(outer, inner, embed)
        system = part if system is None else direct_sum_systems(system, part)

    if permuted:
        # coordinate map: original index -> grouped index
        offsets_orig = []
        p = 0
        for _, size in spec.blocks:
            offsets_orig.append(p)
            p += size
        offsets_grp = []
        p = 0
        for _, size in blocks:
            offsets_grp.append(p)
            p += size
        n = spec.total
        dest = [0] * n
        for grp_pos, orig_idx in enumerate(order):
            size = spec.blocks[orig_idx][1]
            for t in range(size):
                dest[offsets_orig[orig_idx] + t] = offsets_grp[grp_pos] + t
        z, o = _raw_zero(field), _raw_one(field)
        rows = [[z] * n for _ in range(n)]
        for orig, grp in enumerate(dest):
            rows[grp][orig] = o
        perm = Mat(field, rows, _raw=True)
        system = conjugate_system(system, perm)
        system.permutation = tuple(dest)
    return system


# --- separability ---------------------------------------------------------------


def _space_basis(system: FrobeniusSystem, space: SearchSpace) -> list[Mat]:
    """Basis matrices of the requested search space inside the algebra."""
    algebra = system.algebra
    field = system.field
    n = system.ambient
    if space is SearchSpace.SCALARS_OF_BASE:
        return [Mat.identity(field, n)]
    if space is SearchSpace.CENTER_OF_ALGEBRA:
        reference = list(algebra.elements)
    else:
        reference = (
            [Mat.identity(field, n)]
            if system.base is None
            else list(system.base.elements)
        )
    # solve [b, d] = 0 for d in the algebra span, coordinates over the basis
    rows = []
    for b in reference:
        vecs = [(b * a - a * b).vec_raw() for a in algebra.elements]
        for coord in range(n * n):
            row = [v[coord] for v in vecs]
            if any(row):
                rows.append(row)
    if not rows:
        return list(algebra.elements)
    grid = Mat(field, rows, _raw=True)
    from .matrices import kernel_raw

    return [algebra.combination_raw(v) for v in kernel_raw(grid)]


def separability_element(
    system: FrobeniusSystem, space: SearchSpace = SearchSpace.RELATIVE_CENTRALIZER
) -> Mat | None:
    """Solve sum X_i d Y_i = identity for d in the given search space.

    Returns the eliminator's canonical solution or None; the system must
    have passed verification first.
    """
    if not system.verified:
        raise UnverifiedSystem("separability probe requires a verified system")
    field = system.field
    n = system.ambient
    candidates = _space_basis(system, space)
    if not candidates:
        return None
    images = []
    for v in candidates:
        acc = Mat.zeros(field, n, n)
        for x, y in zip(system.xs, system.ys):
            acc = acc + x * v * y
        images.append(acc.vec_raw())
    grid = Mat(field, [[img[r] for img in images] for r in range(n * n)], _raw=True)
    target = Mat.identity(field, n).vec_raw()
    coords = solve_raw(grid, target)
    if coords is None:
        return None
    acc = Mat.zeros(field, n, n)
    for coeff, v in zip(coords, candidates):
        if coeff:
            acc = acc + v.scale(Scalar(field, coeff))
    return acc


def separability_probe(system: FrobeniusSystem) -> dict:
    """Run all three search spaces and flag convention disagreements.

    Returns {space: Mat | None} plus a 'warnings' list.  The spaces are
    nested (scalars within center within relative centralizer), so a
    solution in a smaller space forces one in the larger.
    """
    results = {}
    for space in (
        SearchSpace.SCALARS_OF_BASE,
        SearchSpace.CENTER_OF_ALGEBRA,
        SearchSpace.RELATIVE_CENTRALIZER,
    ):
        results[space] = separability_element(system, space)
    warnings = []
    narrow = results[SearchSpace.SCALARS_OF_BASE] is not None
    broad = results[SearchSpace.RELATIVE_CENTRALIZER] is not None
    if narrow != broad:
        detail = (
            f"scalars: {'yes' if narrow else 'no'}, "
            f"relative centralizer: {'yes' if broad else 'no'}"
        )
        warnings.append(
            "separability probes disagree across search spaces ("
            + detail
            + "); the narrow convention reads the element as a base scalar, "
            "the broad one allows the whole relative centralizer"
        )
    results["warnings"] = warnings
    return results


# --- abstract oracle -------------------------------------------------------------


def _filtration_constants(consts: list, field: FieldSpec) -> list:
    """Structure constants rewritten in a trace-filtration-adapted basis.

    The kernel of the regular trace form tau(a, b) = tr(L_{ab}) is a
    two-sided ideal (the radical in characteristic zero), and a basis
    ordered along the chain of its powers makes products vanish
    level-wise.  Any invertible change of basis multiplies the Gram
    determinant by a nonzero square, so the zero test is unaffected;
    this rewrite just keeps the symbolic expansion sparse when the
    input basis mixes the levels, as conjugated centralizers do.
    """
    d = len(consts)
    if d <= 2:
        return consts
    p = field.p
    zero = _raw_zero(field)

    def mul_coords(u: list, v: list) -> list:
        out = [zero] * d
        for a, ua in enumerate(u):
            if not ua:
                continue
            row = consts[a]
            for b, vb in enumerate(v):
                if not vb:
                    continue
                f = ua * vb
                for k, c in enumerate(row[b]):
                    if c:
                        out[k] = out[k] + f * c
        if p is not None:
            out = [x % p for x in out]
        return out

    tau = []
    for i in range(d):
        ci = consts[i]
        row = []
        for j in range(d):
            cj = consts[j]
            acc = zero
            for m in range(d):
                for k, val in enumerate(ci[m]):
                    if val:
                        other = cj[k][m]
                        if other:
                            acc = acc + val * other
            row.append(acc % p if p is not None else acc)
        tau.append(row)
    ker = kernel_raw(Mat(field, tau, _raw=True))
    if not ker:
        return consts

    ech = Echelon(field)
    for v in ker:
        ech.add(v)
    chain = [[list(r) for r in ech.rows]]
    while True:
        deeper = Echelon(field)
        for u in chain[-1]:
            for v in chain[0]:
                deeper.add(mul_coords(u, v))
        nxt = [list(r) for r in deeper.rows]
        if not nxt or len(nxt) >= len(chain[-1]):
            break
        chain.append(nxt)

    ech = Echelon(field)
    adapted = []
    one = _raw_one(field)
    for level_basis in reversed(chain):
        for v in level_basis:
            if ech.add(v):
                adapted.append(list(v))
    for i in range(d):
        unit = [zero] * d
        unit[i] = one
        if ech.add(unit):
            adapted.append(unit)

    columns = Mat(
        field, [[adapted[j][i] for j in range(d)] for i in range(d)], _raw=True
    )
    minv_rows = inverse(columns).rows
    out = []
    for i in range(d):
        row_out = []
        for j in range(d):
            w = mul_coords(adapted[i], adapted[j])
            coords = []
            for mrow in minv_rows:
                acc = zero
                for val, wk in zip(mrow, w):
                    if val and wk:
                        acc = acc + val * wk
                coords.append(acc % p if p is not None else acc)
            row_out.append(coords)
        out.append(row_out)
    return out


def frobenius_algebra_oracle(
    basis: SubalgebraBasis,
    seed: int = DEFAULT_ORACLE_SEED,
    attempts: int = 8,
) -> bool:
    """Decide whether span(basis) admits a nondegenerate trace form.

    The Gram matrix G(phi)_{ij} = phi(b_i b_j) is linear in phi.  Random
    evaluations that come out nonsingular certify the positive answer;
    otherwise the determinant is tested symbolically by division-free
    expansion, refused above dimension MAX_SYMBOLIC_DIM.  Only the
    symbolic path may declare the negative verdict.
    """
    field = basis.field
    d = basis.dimension
    consts = basis.structure_constants()
    rng = random.Random(seed)
    p = field.p
    for _ in range(attempts):
        if p is None:
            phi = [rng.randint(-99, 99) for _ in range(d)]
        else:
            phi = [rng.randrange(p) for _ in range(d)]
        rows = []
        for i in range(d):
            row = []
            for j in range(d):
                acc = 0
                for t, c in enumerate(consts[i][j]):
                    if c:
                        acc += c * phi[t]
                row.append(acc % p if p is not None else acc)
            rows.append(row)
        gram = Mat(field, rows, _raw=False)
        pivots = rref_raw([list(r) for r in gram.rows], field)
        if len(pivots) == d:
            return True
    if d > MAX_SYMBOLIC_DIM:
        raise DimensionTooLarge(
            f"symbolic determinant refused at dimension {d} > {MAX_SYMBOLIC_DIM}"
        )
    return not linear_pencil_det_is_zero(
        field, _filtration_constants(consts, field)
    )
