"""Centralizer algebras S_n(c, F) = {a : ac = ca} and their bases.

Two routes to the same span: a brute-force kernel computation on the
commutation operator, and a structured assembly from shift matrices when
the Jordan data is known.  Intertwiner spaces between Jordan blocks are
spanned by rectangular shifts.
"""

from __future__ import annotations

from .canon import JordanSpec
from .errors import FieldMismatch, NonSquare, NotABasis, NotClosed
from .fields import FieldSpec, Scalar
from .matrices import Echelon, Mat, kernel_raw, kron, shift_matrix


class SubalgebraBasis:
    """An ordered basis of a unital subalgebra of M_n(F).

    Linear independence and the presence of the identity are checked at
    construction.  Multiplicative closure is checked the first time the
    structure constants are requested (and cached); the public
    constructions in this package always produce closed spans.
    """

    __slots__ = ("field", "ambient", "elements", "_ech", "_identity", "_structure")

    def __init__(self, elements):
        elements = tuple(elements)
        if not elements:
            raise NotABasis("no elements")
        first = elements[0]
        if not first.is_square:
            raise NonSquare(f"ambient shape {first.shape}")
        field, n = first.field, first.nrows
        ech = Echelon(field, track=True)
        for m in elements:
            if m.field != field:
                raise FieldMismatch("mixed fields in basis")
            if m.shape != (n, n):
                raise NotABasis(f"element of shape {m.shape} in ambient {n}")
            if not ech.add(m.vec_raw()):
                raise NotABasis("elements are linearly dependent")
        self.field = field
        self.ambient = n
        self.elements = elements
        self._ech = ech
        ident = Mat.identity(field, n)
        coords = ech.coordinates(ident.vec_raw())
        if coords is None:
            raise NotABasis("identity matrix is not in the span")
        self._identity = coords
        self._structure = None

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def contains(self, a: Mat) -> bool:
        if a.field != self.field or a.shape != (self.ambient, self.ambient):
            return False
        return self._ech.contains(a.vec_raw())

    def coordinates_raw(self, a: Mat) -> list | None:
        if a.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {a.field!r}")
        if a.shape != (self.ambient, self.ambient):
            return None
        return self._ech.coordinates(a.vec_raw())

    def coordinates(self, a: Mat) -> list[Scalar] | None:
        raw = self.coordinates_raw(a)
        if raw is None:
            return None
        return [Scalar(self.field, v) for v in raw]

    def combination_raw(self, coords) -> Mat:
        """Linear combination of the basis with raw coefficients."""
        if len(coords) != len(self.elements):
            raise NotABasis(f"{len(coords)} coefficients for {len(self.elements)}")
        p = self.field.p
        n = self.ambient
        from .matrices import _raw_zero

        rows = [[_raw_zero(self.field)] * n for _ in range(n)]
        for coeff, elem in zip(coords, self.elements):
            if not coeff:
                continue
            for i in range(n):
                erow = elem.rows[i]
                row = rows[i]
                for j in range(n):
                    if erow[j]:
                        row[j] += coeff * erow[j]
        if p is not None:
            rows = [[v % p for v in row] for row in rows]
        return Mat(self.field, rows, _raw=True)

    def identity_coordinates(self) -> list[Scalar]:
        return [Scalar(self.field, v) for v in self._identity]

    def structure_constants(self) -> list[list[list]]:
        """coords[i][j] expresses elements[i] * elements[j] in the basis.

        Raises NotClosed when some pairwise product leaves the span;
        computing these constants doubles as the closure check.
        """
        if self._structure is None:
            table = []
            for i, a in enumerate(self.elements):
                row = []
                for j, b in enumerate(self.elements):
                    coords = self._ech.coordinates((a * b).vec_raw())
                    if coords is None:
                        raise NotClosed(
                            f"product of basis elements {i} and {j} escapes the span"
                        )
                    row.append(coords)
                table.append(row)
            self._structure = table
        return self._structure

    def same_span(self, other: "SubalgebraBasis") -> bool:
        if (
            other.field != self.field
            or other.ambient != self.ambient
            or other.dimension != self.dimension
        ):
            return False
        return all(self._ech.contains(m.vec_raw()) for m in other.elements)

    def spans_all(self, mats) -> bool:
        return all(self.contains(m) for m in mats)

    def __repr__(self) -> str:
        return (
            f"SubalgebraBasis(dim {self.dimension} in M_{self.ambient}"
            f"({self.field!r}))"
        )


def centralizer_basis(c: Mat) -> SubalgebraBasis:
    """Brute-force basis of {a : ac = ca}.

    Kernel of transpose(c) (x) I - I (x) c acting on column-major
    vectorizations, devectorized in the eliminator's order.
    """
    if not c.is_square:
        raise NonSquare(f"centralizer of {c.shape}")
    n = c.nrows
    ident = Mat.identity(c.field, n)
    op = kron(c.transpose(), ident) - kron(ident, c)
    mats = [
        Mat.devec_raw(c.field, n, n, v) for v in kernel_raw(op)
    ]
    return SubalgebraBasis(mats)


def hom_space_basis(eig1: Scalar, n1: int, eig2: Scalar, n2: int) -> list[Mat]:
    """Basis of {h : J_{n1}(eig1) h = h J_{n2}(eig2)}.

    Empty when the eigenvalues differ; otherwise the rectangular shifts
    with offsets max(0, n2 - n1) .. n2 - 1, giving dimension min(n1, n2).
    """
    if eig1.field != eig2.field:
        raise FieldMismatch(f"{eig1.field!r} vs {eig2.field!r}")
    if n1 < 1 or n2 < 1:
        raise NonSquare(f"block sizes {n1}, {n2}")
    if eig1 != eig2:
        return []
    field = eig1.field
    return [shift_matrix(field, n1, n2, k) for k in range(max(0, n2 - n1), n2)]


def structured_centralizer_basis(spec: JordanSpec) -> SubalgebraBasis:
    """Centralizer basis of build_jordan_matrix(spec), assembled blockwise.

    Block pair (i, j) of the grid receives the intertwiner shifts for the
    corresponding Jordan blocks; pairs run in row-major order with shift
    offsets ascending.
    """
    field = spec.field
    total = spec.total
    offsets = []
    pos = 0
    for _, size in spec.blocks:
        offsets.append(pos)
        pos += size
    elements = []
    for bi, (eig_i, size_i) in enumerate(spec.blocks):
        for bj, (eig_j, size_j) in enumerate(spec.blocks):
            for h in hom_space_basis(eig_i, size_i, eig_j, size_j):
                rows = [
                    [field.coerce(0)] * total for _ in range(total)
                ]
                for r in range(size_i):
                    hrow = h.rows[r]
                    out = rows[offsets[bi] + r]
                    for cidx in range(size_j):
                        out[offsets[bj] + cidx] = hrow[cidx]
                elements.append(Mat(field, rows, _raw=True))
    return SubalgebraBasis(elements)


def membership(a: Mat, basis: SubalgebraBasis) -> list[Scalar] | None:
    """Coordinates of a over the basis, or None when a is outside the span."""
    return basis.coordinates(a)
