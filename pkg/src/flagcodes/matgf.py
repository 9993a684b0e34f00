"""Dense exact matrices over GF(q).

Provides products, reduced row-echelon forms, ranks, companion matrices,
block assembly, multiplicative orders, and the 1-based row-slicing accessors
(first j rows, rows after j, a single row, an inclusive row range) that the
subspace constructions use throughout.  Matrices are immutable; GF(2) work is
bit-packed internally while the external contract stays a grid of field
elements.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import (
    BlockDimMismatch,
    DimMismatch,
    FieldMismatch,
    NonMonic,
    OrderCapExceeded,
    Singular,
    SliceOutOfRange,
)
from .field import FieldElement, FieldSpec, Poly, parse_field_name

__all__ = [
    "DEFAULT_ORDER_CAP",
    "MatrixGF",
    "RowSlice",
    "block",
    "companion",
    "mat_mul",
    "matrix_from_text",
    "matrix_order",
    "matrix_to_text",
    "read_matrix",
    "rows_in_row_space",
    "vstack",
]

DEFAULT_ORDER_CAP = 1 << 20


@dataclass(frozen=True)
class RowSlice:
    """A 1-based row-slice request: which rows of a matrix to keep."""

    kind: str  # "first" | "after" | "single" | "range"
    i: int
    j: int = 0

    @classmethod
    def first(cls, j: int) -> RowSlice:
        """Rows 1..j."""
        return cls("first", j)

    @classmethod
    def after(cls, j: int) -> RowSlice:
        """Rows j+1..last."""
        return cls("after", j)

    @classmethod
    def single(cls, j: int) -> RowSlice:
        """Row j alone."""
        return cls("single", j)

    @classmethod
    def range(cls, i: int, j: int) -> RowSlice:
        """Rows i..j inclusive."""
        return cls("range", i, j)


def _pack(row: Sequence[int]) -> int:
    bits = 0
    for j, v in enumerate(row):
        if v:
            bits |= 1 << j
    return bits


def _unpack(bits: int, ncols: int) -> tuple[int, ...]:
    return tuple((bits >> j) & 1 for j in range(ncols))


def _rref_gf2(packed: list[int], ncols: int) -> tuple[list[int], list[int]]:
    work = list(packed)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        mask = 1 << c
        pr = next((i for i in range(r, len(work)) if work[i] & mask), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        wr = work[r]
        for i in range(len(work)):
            if i != r and work[i] & mask:
                work[i] ^= wr
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work, pivots


def _rref_generic(rows: list[list[int]], field: FieldSpec) -> tuple[list[list[int]], list[int]]:
    sub, mul, inv = field.sub, field.mul, field.inv
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        if piv != 1:
            pi = inv(piv)
            rows[r] = [mul(pi, x) for x in rows[r]]
        top = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [sub(x, mul(f, y)) for x, y in zip(rows[i], top)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


class MatrixGF:
    """An immutable matrix over a FieldSpec, stored as element codes."""

    __slots__ = ("field", "nrows", "ncols", "_rows", "_hash", "_rref")

    def __init__(
        self,
        field: FieldSpec,
        rows: Iterable[Iterable[int | FieldElement]],
        ncols: int | None = None,
    ):
        norm = tuple(tuple(field.code_of(v) for v in row) for row in rows)
        widths = {len(r) for r in norm}
        if len(widths) > 1:
            raise DimMismatch(f"ragged rows with widths {sorted(widths)}")
        if norm:
            width = widths.pop()
            if ncols is not None and ncols != width:
                raise DimMismatch(f"rows have {width} columns, expected {ncols}")
        else:
            if ncols is None:
                ncols = 0
            width = ncols
        self.field = field
        self.nrows = len(norm)
        self.ncols = width
        self._rows = norm
        self._hash = None
        self._rref = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> MatrixGF:
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> MatrixGF:
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols=ncols)

    # -- inspection ----------------------------------------------------------

    def entry(self, i: int, j: int) -> FieldElement:
        """The (i, j) entry, 1-based."""
        if not (1 <= i <= self.nrows and 1 <= j <= self.ncols):
            raise SliceOutOfRange(f"entry ({i},{j}) outside {self.nrows}x{self.ncols}")
        return FieldElement(self.field, self._rows[i - 1][j - 1])

    def int_rows(self) -> tuple[tuple[int, ...], ...]:
        """The grid of element codes (polynomial-basis codes for extensions)."""
        return self._rows

    def packed_rows(self) -> list[int]:
        """Rows as bitmasks; GF(2) only."""
        if self.field.q != 2:
            raise FieldMismatch("bit packing applies to GF(2) matrices only")
        return [_pack(r) for r in self._rows]

    @property
    def is_zero(self) -> bool:
        return all(not any(r) for r in self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixGF):
            return NotImplemented
        return (
            self.field == other.field
            and self.ncols == other.ncols
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, self.ncols, self._rows))
        return self._hash

    def __repr__(self) -> str:
        return f"MatrixGF({self.nrows}x{self.ncols} over {self.field})"

    # -- arithmetic -----------------------------------------------------------

    def __matmul__(self, other: MatrixGF) -> MatrixGF:
        return mat_mul(self, other)

    def __pow__(self, n: int) -> MatrixGF:
        if self.nrows != self.ncols:
            raise DimMismatch("matrix power needs a square matrix")
        if n < 0:
            raise ValueError("exponent must be nonnegative")
        result = MatrixGF.identity(self.field, self.nrows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def transpose(self) -> MatrixGF:
        return MatrixGF(
            self.field,
            [[self._rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def rref(self) -> tuple[MatrixGF, int]:
        """Reduced row-echelon form and rank.

        Pivots are 1 with their columns otherwise cleared and strictly
        increasing, so the result is the unique canonical form of the row
        space, padded with zero rows back to the original shape.
        """
        if self._rref is None:
            if self.field.q == 2:
                work, pivots = _rref_gf2(self.packed_rows(), self.ncols)
                rows = [_unpack(b, self.ncols) for b in work]
            else:
                work, pivots = _rref_generic([list(r) for r in self._rows], self.field)
                rows = [tuple(r) for r in work]
            rank = len(pivots)
            ordered = [r for r in rows if any(r)]
            ordered += [tuple([0] * self.ncols)] * (self.nrows - len(ordered))
            reduced = MatrixGF(self.field, ordered, ncols=self.ncols)
            reduced._rref = (reduced, rank, tuple(pivots))
            self._rref = (reduced, rank, tuple(pivots))
        return self._rref[0], self._rref[1]

    def rank(self) -> int:
        return self.rref()[1]

    def pivot_columns(self) -> tuple[int, ...]:
        """0-based pivot columns of the reduced form."""
        self.rref()
        return self._rref[2]

    # -- row slicing (1-based, mirroring the constructions) -------------------

    def first_rows(self, j: int) -> MatrixGF:
        """The submatrix of the first j rows; requires 1 <= j <= nrows."""
        if not 1 <= j <= self.nrows:
            raise SliceOutOfRange(f"first {j} rows of a {self.nrows}-row matrix")
        return MatrixGF(self.field, self._rows[:j], ncols=self.ncols)

    def rows_after(self, j: int) -> MatrixGF:
        """The submatrix of rows j+1..nrows; requires 1 <= j < nrows."""
        if not 1 <= j < self.nrows:
            raise SliceOutOfRange(f"rows after {j} of a {self.nrows}-row matrix")
        return MatrixGF(self.field, self._rows[j:], ncols=self.ncols)

    def single_row(self, j: int) -> MatrixGF:
        """Row j as a 1-row matrix; requires 1 <= j <= nrows."""
        if not 1 <= j <= self.nrows:
            raise SliceOutOfRange(f"row {j} of a {self.nrows}-row matrix")
        return MatrixGF(self.field, [self._rows[j - 1]], ncols=self.ncols)

    def row_range(self, i: int, j: int) -> MatrixGF:
        """Rows i..j inclusive; requires 1 <= i <= j <= nrows."""
        if not 1 <= i <= j <= self.nrows:
            raise SliceOutOfRange(f"rows {i}..{j} of a {self.nrows}-row matrix")
        return MatrixGF(self.field, self._rows[i - 1 : j], ncols=self.ncols)

    def slice(self, s: RowSlice) -> MatrixGF:
        if s.kind == "first":
            return self.first_rows(s.i)
        if s.kind == "after":
            return self.rows_after(s.i)
        if s.kind == "single":
            return self.single_row(s.i)
        if s.kind == "range":
            return self.row_range(s.i, s.j)
        raise ValueError(f"unknown slice kind {s.kind!r}")


def mat_mul(a: MatrixGF, b: MatrixGF) -> MatrixGF:
    """Exact matrix product."""
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} matrix times {b.field} matrix")
    if a.ncols != b.nrows:
        raise DimMismatch(f"{a.nrows}x{a.ncols} times {b.nrows}x{b.ncols}")
    field = a.field
    if field.q == 2:
        brows = b.packed_rows()
        out = []
        for arow in a.int_rows():
            acc = 0
            for j, v in enumerate(arow):
                if v:
                    acc ^= brows[j]
            out.append(_unpack(acc, b.ncols))
        return MatrixGF(field, out, ncols=b.ncols)
    add, mul = field.add, field.mul
    out = [[0] * b.ncols for _ in range(a.nrows)]
    brows = b.int_rows()
    for i, arow in enumerate(a.int_rows()):
        orow = out[i]
        for j, v in enumerate(arow):
            if v:
                brow = brows[j]
                for c, w in enumerate(brow):
                    if w:
                        orow[c] = add(orow[c], mul(v, w))
    return MatrixGF(field, out, ncols=b.ncols)


def vstack(mats: Sequence[MatrixGF]) -> MatrixGF:
    """Stack matrices vertically."""
    if not mats:
        raise DimMismatch("nothing to stack")
    field = mats[0].field
    ncols = mats[0].ncols
    rows: list[tuple[int, ...]] = []
    for m in mats:
        if m.field != field:
            raise FieldMismatch("stacking matrices over different fields")
        if m.ncols != ncols:
            raise DimMismatch(f"stacking {ncols}-column and {m.ncols}-column matrices")
        rows.extend(m.int_rows())
    return MatrixGF(field, rows, ncols=ncols)


def block(field: FieldSpec, cells: Sequence[Sequence[MatrixGF | None]]) -> MatrixGF:
    """Assemble a block matrix; ``None`` cells become zero blocks whose shape
    is inferred from their block row and column."""
    nbr = len(cells)
    nbc = len(cells[0]) if nbr else 0
    if any(len(row) != nbc for row in cells):
        raise BlockDimMismatch("ragged block grid")
    heights = [None] * nbr
    widths = [None] * nbc
    for i, row in enumerate(cells):
        for j, cell in enumerate(row):
            if cell is None:
                continue
            if cell.field != field:
                raise FieldMismatch("block cell over a different field")
            if heights[i] is None:
                heights[i] = cell.nrows
            elif heights[i] != cell.nrows:
                raise BlockDimMismatch(
                    f"block row {i} mixes heights {heights[i]} and {cell.nrows}"
                )
            if widths[j] is None:
                widths[j] = cell.ncols
            elif widths[j] != cell.ncols:
                raise BlockDimMismatch(
                    f"block column {j} mixes widths {widths[j]} and {cell.ncols}"
                )
    if any(h is None for h in heights) or any(w is None for w in widths):
        raise BlockDimMismatch("a full block row or column has no sized cell")
    out: list[list[int]] = []
    for i, row in enumerate(cells):
        for r in range(heights[i]):
            line: list[int] = []
            for j, cell in enumerate(row):
                if cell is None:
                    line.extend([0] * widths[j])
                else:
                    line.extend(cell.int_rows()[r])
            out.append(line)
    return MatrixGF(field, out, ncols=sum(widths))


def companion(f: Poly) -> MatrixGF:
    """Companion matrix of a monic polynomial: superdiagonal ones and last
    row holding the negated coefficients; satisfies f evaluated at it = 0."""
    if not f.is_monic:
        raise NonMonic(f"{f!r} is not monic")
    k = f.degree
    if k < 1:
        raise DimMismatch("companion matrix needs degree >= 1")
    field = f.field
    rows = [[1 if j == i + 1 else 0 for j in range(k)] for i in range(k - 1)]
    rows.append([field.neg(c) for c in f.coeffs[:k]])
    return MatrixGF(field, rows, ncols=k)


def matrix_order(a: MatrixGF, cap: int = DEFAULT_ORDER_CAP) -> int:
    """Smallest t >= 1 with a**t equal to the identity, by iterated products."""
    if a.nrows != a.ncols:
        raise DimMismatch("order of a non-square matrix")
    if a.rank() != a.nrows:
        raise Singular("order of a singular matrix")
    ident = MatrixGF.identity(a.field, a.nrows)
    power = a
    t = 1
    while power != ident:
        power = power @ a
        t += 1
        if t > cap:
            raise OrderCapExceeded(f"order exceeds cap {cap}")
    return t


def rows_in_row_space(inner: MatrixGF, outer: MatrixGF) -> bool:
    """True iff every row of ``inner`` lies in the row space of ``outer``."""
    if inner.field != outer.field or inner.ncols != outer.ncols:
        raise DimMismatch("row-space test needs matching shapes and fields")
    return vstack([outer, inner]).rank() == outer.rank()


# -- text format ---------------------------------------------------------------

_HEADER_RE = re.compile(r"^(\d+)\s+(\d+)\s+(GF\(\d+(?:\^\d+)?\))$")


def matrix_to_text(m: MatrixGF) -> str:
    """Render as a ``rows cols GF(q)`` header plus one line per row of
    space-separated element codes."""
    lines = [f"{m.nrows} {m.ncols} {m.field}"]
    for row in m.int_rows():
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines)


def read_matrix(lines: Iterator[str], field: FieldSpec | None = None) -> MatrixGF:
    """Consume one matrix from an iterator of lines (blank lines skipped)."""
    header = None
    for raw in lines:
        if raw.strip():
            header = raw.strip()
            break
    if header is None:
        raise ValueError("no matrix header found")
    m = _HEADER_RE.match(header)
    if not m:
        raise ValueError(f"bad matrix header {header!r}")
    nrows, ncols = int(m.group(1)), int(m.group(2))
    named = parse_field_name(m.group(3))
    if field is not None:
        if field != named:
            raise FieldMismatch(f"matrix over {named}, caller expects {field}")
        named = field
    rows = []
    while len(rows) < nrows:
        raw = next(lines, None)
        if raw is None:
            raise ValueError(f"matrix ended after {len(rows)} of {nrows} rows")
        raw = raw.strip()
        if not raw:
            continue
        vals = [int(t) for t in raw.split()]
        if len(vals) != ncols:
            raise ValueError(f"row has {len(vals)} entries, expected {ncols}")
        rows.append(vals)
    return MatrixGF(named, rows, ncols=ncols)


def matrix_from_text(text: str, field: FieldSpec | None = None) -> MatrixGF:
    return read_matrix(iter(text.splitlines()), field)
