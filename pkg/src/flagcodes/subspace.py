"""Points of the Grassmannian and subspace codes.

A subspace is stored by its unique reduced row-echelon generator, so equality
is a plain comparison.  Distances come from the rank of stacked generators:
d(U, V) = dim(U+V) - dim(U int V) = 2 rk[U; V] - dim U - dim V.  Constant
dimension codes, partial spreads, equidistant codes, and cyclic orbit codes
with their stabilizers build on that.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import (
    AmbientMismatch,
    HypothesisUnmet,
    NotConstantDim,
    TooFewWords,
    ZeroRank,
)
from .matgf import DEFAULT_ORDER_CAP, MatrixGF, matrix_order, matrix_to_text, read_matrix

__all__ = [
    "GroupElementSeq",
    "Subspace",
    "SubspaceCode",
    "code_min_distance",
    "intersection_dim",
    "is_equidistant_c",
    "is_partial_spread",
    "max_partial_spread_size",
    "orbit_code",
    "stabilizer_order",
    "subspace_distance",
    "subspace_of",
]


class Subspace:
    """A nonzero subspace of GF(q)^n, canonicalized by its RREF generator."""

    __slots__ = ("ambient", "dim", "canon", "_piv", "_key")

    def __init__(self, canon: MatrixGF):
        # canon must already be a full-rank RREF matrix; use subspace_of()
        self.ambient = canon.ncols
        self.dim = canon.nrows
        self.canon = canon
        rows = canon.int_rows()
        if canon.field.q == 2:
            packed = canon.packed_rows()
            self._piv = {b & -b: b for b in packed}
        else:
            piv: dict[int, tuple[int, ...]] = {}
            for row in rows:
                c = next(j for j, v in enumerate(row) if v)
                piv[c] = row
            self._piv = piv
        self._key = (self.dim, rows)

    @property
    def field(self):
        return self.canon.field

    @property
    def key(self) -> tuple:
        """Deterministic sort key: dimension, then canonical entries."""
        return self._key

    def contains(self, other: Subspace) -> bool:
        """True iff ``other`` is a subspace of this space."""
        _check_ambient(self, other)
        return _stacked_rank(self, other) == self.dim

    def transform(self, g: MatrixGF) -> Subspace:
        """The image row space under right multiplication by ``g``."""
        if g.nrows != self.ambient:
            raise AmbientMismatch(
                f"{g.nrows}x{g.ncols} action on an ambient-{self.ambient} subspace"
            )
        return subspace_of(self.canon @ g)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient == other.ambient
            and self.field == other.field
            and self._key == other._key
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self._key))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of {self.field}^{self.ambient})"


def subspace_of(a: MatrixGF) -> Subspace:
    """The row space of ``a`` as a canonical Subspace."""
    reduced, rank = a.rref()
    if rank == 0:
        raise ZeroRank("the zero matrix spans no subspace")
    return Subspace(reduced.first_rows(rank))


def _check_ambient(u: Subspace, v: Subspace) -> None:
    if u.ambient != v.ambient or u.field != v.field:
        raise AmbientMismatch(
            f"{u.field}^{u.ambient} subspace vs {v.field}^{v.ambient} subspace"
        )


def _stacked_rank(u: Subspace, v: Subspace) -> int:
    """rk of the stacked canonical generators, seeded with u's pivots."""
    if u.field.q == 2:
        piv = dict(u._piv)
        rank = u.dim
        for w in v.canon.packed_rows():
            while w:
                low = w & -w
                row = piv.get(low)
                if row is None:
                    piv[low] = w
                    rank += 1
                    break
                w ^= row
        return rank
    field = u.field
    sub, mul, inv = field.sub, field.mul, field.inv
    piv = dict(u._piv)
    rank = u.dim
    for vrow in v.canon.int_rows():
        row = list(vrow)
        c = 0
        n = len(row)
        while c < n:
            x = row[c]
            if not x:
                c += 1
                continue
            base = piv.get(c)
            if base is None:
                if x != 1:
                    xi = inv(x)
                    row = [mul(xi, y) for y in row]
                piv[c] = tuple(row)
                rank += 1
                break
            row = [sub(a_, mul(x, b_)) for a_, b_ in zip(row, base)]
            c += 1
    return rank


def subspace_distance(u: Subspace, v: Subspace) -> int:
    """dim(U+V) - dim(U int V); always an even count for equal dimensions."""
    _check_ambient(u, v)
    return 2 * _stacked_rank(u, v) - u.dim - v.dim


def intersection_dim(u: Subspace, v: Subspace) -> int:
    _check_ambient(u, v)
    return u.dim + v.dim - _stacked_rank(u, v)


class SubspaceCode:
    """A set of subspaces of a common ambient space, stored sorted and deduped."""

    __slots__ = ("ambient", "words", "constant_dim")

    def __init__(self, ambient: int, words: Iterable[Subspace]):
        seen: dict[tuple, Subspace] = {}
        for w in words:
            if w.ambient != ambient:
                raise AmbientMismatch(
                    f"ambient-{w.ambient} word in an ambient-{ambient} code"
                )
            seen[w.key] = w
        ordered = tuple(seen[k] for k in sorted(seen))
        dims = {w.dim for w in ordered}
        self.ambient = ambient
        self.words = ordered
        self.constant_dim = dims.pop() if len(dims) == 1 else None

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Subspace]:
        return iter(self.words)

    def __contains__(self, item: Subspace) -> bool:
        return any(w == item for w in self.words)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubspaceCode):
            return NotImplemented
        return self.ambient == other.ambient and self.words == other.words

    def __repr__(self) -> str:
        dim = self.constant_dim if self.constant_dim is not None else "mixed"
        return f"SubspaceCode({len(self.words)} words, dim {dim}, ambient {self.ambient})"

    def dump(self) -> str:
        """Serialize as a ``n k q |C|`` header plus one canonical matrix per word."""
        if self.constant_dim is None:
            raise NotConstantDim("serialization needs a constant dimension code")
        field = self.words[0].field if self.words else None
        q = field.q if field else 0
        lines = [f"{self.ambient} {self.constant_dim} {q} {len(self.words)}"]
        for w in self.words:
            lines.append(matrix_to_text(w.canon))
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text: str) -> SubspaceCode:
        lines = iter(text.splitlines())
        header = next((ln for ln in lines if ln.strip()), None)
        if header is None:
            raise ValueError("empty subspace code file")
        parts = header.split()
        if len(parts) != 4:
            raise ValueError(f"bad code header {header!r}")
        n, k, _q, count = (int(t) for t in parts)
        words = []
        for _ in range(count):
            m = read_matrix(lines)
            w = subspace_of(m)
            if w.ambient != n or w.dim != k:
                raise ValueError("word does not match the code header")
            words.append(w)
        return cls(n, words)


def code_min_distance(code: SubspaceCode) -> int:
    """Minimum pairwise subspace distance, by exhaustive scan."""
    if len(code) < 2:
        raise TooFewWords("minimum distance needs at least two words")
    words = code.words
    best = None
    for i, u in enumerate(words):
        for v in words[i + 1 :]:
            d = subspace_distance(u, v)
            if best is None or d < best:
                best = d
    return best


def is_partial_spread(code: SubspaceCode) -> bool:
    """True iff all pairs of distinct words intersect trivially."""
    if code.constant_dim is None:
        raise NotConstantDim("partial spreads are constant dimension codes")
    words = code.words
    for i, u in enumerate(words):
        for v in words[i + 1 :]:
            if intersection_dim(u, v) != 0:
                return False
    return True


def is_equidistant_c(code: SubspaceCode, c: int) -> bool:
    """True iff every pairwise intersection has dimension exactly ``c``."""
    if code.constant_dim is None:
        raise NotConstantDim("equidistant codes are constant dimension codes")
    words = code.words
    for i, u in enumerate(words):
        for v in words[i + 1 :]:
            if intersection_dim(u, v) != c:
                return False
    return True


def max_partial_spread_size(q: int, k: int, n: int) -> int:
    """Largest possible size of a partial k-spread of GF(q)^n, in closed form.

    Writing n = sk + h with 0 <= h < k, the formula
    (q^n - q^(k+h)) / (q^k - 1) + 1 is exact whenever k > (q^h - 1)/(q - 1);
    outside that range this raises HypothesisUnmet instead of guessing.
    """
    if q < 2 or k < 1 or n < k:
        raise ValueError(f"bad parameters q={q}, k={k}, n={n}")
    h = n % k
    threshold = (q**h - 1) // (q - 1)
    if k <= threshold:
        raise HypothesisUnmet(
            f"bound not applicable: k={k} <= (q^h - 1)/(q - 1) = {threshold}"
        )
    num = q**n - q**(k + h)
    den = q**k - 1
    if num % den:
        raise ArithmeticError("spread-size formula did not divide evenly")
    return num // den + 1


@dataclass(frozen=True)
class GroupElementSeq:
    """A cyclic matrix group given by a generator and its multiplicative order.

    Elements are materialized lazily as successive powers; the full group is
    never stored.
    """

    generator: MatrixGF
    order: int

    def __post_init__(self):
        g = self.generator
        if g.nrows != g.ncols:
            raise AmbientMismatch("group generator must be square")
        if self.order < 1:
            raise ValueError("group order must be positive")
        if g**self.order != MatrixGF.identity(g.field, g.nrows):
            raise ValueError("generator**order is not the identity")

    @classmethod
    def from_generator(cls, g: MatrixGF, cap: int = DEFAULT_ORDER_CAP) -> GroupElementSeq:
        return cls(g, matrix_order(g, cap))

    @property
    def ambient(self) -> int:
        return self.generator.nrows

    def powers(self) -> Iterator[tuple[int, MatrixGF]]:
        """Yield (t, generator**t) for t = 1..order."""
        g = self.generator
        power = g
        yield 1, power
        for t in range(2, self.order + 1):
            power = power @ g
            yield t, power


def orbit_code(u: Subspace, group: GroupElementSeq) -> SubspaceCode:
    """The set of distinct images of ``u`` under the cyclic group."""
    if group.ambient != u.ambient:
        raise AmbientMismatch(
            f"{group.ambient}x{group.ambient} group acting on ambient {u.ambient}"
        )
    return SubspaceCode(u.ambient, (u.transform(g) for _, g in group.powers()))


def stabilizer_order(u: Subspace, group: GroupElementSeq) -> int:
    """Number of group elements fixing ``u``; divides the group order."""
    if group.ambient != u.ambient:
        raise AmbientMismatch(
            f"{group.ambient}x{group.ambient} group acting on ambient {u.ambient}"
        )
    return sum(1 for _, g in group.powers() if u.transform(g) == u)
