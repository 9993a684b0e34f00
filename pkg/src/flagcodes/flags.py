"""Flags, flag codes, and the flag distance.

A flag of type (t_1, ..., t_r) is a strictly nested chain of subspaces with
those dimensions; the flag distance is the componentwise sum of subspace
distances, bounded above by twice the sum of min(t_i, n - t_i).  This module
also carries the type-vector machinery: the pivotal indices a and b around
n/2, subsequence restriction, projected codes, cardinality consistency, the
optimum / quasi-optimum classification, and the additive split of the maximum
distance.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import (
    AmbientMismatch,
    EllOutOfRange,
    IndexOutOfRange,
    NotASubsequence,
    RankDeficientPrefix,
    TheoremViolated,
    TooFewFlags,
    TooFewRows,
    TypeMismatch,
)
from .matgf import MatrixGF, matrix_to_text, read_matrix
from .subspace import Subspace, SubspaceCode, code_min_distance, subspace_distance, subspace_of

__all__ = [
    "AbIndices",
    "Classification",
    "Flag",
    "FlagCode",
    "TypeVector",
    "ab_indices",
    "admissible_type_check",
    "classify",
    "code_flag_min_distance",
    "distance_decomposition_check",
    "dump_flag",
    "dump_flag_code",
    "flag_distance",
    "flag_from_matrix",
    "is_cardinality_consistent",
    "load_flag",
    "load_flag_code",
    "max_flag_distance",
    "optimum_check_ab",
    "projected_code",
    "projected_code_at_dim",
    "split_type",
    "subsequence_code",
]


@dataclass(frozen=True)
class TypeVector:
    """A strictly increasing vector of subspace dimensions inside GF(q)^n."""

    n: int
    dims: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"ambient dimension {self.n} is too small")
        if not self.dims:
            raise ValueError("a type vector needs at least one dimension")
        prev = 0
        for d in self.dims:
            if not 1 <= d <= self.n - 1:
                raise ValueError(f"dimension {d} outside [1, {self.n - 1}]")
            if d <= prev:
                raise ValueError(f"dimensions not strictly increasing at {d}")
            prev = d

    @classmethod
    def full(cls, n: int) -> TypeVector:
        """The longest possible type (1, 2, ..., n-1)."""
        return cls(n, tuple(range(1, n)))

    @classmethod
    def make(cls, n: int, dims: Iterable[int]) -> TypeVector:
        """Build from any iterable of dimensions, sorting and deduplicating."""
        return cls(n, tuple(sorted(set(dims))))

    @property
    def r(self) -> int:
        return len(self.dims)

    @property
    def is_full(self) -> bool:
        return self.dims == tuple(range(1, self.n))

    def is_subsequence_of(self, other: TypeVector) -> bool:
        if self.n != other.n:
            return False
        return set(self.dims) <= set(other.dims)

    def index_of_dim(self, dim: int) -> int:
        """1-based position of a dimension in the type."""
        try:
            return self.dims.index(dim) + 1
        except ValueError:
            raise IndexOutOfRange(f"dimension {dim} not in type {self.dims}") from None

    def __repr__(self) -> str:
        return f"TypeVector(n={self.n}, dims={self.dims})"


@dataclass(frozen=True)
class AbIndices:
    """The 1-based indices a = max{i : 2 t_i <= n} and b = min{i : 2 t_i >= n}.

    They never both vanish; both exist with a == b exactly when n is even and
    n/2 is a type dimension, and otherwise b == a + 1 whenever both exist.
    """

    a: int | None
    b: int | None

    def __post_init__(self):
        if self.a is None and self.b is None:
            raise ValueError("at least one of a and b must exist")


def ab_indices(tv: TypeVector) -> AbIndices:
    n = tv.n
    a = None
    b = None
    for idx, d in enumerate(tv.dims, start=1):
        if 2 * d <= n:
            a = idx
        if 2 * d >= n and b is None:
            b = idx
    return AbIndices(a, b)


class Flag:
    """A strictly nested chain of subspaces matching a type vector.

    ``source`` optionally keeps a generator matrix whose row prefixes produce
    the chain; it is ignored by equality and hashing.
    """

    __slots__ = ("type", "parts", "source", "_key")

    def __init__(
        self,
        type_: TypeVector,
        parts: Sequence[Subspace],
        source: MatrixGF | None = None,
    ):
        parts = tuple(parts)
        if len(parts) != type_.r:
            raise TypeMismatch(
                f"{len(parts)} components for a type of length {type_.r}"
            )
        for part, dim in zip(parts, type_.dims):
            if part.ambient != type_.n:
                raise AmbientMismatch(
                    f"ambient {part.ambient} component in GF(q)^{type_.n}"
                )
            if part.dim != dim:
                raise TypeMismatch(f"component of dim {part.dim} where {dim} expected")
        # nesting is usually automatic from prefix structure; re-verify anyway
        for lower, upper in zip(parts, parts[1:]):
            if not upper.contains(lower):
                raise RankDeficientPrefix(
                    f"component of dim {lower.dim} not inside the next of dim {upper.dim}"
                )
        self.type = type_
        self.parts = parts
        self.source = source
        self._key = tuple(p.key for p in parts)

    @property
    def key(self) -> tuple:
        return self._key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Flag):
            return NotImplemented
        return self.type == other.type and self._key == other._key

    def __hash__(self) -> int:
        return hash((self.type, self._key))

    def __repr__(self) -> str:
        return f"Flag(type {self.type.dims} in GF(q)^{self.type.n})"


def flag_from_matrix(w: MatrixGF, type_: TypeVector) -> Flag:
    """The flag whose i-th component is the row space of the first t_i rows."""
    if w.ncols != type_.n:
        raise AmbientMismatch(f"{w.ncols}-column matrix for ambient {type_.n}")
    if w.nrows < type_.dims[-1]:
        raise TooFewRows(
            f"{w.nrows} rows cannot produce a flag of type {type_.dims}"
        )
    parts = []
    for t in type_.dims:
        prefix = w.first_rows(t)
        if prefix.rank() != t:
            raise RankDeficientPrefix(f"first {t} rows have rank {prefix.rank()}")
        parts.append(subspace_of(prefix))
    return Flag(type_, parts, source=w)


class FlagCode:
    """A set of flags sharing one type vector, stored sorted and deduped."""

    __slots__ = ("type", "flags")

    def __init__(self, type_: TypeVector, flags: Iterable[Flag]):
        seen: dict[tuple, Flag] = {}
        for f in flags:
            if f.type != type_:
                raise TypeMismatch(f"flag of type {f.type.dims} in a {type_.dims} code")
            seen[f.key] = f
        self.type = type_
        self.flags = tuple(seen[k] for k in sorted(seen))

    def __len__(self) -> int:
        return len(self.flags)

    def __iter__(self) -> Iterator[Flag]:
        return iter(self.flags)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FlagCode):
            return NotImplemented
        return self.type == other.type and self.flags == other.flags

    def __repr__(self) -> str:
        return f"FlagCode({len(self.flags)} flags of type {self.type.dims})"


def flag_distance(f: Flag, g: Flag) -> int:
    """Componentwise sum of subspace distances."""
    if f.type != g.type:
        raise TypeMismatch(f"types {f.type.dims} vs {g.type.dims}")
    return sum(subspace_distance(u, v) for u, v in zip(f.parts, g.parts))


def max_flag_distance(tv: TypeVector) -> int:
    """The largest distance any two flags of this type can achieve:
    2 * sum over i of min(t_i, n - t_i)."""
    return 2 * sum(min(d, tv.n - d) for d in tv.dims)


def code_flag_min_distance(code: FlagCode) -> int:
    """Exhaustive pairwise minimum of the flag distance."""
    if len(code) < 2:
        raise TooFewFlags("minimum distance needs at least two flags")
    flags = code.flags
    best = None
    for i, f in enumerate(flags):
        fparts = f.parts
        for g in flags[i + 1 :]:
            total = 0
            for u, v in zip(fparts, g.parts):
                total += subspace_distance(u, v)
                if best is not None and total >= best:
                    break
            else:
                if best is None or total < best:
                    best = total
    return best


def projected_code(code: FlagCode, i: int) -> SubspaceCode:
    """The deduplicated set of i-th components (1-based index into the type)."""
    if not 1 <= i <= code.type.r:
        raise IndexOutOfRange(f"index {i} outside 1..{code.type.r}")
    return SubspaceCode(code.type.n, (f.parts[i - 1] for f in code))


def projected_code_at_dim(code: FlagCode, dim: int) -> SubspaceCode:
    """The projected code selected by dimension rather than position."""
    return projected_code(code, code.type.index_of_dim(dim))


def is_cardinality_consistent(code: FlagCode) -> bool:
    """True iff every projected code has as many words as the code has flags."""
    return all(
        len({f.parts[i].key for f in code}) == len(code)
        for i in range(code.type.r)
    )


@dataclass(frozen=True)
class Classification:
    """Where a code's distance sits below the maximum for its type."""

    min_distance: int
    max_distance: int
    deficit: int  # min_distance == max_distance - 2 * deficit
    label: str

    @property
    def is_optimum(self) -> bool:
        return self.deficit == 0


def classify(code: FlagCode) -> Classification:
    if len(code) < 2:
        raise TooFewFlags("classification needs at least two flags")
    d = code_flag_min_distance(code)
    top = max_flag_distance(code.type)
    gap = top - d
    if gap < 0 or gap % 2:
        raise TheoremViolated(
            f"distance {d} vs maximum {top}: the gap must be even and nonnegative"
        )
    ell = gap // 2
    if ell == 0:
        label = "optimum"
    elif ell == 1:
        label = "quasi-optimum"
    else:
        label = f"general({ell})"
    return Classification(d, top, ell, label)


def optimum_check_ab(code: FlagCode) -> bool:
    """Check optimality through the two projected codes nearest n/2.

    The code attains the maximum distance exactly when the projected codes at
    indices a and b (those that exist) are as large as the code and attain
    the maximum subspace distance for their dimension.  The result is cross
    checked against the direct classification; disagreement means a bug.
    """
    if len(code) < 2:
        raise TooFewFlags("optimality check needs at least two flags")
    tv = code.type
    ab = ab_indices(tv)
    ok = True
    for idx in sorted({i for i in (ab.a, ab.b) if i is not None}):
        ci = projected_code(code, idx)
        dim = tv.dims[idx - 1]
        if len(ci) != len(code):
            ok = False
            break
        if code_min_distance(ci) != 2 * min(dim, tv.n - dim):
            ok = False
            break
    direct = classify(code).is_optimum
    if ok != direct:
        raise TheoremViolated(
            f"projected-code optimality test ({ok}) disagrees with the direct "
            f"classification ({direct})"
        )
    return ok


def subsequence_code(code: FlagCode, sub: TypeVector) -> FlagCode:
    """Componentwise restriction of a flag code to a subsequence of its type."""
    tv = code.type
    if not sub.is_subsequence_of(tv):
        raise NotASubsequence(f"{sub.dims} is not a subsequence of {tv.dims}")
    positions = [tv.dims.index(d) for d in sub.dims]
    out = []
    for f in code:
        parts = [f.parts[p] for p in positions]
        out.append(Flag(sub, parts, source=f.source))
    return FlagCode(sub, out)


def split_type(tv: TypeVector, ell: int) -> tuple[TypeVector, TypeVector]:
    """Split a type into the 2*ell dimensions closest to n/2 and the rest.

    With a and b the pivotal indices, the inner part takes indices
    a-ell+1..a and b..b+ell-1 (as a set, so a == b contributes once); the
    outer part keeps everything else.  ``ell`` must be at least 1 and small
    enough that both sides stay nonempty on each existing flank.
    """
    ab = ab_indices(tv)
    r = tv.r
    if ab.a is not None and ab.b is not None:
        limit = min(ab.a - 1, r - ab.b)
    elif ab.a is not None:
        limit = ab.a - 1
    else:
        limit = r - ab.b
    if not 1 <= ell <= limit:
        raise EllOutOfRange(f"ell={ell} outside 1..{limit} for type {tv.dims}")
    inner: set[int] = set()
    if ab.a is not None:
        inner.update(range(ab.a - ell + 1, ab.a + 1))
    if ab.b is not None:
        inner.update(range(ab.b, ab.b + ell))
    inner_dims = [tv.dims[i - 1] for i in sorted(inner)]
    outer_dims = [d for i, d in enumerate(tv.dims, start=1) if i not in inner]
    return TypeVector(tv.n, tuple(inner_dims)), TypeVector(tv.n, tuple(outer_dims))


def distance_decomposition_check(tv: TypeVector, ell: int) -> bool:
    """Verify that the maximum distance is additive across the ell-split."""
    inner, outer = split_type(tv, ell)
    return max_flag_distance(tv) == max_flag_distance(inner) + max_flag_distance(outer)


def admissible_type_check(tv: TypeVector, k: int) -> bool:
    """True iff k is a type dimension and every dimension is <= k or >= n-k."""
    n = tv.n
    return k in tv.dims and all(d <= k or d >= n - k for d in tv.dims)


# -- serialization --------------------------------------------------------------


def _type_line(tv: TypeVector) -> str:
    return "type " + ",".join(str(d) for d in tv.dims)


def _parse_type_line(line: str, n: int) -> TypeVector:
    body = line.strip()
    if not body.startswith("type "):
        raise ValueError(f"expected a type line, got {line!r}")
    dims = tuple(int(t) for t in body[5:].split(","))
    return TypeVector(n, dims)


def dump_flag(flag: Flag) -> str:
    """Serialize as a type line plus either the t_r x n generator matrix
    (when the flag kept one) or each component matrix in order."""
    lines = [_type_line(flag.type)]
    if flag.source is not None:
        lines.append(matrix_to_text(flag.source.first_rows(flag.type.dims[-1])))
    else:
        for part in flag.parts:
            lines.append(matrix_to_text(part.canon))
    return "\n".join(lines) + "\n"


def _read_flag_body(lines: Iterator[str], tv: TypeVector) -> Flag:
    first = read_matrix(lines)
    if first.nrows == tv.dims[-1]:
        return flag_from_matrix(first, tv)
    parts = [subspace_of(first)]
    for _ in range(tv.r - 1):
        parts.append(subspace_of(read_matrix(lines)))
    return Flag(tv, parts)


def load_flag(text: str) -> Flag:
    lines = iter(text.splitlines())
    type_line = next((ln for ln in lines if ln.strip()), None)
    if type_line is None:
        raise ValueError("empty flag file")
    # the ambient dimension comes from the first matrix header, so peek ahead
    rest = list(lines)
    probe = read_matrix(iter(rest))
    tv = _parse_type_line(type_line, probe.ncols)
    return _read_flag_body(iter(rest), tv)


def dump_flag_code(code: FlagCode) -> str:
    """Serialize as ``flagcode n q |C|``, a shared type line, then one flag
    matrix block per flag."""
    field = code.flags[0].parts[0].field if len(code) else None
    q = field.q if field else 0
    lines = [f"flagcode {code.type.n} {q} {len(code)}", _type_line(code.type)]
    for f in code:
        if f.source is not None:
            lines.append(matrix_to_text(f.source.first_rows(code.type.dims[-1])))
        else:
            for part in f.parts:
                lines.append(matrix_to_text(part.canon))
    return "\n".join(lines) + "\n"


def load_flag_code(text: str) -> FlagCode:
    lines = iter(text.splitlines())
    header = next((ln for ln in lines if ln.strip()), None)
    if header is None:
        raise ValueError("empty flag code file")
    parts = header.split()
    if len(parts) != 4 or parts[0] != "flagcode":
        raise ValueError(f"bad flag code header {header!r}")
    n, _q, count = int(parts[1]), int(parts[2]), int(parts[3])
    type_line = next((ln for ln in lines if ln.strip()), None)
    if type_line is None:
        raise ValueError("flag code file has no type line")
    tv = _parse_type_line(type_line, n)
    flags = [_read_flag_body(lines, tv) for _ in range(count)]
    return FlagCode(tv, flags)
