"""The orbit-based flag code constructions on GF(q)^n with n = sk + h.

For each i in 1..s-1 a cyclic group G_i acts on a seed hyperplane matrix A_i;
together with companion matrices B_i and the anti-diagonal matrix M this
yields a generator family of sum_{i=1}^{s-1} q^(ik+h) + 1 distinct row
spaces.  Taking row-prefix flags of the generator matrices produces, by type
vector:

* the full type (1, ..., n-1);
* the admissible type (1, ..., k, n-k, ..., n-1), whose code attains the
  maximum possible flag distance;
* the master type (1, ..., k+h, 2k+h, ..., (s-2)k+h, n-k, ..., n-1) and its
  subsequences, with flag distance 2k(s+h+k-2) for s != 4 and
  2k(k+h+1) + 2h for s = 4 when 2k+h is kept in the type.

Every claimed cardinality, spread property, and distance is re-verified here
by exhaustive computation; the verify_* functions return structured
pass/fail reports rather than aborting.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from time import perf_counter
from typing import Callable

from .errors import (
    CardinalityMismatch,
    HypothesisUnmet,
    NotASubsequence,
    TheoremViolated,
)
from .field import DEFAULT_FACTOR_BUDGET, FieldSpec, field_from_order, iter_primitive_polys
from .flags import (
    FlagCode,
    TypeVector,
    ab_indices,
    admissible_type_check,
    classify,
    code_flag_min_distance,
    distance_decomposition_check,
    flag_from_matrix,
    is_cardinality_consistent,
    max_flag_distance,
    optimum_check_ab,
    projected_code,
    split_type,
    subsequence_code,
)
from .matgf import DEFAULT_ORDER_CAP, MatrixGF, block, companion, matrix_order
from .subspace import (
    GroupElementSeq,
    Subspace,
    SubspaceCode,
    code_min_distance,
    is_partial_spread,
    max_partial_spread_size,
    orbit_code,
    stabilizer_order,
    subspace_distance,
    subspace_of,
)

__all__ = [
    "Claim",
    "ConstructionParams",
    "GeneratorEntry",
    "GeneratorSet",
    "VerificationReport",
    "admissible_type",
    "build_A",
    "build_B",
    "build_G_generator",
    "build_M",
    "build_P",
    "build_full_flag_code",
    "build_generator_set",
    "build_longer_type_code",
    "build_optimum_code",
    "expected_restricted_distance",
    "master_type",
    "middle_dims",
    "run_claim_suite",
    "verify_intermediate_distances",
    "verify_maximality",
    "verify_orbit_decomposition",
    "verify_spread_projections",
]


@dataclass(frozen=True)
class ConstructionParams:
    """Input bundle (q, k, h, s) with n = sk + h, plus reproducibility knobs.

    ``poly_choice`` selects the poly_choice-th smallest primitive polynomial
    for every degree the construction needs (0 = smallest); the guaranteed
    properties hold for any choice, so rebuilding with 1 is a useful
    independence check.
    """

    field: FieldSpec
    k: int
    h: int
    s: int
    poly_choice: int = 0
    factor_budget: int = DEFAULT_FACTOR_BUDGET
    order_cap: int = DEFAULT_ORDER_CAP

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if not 0 <= self.h < self.k:
            raise ValueError(f"h must satisfy 0 <= h < k, got h={self.h}, k={self.k}")
        if self.s < 2:
            raise ValueError(f"s must be >= 2, got {self.s}")
        if self.poly_choice < 0:
            raise ValueError("poly_choice must be nonnegative")

    @classmethod
    def make(cls, q: int, k: int, h: int, s: int, **kwargs) -> ConstructionParams:
        return cls(field_from_order(q), k, h, s, **kwargs)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n(self) -> int:
        return self.s * self.k + self.h

    @property
    def expected_size(self) -> int:
        return sum(self.q ** (i * self.k + self.h) for i in range(1, self.s)) + 1

    def describe(self) -> dict:
        return {"q": self.q, "k": self.k, "h": self.h, "s": self.s, "n": self.n}


def master_type(params: ConstructionParams) -> TypeVector:
    """The longest guaranteed type: (1..k+h, 2k+h, ..., (s-2)k+h, n-k..n-1)."""
    k, h, s, n = params.k, params.h, params.s, params.n
    dims = set(range(1, k + h + 1))
    dims.update(j * k + h for j in range(2, s - 1))
    dims.update(range(n - k, n))
    return TypeVector.make(n, dims)


def admissible_type(params: ConstructionParams) -> TypeVector:
    """The type (1..k, n-k..n-1) on which the maximum distance is attained."""
    k, n = params.k, params.n
    return TypeVector.make(n, set(range(1, k + 1)) | set(range(n - k, n)))


def middle_dims(params: ConstructionParams) -> list[int]:
    """Dimensions of the master type strictly between k and n-k."""
    k, h, s, n = params.k, params.h, params.s, params.n
    if s == 2:
        return list(range(k + 1, n - k))
    return list(range(k + 1, k + h + 1)) + [j * k + h for j in range(2, s - 1)]


def expected_restricted_distance(params: ConstructionParams, tv: TypeVector) -> int:
    """Guaranteed flag distance of the construction restricted to ``tv``.

    Per dimension t: 2t below k, 2(n-t) above n-k, and 2k in between, except
    that for s = 4 the dimension 2k+h contributes 2h.
    """
    k, h, s, n = params.k, params.h, params.s, params.n
    total = 0
    for t in tv.dims:
        if t <= k:
            total += 2 * t
        elif t >= n - k:
            total += 2 * (n - t)
        elif s == 4 and t == 2 * k + h:
            total += 2 * h
        else:
            total += 2 * k
    return total


def _primitive_poly(params: ConstructionParams, degree: int):
    it = iter_primitive_polys(params.field, degree, params.factor_budget)
    for _ in range(params.poly_choice):
        next(it)
    return next(it)


def build_P(params: ConstructionParams, i: int) -> MatrixGF:
    """Companion matrix of the chosen primitive polynomial of degree ik+h."""
    _check_family_index(params, i)
    return companion(_primitive_poly(params, i * params.k + params.h))


def _check_family_index(params: ConstructionParams, i: int) -> None:
    if not 1 <= i <= params.s - 1:
        raise ValueError(f"family index {i} outside 1..{params.s - 1}")


def build_G_generator(params: ConstructionParams, i: int) -> MatrixGF:
    """Generator of the cyclic group G_i: blockdiag(I_(s-i-1)k, I_k, P_i)."""
    _check_family_index(params, i)
    f = params.field
    w1 = (params.s - i - 1) * params.k
    return block(
        f,
        [
            [MatrixGF.identity(f, w1), None, None],
            [None, MatrixGF.identity(f, params.k), None],
            [None, None, build_P(params, i)],
        ],
    )


def _family_matrix(
    params: ConstructionParams, i: int, x: MatrixGF, top_right: bool
) -> MatrixGF:
    """The (n-1) x n block matrix over column widths ((s-i-1)k, k, ik+h):

        [ 0 | I_k | X^(k) or 0 ]
        [ 0 |  0  | X^[k]      ]
        [ I |  0  | 0          ]
        [ 0 |  0  | X^(k-1)    ]
    """
    f = params.field
    k = params.k
    w1 = (params.s - i - 1) * k
    d = i * k + params.h
    top = x.first_rows(k) if top_right else MatrixGF.zeros(f, k, d)
    mid = x.rows_after(k) if d > k else MatrixGF.zeros(f, 0, d)
    low = x.first_rows(k - 1) if k > 1 else MatrixGF.zeros(f, 0, d)
    return block(
        f,
        [
            [MatrixGF.zeros(f, k, w1), MatrixGF.identity(f, k), top],
            [MatrixGF.zeros(f, d - k, w1), MatrixGF.zeros(f, d - k, k), mid],
            [MatrixGF.identity(f, w1), MatrixGF.zeros(f, w1, k), MatrixGF.zeros(f, w1, d)],
            [MatrixGF.zeros(f, k - 1, w1), MatrixGF.zeros(f, k - 1, k), low],
        ],
    )


def build_A(params: ConstructionParams, i: int) -> MatrixGF:
    """Seed matrix A_i: identity slices in the right column block."""
    _check_family_index(params, i)
    d = i * params.k + params.h
    ident = MatrixGF.identity(params.field, d)
    m = _family_matrix(params, i, ident, top_right=True)
    _assert_hyperplane(params, m, f"A_{i}")
    return m


def build_B(params: ConstructionParams, i: int) -> MatrixGF:
    """Companion seed B_i: as A_i but with a zero top-right block."""
    _check_family_index(params, i)
    d = i * params.k + params.h
    ident = MatrixGF.identity(params.field, d)
    m = _family_matrix(params, i, ident, top_right=False)
    _assert_hyperplane(params, m, f"B_{i}")
    return m


def build_M(params: ConstructionParams) -> MatrixGF:
    """The (n-1) x n anti-diagonal matrix: row j has its 1 in column n+1-j."""
    n = params.n
    rows = [[1 if c == n - j else 0 for c in range(n)] for j in range(1, n)]
    m = MatrixGF(params.field, rows, ncols=n)
    _assert_hyperplane(params, m, "M")
    return m


def _assert_hyperplane(params: ConstructionParams, m: MatrixGF, label: str) -> None:
    if m.nrows != params.n - 1 or m.ncols != params.n:
        raise TheoremViolated(
            f"{label} is {m.nrows}x{m.ncols}, expected {params.n - 1}x{params.n}"
        )
    if m.rank() != params.n - 1:
        raise TheoremViolated(f"{label} is not of full row rank")


@dataclass(frozen=True)
class GeneratorEntry:
    """One generator matrix with its provenance inside the family."""

    kind: str  # "A" | "B" | "M"
    index: int | None  # family index i, None for M
    power: int | None  # group-element exponent t, only for kind "A"
    matrix: MatrixGF
    space: Subspace

    @property
    def label(self) -> str:
        if self.kind == "A":
            return f"A_{self.index}.g^{self.power}"
        if self.kind == "B":
            return f"B_{self.index}"
        return "M"


@dataclass(frozen=True)
class GeneratorSet:
    """All generator matrices of the construction, with deduplicated spaces."""

    params: ConstructionParams
    entries: tuple[GeneratorEntry, ...]
    spaces: tuple[Subspace, ...]

    @property
    def expected_size(self) -> int:
        return self.params.expected_size

    def entry(self, kind: str, index: int | None = None, power: int | None = None) -> GeneratorEntry:
        for e in self.entries:
            if e.kind == kind and e.index == index and e.power == power:
                return e
        raise KeyError(f"no generator entry ({kind}, {index}, {power})")

    def flag_code(self, tv: TypeVector) -> FlagCode:
        return FlagCode(tv, (flag_from_matrix(e.matrix, tv) for e in self.entries))

    def projected_at_dim(self, m: int) -> SubspaceCode:
        """Row spaces of the first m rows of every generator matrix."""
        return SubspaceCode(
            self.params.n, (subspace_of(e.matrix.first_rows(m)) for e in self.entries)
        )


def build_generator_set(params: ConstructionParams) -> GeneratorSet:
    """Materialize every A_i g, B_i, and M, checking the block identity
    A_i g = [0 | I_k | X^(k); 0 | 0 | X^[k]; I | 0 | 0; 0 | 0 | X^(k-1)]
    for X the matching power of P_i, and the total count of distinct row
    spaces against sum q^(ik+h) + 1."""
    entries: list[GeneratorEntry] = []
    n = params.n
    ident_n = MatrixGF.identity(params.field, n)
    for i in range(1, params.s):
        p_i = build_P(params, i)
        gen = build_G_generator(params, i)
        a_i = build_A(params, i)
        order = params.q ** (i * params.k + params.h) - 1
        g_t = None
        x_t = None
        for t in range(1, order + 1):
            g_t = gen if t == 1 else g_t @ gen
            x_t = p_i if t == 1 else x_t @ p_i
            m_t = a_i @ g_t
            if m_t != _family_matrix(params, i, x_t, top_right=True):
                raise TheoremViolated(
                    f"A_{i} g^{t} does not match its block form"
                )
            space = subspace_of(m_t)
            if space.dim != n - 1:
                raise TheoremViolated(f"A_{i} g^{t} lost row rank")
            entries.append(GeneratorEntry("A", i, t, m_t, space))
        if g_t != ident_n:
            raise TheoremViolated(f"G_{i} generator order does not divide {order}")
        b_i = build_B(params, i)
        entries.append(GeneratorEntry("B", i, None, b_i, subspace_of(b_i)))
    m_mat = build_M(params)
    entries.append(GeneratorEntry("M", None, None, m_mat, subspace_of(m_mat)))

    distinct = {e.space.key: e.space for e in entries}
    if len(distinct) != params.expected_size:
        raise CardinalityMismatch(
            f"{len(distinct)} distinct row spaces, expected {params.expected_size}"
        )
    spaces = tuple(distinct[k] for k in sorted(distinct))
    return GeneratorSet(params, tuple(entries), spaces)


def build_full_flag_code(
    params: ConstructionParams, gen: GeneratorSet | None = None
) -> FlagCode:
    """One full-type flag per generator matrix, via its row prefixes."""
    gen = gen or build_generator_set(params)
    code = gen.flag_code(TypeVector.full(params.n))
    if len(code) != params.expected_size:
        raise CardinalityMismatch(
            f"{len(code)} full flags, expected {params.expected_size}"
        )
    return code


def build_optimum_code(
    params: ConstructionParams, gen: GeneratorSet | None = None
) -> FlagCode:
    """The admissible-type code; verified to attain the maximum distance."""
    gen = gen or build_generator_set(params)
    tv = admissible_type(params)
    code = gen.flag_code(tv)
    if len(code) != params.expected_size:
        raise CardinalityMismatch(
            f"{len(code)} flags of type {tv.dims}, expected {params.expected_size}"
        )
    if not classify(code).is_optimum:
        raise TheoremViolated(
            f"admissible-type code missed the maximum distance {max_flag_distance(tv)}"
        )
    return code


def build_longer_type_code(
    params: ConstructionParams,
    type_: TypeVector | None = None,
    gen: GeneratorSet | None = None,
) -> FlagCode:
    """The master-type code or any subsequence of it, with its guaranteed
    size, cardinality consistency, and distance re-verified."""
    gen = gen or build_generator_set(params)
    mt = master_type(params)
    tv = type_ if type_ is not None else mt
    if not tv.is_subsequence_of(mt):
        raise NotASubsequence(f"{tv.dims} is not a subsequence of {mt.dims}")
    code = gen.flag_code(tv)
    if len(code) != params.expected_size:
        raise CardinalityMismatch(
            f"{len(code)} flags of type {tv.dims}, expected {params.expected_size}"
        )
    if not is_cardinality_consistent(code):
        raise TheoremViolated(f"type {tv.dims} code is not cardinality-consistent")
    expected = expected_restricted_distance(params, tv)
    if len(code) >= 2:
        actual = code_flag_min_distance(code)
        if actual != expected:
            raise TheoremViolated(
                f"type {tv.dims} code has distance {actual}, expected {expected}"
            )
    return code


# -- verification reports -------------------------------------------------------


@dataclass
class Claim:
    """One checked statement with its expected and computed values."""

    claim_id: str
    statement: str
    expected: object
    computed: object
    passed: bool
    seconds: float

    def to_text(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f'{self.claim_id} {self.expected!r} {self.computed!r} {verdict} "{self.statement}"'


@dataclass
class VerificationReport:
    """Structured pass/fail record of every checked claim."""

    params: dict
    type_dims: tuple[int, ...] | None = None
    claims: list[Claim] = dataclass_field(default_factory=list)

    def check(
        self,
        claim_id: str,
        statement: str,
        expected: object,
        compute: Callable[[], object],
    ) -> bool:
        start = perf_counter()
        try:
            computed = compute()
        except Exception as exc:  # report-based: record the failure, keep going
            computed = f"{type(exc).__name__}: {exc}"
        elapsed = perf_counter() - start
        passed = computed == expected
        self.claims.append(Claim(claim_id, statement, expected, computed, passed, elapsed))
        return passed

    def skip(self, claim_id: str, statement: str, reason: str) -> None:
        self.claims.append(Claim(claim_id, statement, reason, reason, True, 0.0))

    def extend(self, other: VerificationReport) -> None:
        self.claims.extend(other.claims)

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.claims)

    @property
    def totals(self) -> dict:
        return {
            "claims": len(self.claims),
            "passed": sum(c.passed for c in self.claims),
            "failed": sum(not c.passed for c in self.claims),
            "seconds": round(sum(c.seconds for c in self.claims), 6),
        }

    def to_text(self) -> str:
        lines = [c.to_text() for c in self.claims]
        t = self.totals
        lines.append(
            f"# {t['passed']}/{t['claims']} claims passed in {t['seconds']:.3f}s"
        )
        return "\n".join(lines)

    def to_json_obj(self) -> dict:
        return {
            "params": self.params,
            "type": list(self.type_dims) if self.type_dims else None,
            "claims": [
                {
                    "id": c.claim_id,
                    "anchor": c.statement,
                    "expected": _jsonable(c.expected),
                    "computed": _jsonable(c.computed),
                    "pass": c.passed,
                    "seconds": round(c.seconds, 6),
                }
                for c in self.claims
            ],
            "totals": self.totals,
        }


def _jsonable(value: object) -> object:
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    return repr(value)


# -- verification operations ----------------------------------------------------


def verify_spread_projections(
    params: ConstructionParams, gen: GeneratorSet | None = None
) -> VerificationReport:
    """Check the k-projection (a partial k-spread of full size) and the
    (n-k)-projection (maximum distance 2k, full size)."""
    gen = gen or build_generator_set(params)
    rep = VerificationReport(params.describe())
    k, n = params.k, params.n
    size = params.expected_size

    ck = gen.projected_at_dim(k)
    rep.check(
        "projected.k.partial_spread",
        f"the {k}-projected code is a partial {k}-spread",
        True,
        lambda: is_partial_spread(ck),
    )
    rep.check(
        "projected.k.cardinality",
        f"the {k}-projected code has sum(q^(ik+h)) + 1 = {size} words",
        size,
        lambda: len(ck),
    )
    cnk = gen.projected_at_dim(n - k)
    rep.check(
        "projected.n_minus_k.min_distance",
        f"the {n - k}-projected code attains the maximum distance 2k = {2 * k}",
        2 * k,
        lambda: code_min_distance(cnk),
    )
    rep.check(
        "projected.n_minus_k.cardinality",
        f"the {n - k}-projected code has {size} words",
        size,
        lambda: len(cnk),
    )
    return rep


def verify_intermediate_distances(
    params: ConstructionParams, gen: GeneratorSet | None = None
) -> VerificationReport:
    """Check the projected codes at every middle dimension of the master type
    (distance 2k, or 2h at 2k+h when s = 4) and the witness pair
    (A_i g^k, B_i), which must sit at distance exactly 2k at each level."""
    gen = gen or build_generator_set(params)
    rep = VerificationReport(params.describe())
    k, h, s = params.k, params.h, params.s
    size = params.expected_size

    for m in middle_dims(params):
        expected_d = 2 * h if (s == 4 and m == 2 * k + h) else 2 * k
        cm = gen.projected_at_dim(m)
        rep.check(
            f"middle.dim{m}.min_distance",
            f"the {m}-projected code has minimum distance {expected_d}",
            expected_d,
            lambda cm=cm: code_min_distance(cm),
        )
        rep.check(
            f"middle.dim{m}.cardinality",
            f"the {m}-projected code has {size} words",
            size,
            lambda cm=cm: len(cm),
        )
    for i in range(1, s):
        if i == 1 and h == 0:
            continue  # k+1 > ik+h: the witness argument needs i >= 2 or h >= 1
        for m in middle_dims(params):
            rep.check(
                f"witness.family{i}.dim{m}",
                f"distance of (A_{i} g^k, B_{i}) at level {m} equals 2k",
                2 * k,
                lambda i=i, m=m: _witness_distance(gen, i, m),
            )
    return rep


def _witness_distance(gen: GeneratorSet, i: int, m: int) -> int:
    a_entry = gen.entry("A", i, gen.params.k)
    b_entry = gen.entry("B", i)
    u = subspace_of(a_entry.matrix.first_rows(m))
    v = subspace_of(b_entry.matrix.first_rows(m))
    return subspace_distance(u, v)


def verify_orbit_decomposition(
    params: ConstructionParams, gen: GeneratorSet | None = None
) -> VerificationReport:
    """Check that the generator family is the disjoint union of s-1 full
    orbits (trivial stabilizers) plus the s extra spaces from the B_i and M."""
    gen = gen or build_generator_set(params)
    rep = VerificationReport(params.describe())
    k, h, s = params.k, params.h, params.s

    orbit_keys: list[set] = []
    for i in range(1, s):
        order = params.q ** (i * k + h) - 1
        group = GroupElementSeq(build_G_generator(params, i), order)
        seed = subspace_of(build_A(params, i))
        orbit = orbit_code(seed, group)
        orbit_keys.append({w.key for w in orbit})
        rep.check(
            f"orbit.family{i}.size",
            f"the orbit of A_{i} under G_{i} has q^(ik+h) - 1 = {order} spaces",
            order,
            lambda orbit=orbit: len(orbit),
        )
        rep.check(
            f"orbit.family{i}.stabilizer",
            f"the stabilizer of A_{i} in G_{i} is trivial",
            1,
            lambda seed=seed, group=group: stabilizer_order(seed, group),
        )
    rep.check(
        "orbit.pairwise_disjoint",
        "distinct family orbits share no row space",
        True,
        lambda: all(
            not (orbit_keys[i] & orbit_keys[j])
            for i in range(len(orbit_keys))
            for j in range(i + 1, len(orbit_keys))
        ),
    )
    extras = [gen.entry("B", i).space for i in range(1, s)] + [gen.entry("M").space]
    extra_keys = {w.key for w in extras}
    rep.check(
        "orbit.extras_distinct",
        "the B_i and M spaces are mutually distinct and outside every orbit",
        True,
        lambda: len(extra_keys) == s
        and all(not (extra_keys & ok) for ok in orbit_keys),
    )
    rep.check(
        "orbit.union_matches",
        "orbits plus extras reproduce the whole generator family",
        True,
        lambda: set.union(extra_keys, *orbit_keys) == {w.key for w in gen.spaces},
    )
    return rep


def verify_maximality(
    params: ConstructionParams,
    type_: TypeVector | None = None,
    gen: GeneratorSet | None = None,
) -> VerificationReport:
    """When k > (q^h - 1)/(q - 1), the code size must match the closed-form
    maximum partial-spread size; otherwise the bound is recorded as not
    applicable."""
    gen = gen or build_generator_set(params)
    rep = VerificationReport(params.describe())
    tv = type_ if type_ is not None else master_type(params)
    if params.k not in tv.dims:
        raise ValueError(f"type {tv.dims} does not contain k={params.k}")
    statement = "code size attains the maximum partial-spread cardinality"
    try:
        bound = max_partial_spread_size(params.q, params.k, params.n)
    except HypothesisUnmet as exc:
        rep.skip("maximality.cardinality", statement, f"skipped: {exc}")
        return rep
    rep.check(
        "maximality.cardinality",
        statement,
        bound,
        lambda: len(gen.flag_code(tv)),
    )
    return rep


def _label_for_deficit(ell: int) -> str:
    if ell == 0:
        return "optimum"
    if ell == 1:
        return "quasi-optimum"
    return f"general({ell})"


def _deficit_claims(
    rep: VerificationReport, prefix: str, code: FlagCode
) -> None:
    """Claims driven by the observed deficit ell of a code: the inner/outer
    split equivalence, the additive split of the maximum distance, prefix
    cardinalities, and full-type cardinality consistency."""
    tv = code.type
    cls = classify(code)
    ell = cls.deficit
    ab = ab_indices(tv)
    r = tv.r
    if ab.a is None or ab.b is None or ell < 1:
        return
    if ell <= min(ab.a - 1, r - ab.b):
        inner, outer = split_type(tv, ell)
        rep.check(
            f"{prefix}.split_additivity",
            f"max distance of {tv.dims} splits across {inner.dims} + {outer.dims}",
            True,
            lambda: distance_decomposition_check(tv, ell),
        )
        inner_code = subsequence_code(code, inner)
        rep.check(
            f"{prefix}.split_inner_distance",
            f"the {inner.dims} restriction has distance max - {2 * ell}",
            max_flag_distance(inner) - 2 * ell,
            lambda: code_flag_min_distance(inner_code),
        )
        outer_code = subsequence_code(code, outer)
        rep.check(
            f"{prefix}.split_outer_optimum",
            f"the {outer.dims} restriction attains its maximum distance",
            True,
            lambda: classify(outer_code).is_optimum,
        )
        rep.check(
            f"{prefix}.prefix_cardinalities",
            f"the first {ab.a} projected codes all have |C| words",
            True,
            lambda: all(len(projected_code(code, idx)) == len(code) for idx in range(1, ab.a + 1)),
        )
    if tv.is_full and ell <= min(ab.a - 1, tv.n - 1 - ab.b):
        rep.check(
            f"{prefix}.cardinality_consistent_by_deficit",
            "a full-type code this close to the maximum is cardinality-consistent",
            True,
            lambda: is_cardinality_consistent(code),
        )


def run_claim_suite(
    params: ConstructionParams,
    type_: TypeVector | None = None,
    loaded: FlagCode | None = None,
    loaded_label: str = "loaded",
) -> VerificationReport:
    """Run every claim applicable to the parameters and return one report.

    ``type_`` overrides the master type used for the longer-type family.
    ``loaded`` optionally checks an externally supplied flag code against the
    freshly constructed family of the same type.
    """
    rep = VerificationReport(params.describe())
    size = params.expected_size
    k, h, s, n = params.k, params.h, params.s, params.n
    rep.type_dims = (type_ if type_ is not None else master_type(params)).dims

    gen = build_generator_set(params)
    rep.check(
        "generator.cardinality",
        f"the generator family has sum(q^(ik+h)) + 1 = {size} distinct row spaces",
        size,
        lambda: len(gen.spaces),
    )
    for i in range(1, s):
        order = params.q ** (i * k + h) - 1
        rep.check(
            f"group.family{i}.order",
            f"G_{i} has order q^(ik+h) - 1 = {order}",
            order,
            lambda i=i: matrix_order(build_G_generator(params, i), params.order_cap),
        )

    rep.extend(verify_spread_projections(params, gen))

    full_code = build_full_flag_code(params, gen)
    rep.check(
        "full.cardinality",
        f"the full-type code has {size} flags",
        size,
        lambda: len(full_code),
    )
    if s == 2:
        expected_d = 2 * k * (k + h)
        rep.check(
            "full.min_distance",
            f"the full-type code has distance 2k(k+h) = {expected_d}",
            expected_d,
            lambda: code_flag_min_distance(full_code),
        )
        rep.check(
            "full.cardinality_consistent",
            "the full-type code is cardinality-consistent",
            True,
            lambda: is_cardinality_consistent(full_code),
        )
        expected_ell = (max_flag_distance(full_code.type) - expected_d) // 2
        rep.check(
            "full.classification",
            "classification of the full-type code",
            _label_for_deficit(expected_ell),
            lambda: classify(full_code).label,
        )
    _deficit_claims(rep, "full", full_code)

    opt_tv = admissible_type(params)
    opt_code = gen.flag_code(opt_tv)
    rep = _optimum_claims(rep, params, opt_tv, opt_code)

    if s >= 3:
        mt = master_type(params)
        tv = type_ if type_ is not None else mt
        if not tv.is_subsequence_of(mt):
            raise NotASubsequence(f"{tv.dims} is not a subsequence of {mt.dims}")
        longer_code = gen.flag_code(tv)
        expected_d = expected_restricted_distance(params, tv)
        rep.check(
            "longer.cardinality",
            f"the type {tv.dims} code has {size} flags",
            size,
            lambda: len(longer_code),
        )
        rep.check(
            "longer.min_distance",
            f"the type {tv.dims} code has distance {expected_d}",
            expected_d,
            lambda: code_flag_min_distance(longer_code),
        )
        rep.check(
            "longer.cardinality_consistent",
            f"the type {tv.dims} code is cardinality-consistent",
            True,
            lambda: is_cardinality_consistent(longer_code),
        )
        _deficit_claims(rep, "longer", longer_code)

    rep.extend(verify_intermediate_distances(params, gen))
    rep.extend(verify_orbit_decomposition(params, gen))
    rep.extend(verify_maximality(params, None, gen))

    if loaded is not None:
        _loaded_claims(rep, params, gen, loaded, loaded_label)
    return rep


def _optimum_claims(
    rep: VerificationReport,
    params: ConstructionParams,
    tv: TypeVector,
    code: FlagCode,
) -> VerificationReport:
    size = params.expected_size
    rep.check(
        "optimum.admissible_type",
        f"every type dimension is <= k or >= n-k and k is present: {tv.dims}",
        True,
        lambda: admissible_type_check(tv, params.k),
    )
    rep.check(
        "optimum.cardinality",
        f"the admissible-type code has {size} flags",
        size,
        lambda: len(code),
    )
    rep.check(
        "optimum.min_distance",
        f"the admissible-type code attains the maximum distance {max_flag_distance(tv)}",
        max_flag_distance(tv),
        lambda: code_flag_min_distance(code),
    )
    rep.check(
        "optimum.classification",
        "the admissible-type code classifies as optimum",
        "optimum",
        lambda: classify(code).label,
    )
    rep.check(
        "optimum.ab_equivalence",
        "optimality matches the projected-code test at the pivotal indices",
        True,
        lambda: optimum_check_ab(code),
    )
    rep.check(
        "optimum.cardinality_consistent",
        "the admissible-type code is cardinality-consistent",
        True,
        lambda: is_cardinality_consistent(code),
    )
    rep.check(
        "optimum.projected_equivalence",
        "optimum iff cardinality-consistent with every projection at max distance",
        True,
        lambda: _projected_equivalence(code),
    )
    return rep


def _projected_equivalence(code: FlagCode) -> bool:
    tv = code.type
    consistent = is_cardinality_consistent(code)
    all_max = all(
        len(projected_code(code, idx)) >= 2
        and code_min_distance(projected_code(code, idx))
        == 2 * min(tv.dims[idx - 1], tv.n - tv.dims[idx - 1])
        for idx in range(1, tv.r + 1)
    )
    return (consistent and all_max) == classify(code).is_optimum


def _loaded_claims(
    rep: VerificationReport,
    params: ConstructionParams,
    gen: GeneratorSet,
    loaded: FlagCode,
    label: str,
) -> None:
    """Validate an externally loaded code against the constructed family of
    the same type."""
    tv = loaded.type
    size = params.expected_size
    rep.check(
        f"{label}.cardinality",
        f"the loaded code has {size} flags",
        size,
        lambda: len(loaded),
    )
    reference: FlagCode | None = None
    if tv == TypeVector.full(params.n):
        reference = build_full_flag_code(params, gen)
    elif tv == admissible_type(params):
        reference = gen.flag_code(tv)
    elif tv.is_subsequence_of(master_type(params)):
        reference = gen.flag_code(tv)
    if reference is None:
        rep.check(
            f"{label}.type_recognized",
            f"the loaded type {tv.dims} matches a constructible family",
            True,
            lambda: False,
        )
        return
    ref = reference
    rep.check(
        f"{label}.matches_construction",
        f"the loaded code equals the constructed type {tv.dims} family",
        True,
        lambda: ref == loaded,
    )
    if tv.is_subsequence_of(master_type(params)):
        expected_d = expected_restricted_distance(params, tv)
        rep.check(
            f"{label}.min_distance",
            f"the loaded code has distance {expected_d}",
            expected_d,
            lambda: code_flag_min_distance(loaded),
        )
