"""Flag codes over finite fields: exact construction, distances, and
exhaustive verification of the claimed cardinalities and spreads."""

from .construct import (
    Claim,
    ConstructionParams,
    GeneratorEntry,
    GeneratorSet,
    VerificationReport,
    admissible_type,
    build_A,
    build_B,
    build_G_generator,
    build_M,
    build_P,
    build_full_flag_code,
    build_generator_set,
    build_longer_type_code,
    build_optimum_code,
    expected_restricted_distance,
    master_type,
    middle_dims,
    run_claim_suite,
    verify_intermediate_distances,
    verify_maximality,
    verify_orbit_decomposition,
    verify_spread_projections,
)
from .field import (
    FieldElement,
    FieldSpec,
    Poly,
    factorize,
    field_from_order,
    field_make,
    find_primitive_poly,
    is_irreducible,
    is_prime,
    is_primitive,
    iter_primitive_polys,
    poly_from_text,
    poly_to_text,
)
from .flags import (
    AbIndices,
    Classification,
    Flag,
    FlagCode,
    TypeVector,
    ab_indices,
    admissible_type_check,
    classify,
    code_flag_min_distance,
    distance_decomposition_check,
    dump_flag,
    dump_flag_code,
    flag_distance,
    flag_from_matrix,
    is_cardinality_consistent,
    load_flag,
    load_flag_code,
    max_flag_distance,
    optimum_check_ab,
    projected_code,
    projected_code_at_dim,
    split_type,
    subsequence_code,
)
from .matgf import (
    MatrixGF,
    RowSlice,
    block,
    companion,
    mat_mul,
    matrix_from_text,
    matrix_order,
    matrix_to_text,
    rows_in_row_space,
    vstack,
)
from .subspace import (
    GroupElementSeq,
    Subspace,
    SubspaceCode,
    code_min_distance,
    intersection_dim,
    is_equidistant_c,
    is_partial_spread,
    max_partial_spread_size,
    orbit_code,
    stabilizer_order,
    subspace_distance,
    subspace_of,
)

__version__ = "0.1.0"
