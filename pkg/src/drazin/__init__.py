"""Exact Drazin, group, and Moore-Penrose inverses with their decompositions.

Matrices over Q or F_p, endofunctions on finite sets, and elements of
finite monoids. Everything is exact: no floats, no tolerances.
"""

from .core import (
    DrazinData,
    drazin_from_pi_witnesses,
    drazin_index,
    drazin_inverse,
    group_inverse,
    verify_drazin_data,
)
from .decompositions import (
    CoreNilpotent,
    EventuatingFamily,
    FittingData,
    IdempotentSplitting,
    complement_formula_check,
    core_nilpotent,
    drazin_from_fitting,
    eventuating_family,
    fitting_decomposition,
    image_kernel_drazin,
    munn_power_iso_check,
    split_idempotent,
    splitting_iso,
)
from .exceptions import (
    CycleNotFoundError,
    DrazinError,
    EnumerationTooLargeError,
    FieldMismatchError,
    InternalInconsistencyError,
    NonPrimeModulusError,
    NotIdempotentError,
    NotSquareError,
    ParseError,
    ShapeMismatchError,
    SingularMatrixError,
    WitnessInvalidError,
)
from .fields import Field, PrimeField, Q, Rationals, is_prime
from .finite import (
    EndoFun,
    Monoid,
    MonoidElement,
    all_endofunctions,
    endo_drazin,
    eventual_image,
    fp_matrix_monoid,
    int_mod_monoid,
    monoid_drazin,
    power_cycle,
    transformation_monoid,
)
from .linalg import (
    Matrix,
    RankFactorization,
    block_diag,
    full_rank_factorization,
    hstack,
    image_basis,
    invert_matrix,
    kernel_basis,
    rank,
    rref,
    vstack,
)
from .pairs import (
    MoorePenroseData,
    MPDrazinCheck,
    OpposingPair,
    PairDrazinData,
    check_binary_idempotent,
    check_pair_group,
    cline,
    moore_penrose,
    mp_drazin_check,
    mp_via_pair_drazin,
    pair_drazin,
    verify_pair_data,
)
from .verify import (
    AxiomReport,
    CrossRouteReport,
    all_matrices,
    brute_force_drazin,
    check_axioms,
    check_monoid_axioms,
    cross_route_audit,
    monoid_cycle_drazin,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomReport",
    "CoreNilpotent",
    "CrossRouteReport",
    "CycleNotFoundError",
    "DrazinData",
    "DrazinError",
    "EndoFun",
    "EnumerationTooLargeError",
    "EventuatingFamily",
    "Field",
    "FieldMismatchError",
    "FittingData",
    "IdempotentSplitting",
    "InternalInconsistencyError",
    "MPDrazinCheck",
    "Matrix",
    "Monoid",
    "MonoidElement",
    "MoorePenroseData",
    "NonPrimeModulusError",
    "NotIdempotentError",
    "NotSquareError",
    "OpposingPair",
    "PairDrazinData",
    "ParseError",
    "PrimeField",
    "Q",
    "RankFactorization",
    "Rationals",
    "ShapeMismatchError",
    "SingularMatrixError",
    "WitnessInvalidError",
    "all_endofunctions",
    "all_matrices",
    "block_diag",
    "brute_force_drazin",
    "check_axioms",
    "check_binary_idempotent",
    "check_monoid_axioms",
    "check_pair_group",
    "cline",
    "complement_formula_check",
    "core_nilpotent",
    "cross_route_audit",
    "drazin_from_fitting",
    "drazin_from_pi_witnesses",
    "drazin_index",
    "drazin_inverse",
    "endo_drazin",
    "eventual_image",
    "eventuating_family",
    "fitting_decomposition",
    "fp_matrix_monoid",
    "full_rank_factorization",
    "group_inverse",
    "hstack",
    "image_basis",
    "image_kernel_drazin",
    "int_mod_monoid",
    "invert_matrix",
    "is_prime",
    "kernel_basis",
    "monoid_cycle_drazin",
    "monoid_drazin",
    "moore_penrose",
    "mp_drazin_check",
    "mp_via_pair_drazin",
    "munn_power_iso_check",
    "pair_drazin",
    "power_cycle",
    "rank",
    "rref",
    "split_idempotent",
    "splitting_iso",
    "transformation_monoid",
    "verify_drazin_data",
    "verify_pair_data",
    "vstack",
]
