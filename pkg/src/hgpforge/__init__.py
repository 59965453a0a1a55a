"""Construction and verification toolkit for hypergraph product CSS codes.

Builds homological products of classical seeds over GF(2), computes code
parameters and canonical logical bases, decides cleaning-lemma
correctability of qubit regions, and analyzes diagonal circuits (phase
polynomials) for codespace preservation, logical action, and Clifford
hierarchy level.
"""

from .classical import (
    ClassicalCode,
    InformationSet,
    classical_clean,
    cyclic_repetition_check,
    disjoint_information_set,
    distance,
    distance_certificate,
    find_information_set,
    hamming_7_4,
    is_puncture,
    repetition_code,
)
from .correctability import (
    CorrectabilityVerdict,
    Region,
    clean_logical,
    is_correctable,
    union_lemma_check,
)
from .css import (
    CssCode,
    DistanceResult,
    KunnethParameters,
    LogicalBasis,
    LogicalRep,
    PauliOperator,
    alternative_representative,
    assemble_css,
    brute_distance,
    canonical_logical_basis,
    group_commutator_pauli,
    kunneth_parameters,
    pauli_mul,
    symplectic_product,
)
from .diagonal import (
    CircuitSupportModel,
    PhasePolynomial,
    bk_cascade,
    commutator_support_bound,
    difference,
    format_circuit_text,
    hierarchy_level,
    logical_action,
    parse_circuit_text,
    poly_from_circuit,
    poly_zero,
    preserves_codespace,
    substitute,
    transversal_model,
    transversal_nogo_harness,
)
from .f2la import (
    BinaryMatrix,
    RrefResult,
    format_matrix_text,
    kernel_basis,
    kron,
    matmul,
    parse_matrix_text,
    rank,
    rref,
    solve,
    transpose,
)
from .product import (
    Hyperplane,
    Hypertube,
    OneComplex,
    ProductComplex,
    block_hamming_weight,
    build_product,
    classify_hypertube,
    coords_of,
    flat_index,
    hyperplane_support,
    intersect_hyperplanes,
)
from .toric_cnz import (
    ToricBundle,
    build_bundle,
    build_cnz_circuit,
    build_toric,
    verify_invariance,
    verify_logical_cnz,
)

__version__ = "0.1.0"
