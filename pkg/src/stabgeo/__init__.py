"""stabgeo: exact computational geometry of stabilizer states.

Pauli-string algebra, canonical stabilizer matrices, Clifford
conjugation with global-phase tracking, basis-normalization circuit
synthesis, exact inner and wedge products, orthogonalization of
stabilizer superpositions, and exhaustive small-n state censuses.
"""

from .clifford import (
    CliffordCircuit,
    Gate,
    GlobalPhase,
    apply_circuit_with_phase,
    conjugate_circuit,
    conjugate_gate,
    conjugate_pauli,
    global_phase_of_gate,
    inverse_circuit,
    measure,
    parse_circuit,
)
from .census import (
    CountReport,
    DenseState,
    angle_histogram,
    count_k_neighbors,
    count_orthogonal,
    count_states,
    enumerate_states,
    limit_bounds,
    local_search,
    max_overlap,
)
from .errors import (
    DimensionError,
    MalformedMatrixError,
    NonCanonicalError,
    NotStabilizerBivector,
    OracleSizeError,
    ParallelStatesError,
    ParseError,
    StabgeoError,
    ZeroCofactorError,
)
from .exact import CycQ8, ExactScalar, QuadReal, SqrtFraction
from .geometry import (
    StabilizerSum,
    bivector,
    gramian_dependent,
    inner_product_abs,
    inner_product_complex,
    k_neighbor_class,
    nearest_neighbors,
    orthogonalize,
    sum_basis_states,
    tensor,
    wedge_norm,
)
from .pauli import PauliOp, apply_to_basis, commutes, parse_pauli, pauli_mul
from .synth import basis_norm_circuit, verify_template
from .tableau import (
    StabilizerMatrix,
    amplitude_at,
    canonicalize,
    cofactor,
    emit_matrix,
    is_basis_form,
    is_similar,
    parse_matrix,
    partial_trace,
    rep_vector,
    row_mult,
    sample_amplitudes,
    support_size,
    to_dense,
)

__version__ = "0.1.0"
