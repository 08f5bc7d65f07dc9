"""Vandermonde [[n, k, d]]_q quantum MDS codes over prime fields.

Exact subsystem entropies by the subspace-intersection rank identity, a
brute-force state-vector oracle with partial traces and a Jacobi
eigensolver, erasure decoding by basis permutations, and verification
suites for the size-pyramid entropy characterization.
"""

from .gf import Field, FieldElement, FieldMismatchError, is_prime
from .linalg import (
    MatrixGF,
    SingularMatrixError,
    intersection_dim,
    invert,
    mat_vec,
    rank,
    rref,
)
from .code import (
    CodeParams,
    QuantumMdsCode,
    construct,
    erasure_submatrices,
    from_descriptor,
    smallest_prime_at_least,
    to_descriptor,
    validate,
)
from .entropy import (
    EntropyProfile,
    ProfileEntry,
    SubsystemSpec,
    check_decoding_condition,
    check_entropy_inequalities,
    expected_subsystem_entropy,
    extended_profile,
    full_profile,
    product_state_checks,
    register_subset_entropy,
    subsystem_entropy,
)
from .sim import (
    DensityMatrix,
    StateVector,
    decode,
    decode_target,
    encode_state,
    fidelity,
    hermitian_eigenvalues,
    partial_trace,
    von_neumann_entropy,
)
from .reporting import CheckReport, CheckResult

__version__ = "0.1.0"

__all__ = [
    "Field",
    "FieldElement",
    "FieldMismatchError",
    "is_prime",
    "MatrixGF",
    "SingularMatrixError",
    "rref",
    "rank",
    "invert",
    "intersection_dim",
    "mat_vec",
    "CodeParams",
    "QuantumMdsCode",
    "construct",
    "erasure_submatrices",
    "validate",
    "to_descriptor",
    "from_descriptor",
    "smallest_prime_at_least",
    "SubsystemSpec",
    "EntropyProfile",
    "ProfileEntry",
    "subsystem_entropy",
    "register_subset_entropy",
    "expected_subsystem_entropy",
    "full_profile",
    "extended_profile",
    "check_decoding_condition",
    "check_entropy_inequalities",
    "product_state_checks",
    "StateVector",
    "DensityMatrix",
    "encode_state",
    "partial_trace",
    "hermitian_eigenvalues",
    "von_neumann_entropy",
    "decode",
    "decode_target",
    "fidelity",
    "CheckReport",
    "CheckResult",
]
