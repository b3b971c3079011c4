"""Polarization-algebra parametrization of 3x3 unitary matrices.

Compose unitaries from nine parameters (three rotation angles, two shape
angles, four phases), recover the parameters from any unitary, and analyze
coherency matrices via the characteristic decomposition and its regularity
spectrum.
"""
from .linalg import (
    EigenDecomposition,
    NoConvergenceError,
    NotHermitianError,
    eig_hermitian3,
    hermiticity_distance,
    is_hermitian,
    is_unitary,
    matrix_norms_and_checks,
    outer_product,
    unitarity_distance,
)
from .rotations import (
    NotOrthogonalError,
    RotationAngles,
    compose_rotation,
    extract_rotation_angles,
    rot_y,
    rot_z,
    wrap_angle,
)
from .jones import (
    CompletionParams,
    EllipseParams,
    canonical_basis,
    completion_v2,
    completion_v3,
    intrinsic_jones,
    jones_in_frame,
)
from .parametrization import (
    ColumnDecomposition,
    InconsistentColumnError,
    NotUnitaryError,
    NotUnitError,
    RecoveryReport,
    RecoveryToleranceError,
    StructureViolationError,
    UnitaryParams,
    canonicalize_params,
    compose_core,
    compose_unitary,
    extract_core_params,
    flip_equivalent,
    normalize_global_phase,
    params_distance,
    recover_first_column,
    recover_params,
    sign_of_chi,
)
from .characteristic import (
    CharacteristicComponents,
    NotPositiveSemidefiniteError,
    PurityIndices,
    RegularityReport,
    ZeroTraceError,
    characteristic_decomposition,
    intrinsic_middle,
    middle_component,
    purity_indices,
    regularity_report,
    u3_form,
)
from .documents import (
    MalformedDocumentError,
    parse_matrix,
    parse_params,
    serialize_matrix,
    serialize_params,
)
from .sampling import (
    SeededGenerator,
    generate_haar_unitary,
    random_hermitian,
    random_params,
    random_psd_hermitian,
)
from .selftest import run_selftest

__version__ = "0.1.0"
