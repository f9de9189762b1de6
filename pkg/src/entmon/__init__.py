"""entmon: multipartite entanglement detection for pure qubit states from
two-qubit correlations and monogamy bounds."""

from .detector import (
    EPS_DET,
    DetectionReport,
    MonogamyReport,
    PartitionMaxRecord,
    StressSummary,
    depth_threshold,
    enumerate_partitions,
    exclusion_report,
    factorization_residual,
    genuine_threshold,
    m_kl,
    m_pb,
    m_total,
    min_entangled_block,
    monogamy_check,
    monogamy_stress,
    partition_bound,
    s_threshold,
    verify_partition_term_max,
)
from .families import (
    FamilySpec,
    dicke_claimed_depth,
    dicke_formula_stated_domain,
    dicke_m_pb,
    dicke_max_m_pb,
    predicted_m_pb,
    state_for,
)
from .frames import (
    EPS_BLOCH,
    ZeroPolicy,
    identity_frames,
    is_rotation,
    preferred_frame,
    preferred_frames,
    random_rotation,
    rotate_block,
    rotation_to_z,
    su2_from_rotation,
)
from .statevec import (
    PureState,
    apply_local_unitary,
    make_basis_state,
    make_dicke,
    make_ghz,
    make_plus_product,
    make_random_haar,
    max_qubits,
    state_from_json_dict,
    state_to_json_dict,
    tensor_product,
)
from .tensor import (
    PAULI,
    bloch_vector,
    correlation_component,
    is_valid_density,
    pair_block,
    reduced_density_pair,
    reduced_density_single,
)

__version__ = "0.1.0"

__all__ = [
    "DetectionReport",
    "EPS_BLOCH",
    "EPS_DET",
    "FamilySpec",
    "MonogamyReport",
    "PAULI",
    "PartitionMaxRecord",
    "PureState",
    "StressSummary",
    "ZeroPolicy",
    "apply_local_unitary",
    "bloch_vector",
    "correlation_component",
    "depth_threshold",
    "dicke_claimed_depth",
    "dicke_formula_stated_domain",
    "dicke_m_pb",
    "dicke_max_m_pb",
    "enumerate_partitions",
    "exclusion_report",
    "factorization_residual",
    "genuine_threshold",
    "identity_frames",
    "is_rotation",
    "is_valid_density",
    "m_kl",
    "m_pb",
    "m_total",
    "make_basis_state",
    "make_dicke",
    "make_ghz",
    "make_plus_product",
    "make_random_haar",
    "max_qubits",
    "min_entangled_block",
    "monogamy_check",
    "monogamy_stress",
    "pair_block",
    "partition_bound",
    "predicted_m_pb",
    "preferred_frame",
    "preferred_frames",
    "random_rotation",
    "reduced_density_pair",
    "reduced_density_single",
    "rotate_block",
    "rotation_to_z",
    "s_threshold",
    "state_for",
    "state_from_json_dict",
    "state_to_json_dict",
    "su2_from_rotation",
    "tensor_product",
    "verify_partition_term_max",
]
