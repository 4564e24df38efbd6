"""Parameterized symmetric two-qubit joint measurement and friends.

Construct the four-state entangled measurement basis controlled by two
angles, verify its symmetry and entanglement properties, simulate the
circuit that discriminates it, reproduce the triangle-network outcome
statistics it generates, and build its even-n multiqubit generalization.
"""
from .analysis import (
    bloch_vector,
    concurrence,
    concurrence_curve,
    ejm_family_concurrence_closed_form,
    reduction_vector,
    rotation_about_axis,
    rotation_symmetry_residual,
    sjm_concurrence_closed_form,
    sjm_reduction_closed_form,
    symmetry_axis,
    zero_sum_residual,
)
from .bases import (
    EJM_PHI,
    PHI_OFFSETS,
    BasisLabel,
    JointBasis,
    SjmParams,
    bell_psi_plus,
    component_state,
    direction_state,
    ejm_aligned,
    ejm_family_state,
    original_ejm_basis,
    original_ejm_state,
    sjm_basis,
    sjm_overlap_closed_form,
    sjm_state,
    sjm_state_closed_form,
)
from .circuit import (
    DiscriminationReport,
    GateCircuit,
    GateKind,
    GateOp,
    build_sjm_circuit,
    circuit_from_json,
    circuit_to_json,
    gate_matrix,
    verify_discrimination,
)
from .linalg import (
    apply_gate,
    inner,
    ket,
    partial_trace,
    permute_qubits,
    tensor,
)
from .multiqubit import (
    MultiSjmBasis,
    aux_state,
    gram_residual,
    multi_reduction_closed_form,
    multi_reduction_vector,
    multi_sjm_basis,
    pairwise_overlap_product,
)
from .network import (
    TRILOCAL_BOUND,
    NonlocalityReport,
    OutcomeDistribution,
    amplitude_closed_form,
    closed_form_probability,
    joint_distribution,
    nonlocality_scan,
    outcome_amplitude,
    p_same_outcome,
    threshold_theta,
    triangle_state,
)

__all__ = [
    "BasisLabel",
    "DiscriminationReport",
    "EJM_PHI",
    "GateCircuit",
    "GateKind",
    "GateOp",
    "JointBasis",
    "MultiSjmBasis",
    "NonlocalityReport",
    "OutcomeDistribution",
    "PHI_OFFSETS",
    "SjmParams",
    "TRILOCAL_BOUND",
    "amplitude_closed_form",
    "apply_gate",
    "aux_state",
    "bell_psi_plus",
    "bloch_vector",
    "build_sjm_circuit",
    "circuit_from_json",
    "circuit_to_json",
    "closed_form_probability",
    "component_state",
    "concurrence",
    "concurrence_curve",
    "direction_state",
    "ejm_aligned",
    "ejm_family_concurrence_closed_form",
    "ejm_family_state",
    "gate_matrix",
    "gram_residual",
    "inner",
    "joint_distribution",
    "ket",
    "multi_reduction_closed_form",
    "multi_reduction_vector",
    "multi_sjm_basis",
    "nonlocality_scan",
    "original_ejm_basis",
    "original_ejm_state",
    "outcome_amplitude",
    "p_same_outcome",
    "pairwise_overlap_product",
    "partial_trace",
    "permute_qubits",
    "reduction_vector",
    "rotation_about_axis",
    "rotation_symmetry_residual",
    "sjm_basis",
    "sjm_concurrence_closed_form",
    "sjm_overlap_closed_form",
    "sjm_reduction_closed_form",
    "sjm_state",
    "sjm_state_closed_form",
    "symmetry_axis",
    "tensor",
    "threshold_theta",
    "triangle_state",
    "verify_discrimination",
    "zero_sum_residual",
]
