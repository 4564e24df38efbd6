"""Entanglement measures and Bloch-sphere geometry of the basis states.

Everything here works on the reduced single-qubit states: concurrence via
purity of the reduction, Bloch vectors of each marginal, and the
pi-rotation symmetry relating the two marginals of every basis state.
"""
from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .bases import (
    JointBasis,
    SjmParams,
    cos_k_pi,
    ejm_aligned,
    ejm_family_state,
    sjm_basis,
)
from .linalg import PAULIS, ket, num_qubits, partial_trace

TOL_AXIS = 1e-10

# Reduction-vector vertices at theta = pi/2, phi = pi/4: the first-qubit
# marginals (upper) and second-qubit marginals (lower) each form a regular
# tetrahedron of circumradius sqrt(3)/2, mirror images through the xy plane.
ALIGNED_VERTICES_FIRST = 0.5 * np.array(
    [[-1, -1, 1], [-1, 1, -1], [1, 1, 1], [1, -1, -1]], dtype=float
)
ALIGNED_VERTICES_SECOND = ALIGNED_VERTICES_FIRST * np.array([1.0, 1.0, -1.0])


def bloch_vector(rho: np.ndarray) -> np.ndarray:
    """Pauli expectation values (x, y, z) of a single-qubit density matrix."""
    if rho.shape != (2, 2):
        raise ValueError(f"expected a 2x2 density matrix, got shape {rho.shape}")
    return np.array([np.trace(rho @ s).real for s in PAULIS])


def reduction_vector(state: np.ndarray, qubit: int) -> np.ndarray:
    """Bloch vector of one marginal of a two-qubit pure state (qubit 0 or 1)."""
    if num_qubits(state) != 2:
        raise ValueError("reduction_vector expects a two-qubit state")
    if qubit not in (0, 1):
        raise ValueError(f"qubit must be 0 or 1, got {qubit}")
    return bloch_vector(partial_trace(state, qubit))


def concurrence(state: np.ndarray) -> float:
    """Concurrence of a two-qubit pure state.

    For a normalized pure state with amplitude matrix M (the state reshaped
    to 2x2) the concurrence sqrt(2 (1 - tr rho^2)) equals 2 |det M|.  The
    determinant form is used because it stays accurate for near-product
    states, where the sqrt of the purity deficit would amplify float noise
    to the 1e-8 scale.  The purity route is kept as a cross-check.
    """
    if num_qubits(state) != 2:
        raise ValueError("concurrence expects a two-qubit state")
    m = state.reshape(2, 2)
    value = 2.0 * abs(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
    purities = []
    for qubit in (0, 1):
        rho = partial_trace(state, qubit)
        purities.append(float(np.trace(rho @ rho).real))
    assert abs(purities[0] - purities[1]) <= 1e-10, "marginal purities disagree"
    from_purity = math.sqrt(max(2.0 * (1.0 - purities[0]), 0.0))
    assert abs(value - from_purity) <= 1e-7, "determinant and purity routes disagree"
    return float(value)


def sjm_concurrence_closed_form(theta: float) -> float:
    """Concurrence shared by all four basis states: |sin theta| / 2."""
    return 0.5 * abs(math.sin(theta))


def ejm_family_concurrence_closed_form(theta: float) -> float:
    """Concurrence of the interpolating family: (1/2) sqrt(1 + 3 sin^2 theta)."""
    return 0.5 * math.sqrt(1.0 + 3.0 * math.sin(theta) ** 2)


def sjm_reduction_closed_form(k: int, params: SjmParams, qubit: int) -> np.ndarray:
    """Closed-form Bloch vector of basis state k's marginal on the given qubit.

    The two marginals differ only by the sign of the cos(theta) terms and
    of the z component.
    """
    if qubit not in (0, 1):
        raise ValueError(f"qubit must be 0 or 1, got {qubit}")
    sign = 1.0 if qubit == 0 else -1.0
    ck = cos_k_pi(k)
    phik = params.phi_k(k)
    ct, st = math.cos(params.theta), math.sin(params.theta)
    inv_root2 = 1.0 / math.sqrt(2.0)
    return np.array(
        [
            inv_root2 * (-ck * math.cos(phik) + sign * ct * math.sin(phik)),
            inv_root2 * (-ck * math.sin(phik) - sign * ct * math.cos(phik)),
            sign * 0.5 * ck * st,
        ]
    )


def symmetry_axis(k: int, params: SjmParams) -> np.ndarray:
    """Unit vector (cos phi_k, sin phi_k, 0); a pi rotation about it maps the
    first marginal's Bloch vector of state k onto the second's."""
    phik = params.phi_k(k)
    return np.array([math.cos(phik), math.sin(phik), 0.0])


def rotation_about_axis(v: np.ndarray, axis: np.ndarray, angle: float) -> np.ndarray:
    """Rotate a 3-vector about a unit axis (Rodrigues formula)."""
    axis = np.asarray(axis, dtype=float)
    if abs(np.linalg.norm(axis) - 1.0) > TOL_AXIS:
        raise ValueError("rotation axis must be a unit vector")
    v = np.asarray(v, dtype=float)
    c, s = math.cos(angle), math.sin(angle)
    return v * c + np.cross(axis, v) * s + axis * np.dot(axis, v) * (1.0 - c)


def rotation_symmetry_residual(basis: JointBasis) -> float:
    """Max deviation of R_pi(axis_k) v_k^(0) from v_k^(1) across the basis."""
    if basis.params is None:
        raise ValueError("rotation symmetry check needs a parameterized basis")
    worst = 0.0
    for k, state in enumerate(basis.states):
        axis = symmetry_axis(k, basis.params)
        rotated = rotation_about_axis(reduction_vector(state, 0), axis, math.pi)
        worst = max(worst, float(np.abs(rotated - reduction_vector(state, 1)).max()))
    return worst


def zero_sum_residual(basis: JointBasis) -> float:
    """Max component of sum_k v_k over both marginals (0 for a valid basis)."""
    worst = 0.0
    for qubit in (0, 1):
        total = sum(reduction_vector(s, qubit) for s in basis.states)
        worst = max(worst, float(np.abs(total).max()))
    return worst


def aligned_tetrahedron_residual() -> float:
    """How far the marginals at theta=pi/2, phi=pi/4 sit from the reference
    tetrahedra: worst deviation over vertex positions, circumradii
    (sqrt(3)/2), and pairwise vertex distances (sqrt 2)."""
    basis = sjm_basis(ejm_aligned())
    worst = 0.0
    for qubit, expected in ((0, ALIGNED_VERTICES_FIRST), (1, ALIGNED_VERTICES_SECOND)):
        vertices = np.array([reduction_vector(s, qubit) for s in basis.states])
        worst = max(worst, float(np.abs(vertices - expected).max()))
        radii = np.linalg.norm(vertices, axis=1)
        worst = max(worst, float(np.abs(radii - math.sqrt(3.0) / 2.0).max()))
        for a in range(4):
            for b in range(a + 1, 4):
                edge = float(np.linalg.norm(vertices[a] - vertices[b]))
                worst = max(worst, abs(edge - math.sqrt(2.0)))
    return worst


def concurrence_curve(
    family: str, thetas: Sequence[float]
) -> list[tuple[float, float]]:
    """Numeric concurrence along theta for one of the two state families.

    family is "sjm" (the basis states, all four share one value) or
    "ejm-family" (the interpolating family).  Each numeric value is
    cross-checked against its closed form before being returned.
    """
    rows = []
    for theta in thetas:
        if family == "sjm":
            value = concurrence(sjm_basis(SjmParams(theta, 0.0)).states[0])
            expected = sjm_concurrence_closed_form(theta)
        elif family == "ejm-family":
            value = concurrence(ejm_family_state(theta, (ket("0"), ket("1"))))
            expected = ejm_family_concurrence_closed_form(theta)
        else:
            raise ValueError(f"unknown family {family!r}")
        assert abs(value - expected) <= 1e-10, "concurrence disagrees with closed form"
        rows.append((float(theta), value))
    return rows
