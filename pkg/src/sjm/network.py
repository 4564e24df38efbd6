"""Triangle-network statistics under the symmetric joint measurement.

Three parties sit on a triangle; each edge carries an independent source
emitting (|01> + |10>)/sqrt(2), and each party measures its two incoming
qubits in the parameterized basis.  The resulting 64-outcome distribution
is permutation invariant, and the probability that all three parties
agree exceeds every trilocal model's reach once theta passes
arcsin(sqrt(15/28)).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bases import SjmParams, bell_psi_plus, cos_k_pi, sjm_basis
from .linalg import permute_qubits, tensor

# Largest p(a=b=c) any model with three independent local sources can reach.
# Taken as an external constant (reported alongside the quantum curve), not
# derived here.
TRILOCAL_BOUND = 61.0 / 256.0

# Sources emit pairs in the order (A2 B1)(B2 C1)(C2 A1); this permutation
# rearranges those six qubits into party order (A1 A2 B1 B2 C1 C2).
SOURCE_PERMUTATION = (1, 2, 3, 4, 5, 0)


def triangle_state() -> np.ndarray:
    """The six-qubit network state, qubits ordered (A1 A2 B1 B2 C1 C2)."""
    pair = bell_psi_plus()
    return permute_qubits(tensor(pair, pair, pair), SOURCE_PERMUTATION)


@dataclass(frozen=True)
class OutcomeDistribution:
    """Joint outcome probabilities p[a, b, c] for the three parties."""

    params: SjmParams
    probs: np.ndarray  # shape (4, 4, 4)

    def __post_init__(self) -> None:
        if self.probs.shape != (4, 4, 4):
            raise ValueError(f"expected shape (4, 4, 4), got {self.probs.shape}")
        if float(self.probs.min()) < -1e-12:
            raise ValueError("negative probability beyond tolerance")

    def prob(self, a: int, b: int, c: int) -> float:
        return float(self.probs[a, b, c])

    def total(self) -> float:
        return float(self.probs.sum())

    def p_same(self) -> float:
        """Probability that all three outcomes coincide."""
        return float(np.einsum("kkk->", self.probs))

    def permutation_residual(self) -> float:
        """Max change of the table under any relabeling of the parties."""
        worst = 0.0
        for axes in ((0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
            worst = max(worst, float(np.abs(self.probs - self.probs.transpose(axes)).max()))
        return worst


def joint_distribution(params: SjmParams) -> OutcomeDistribution:
    """Brute-force distribution: project the network state onto every
    triple of basis states."""
    m = np.asarray(sjm_basis(params).states)  # (4, 4): state index x amplitudes
    psi = triangle_state().reshape(4, 4, 4)  # party pairs (A1A2), (B1B2), (C1C2)
    amps = np.einsum("ja,kb,lc,abc->jkl", m.conj(), m.conj(), m.conj(), psi)
    return OutcomeDistribution(params=params, probs=np.maximum(np.abs(amps) ** 2, 0.0))


def outcome_amplitude(j: int, k: int, l: int, params: SjmParams) -> complex:
    """<state_j state_k state_l | network state>, computed numerically."""
    states = sjm_basis(params).states
    return complex(
        np.vdot(tensor(states[j], states[k], states[l]), triangle_state())
    )


def amplitude_closed_form(j: int, k: int, l: int, params: SjmParams) -> complex:
    """The same amplitude in closed form (independent oracle for tests):

    (1/32) { e^{-2i theta} (cj + ck + cl)
             + 2 e^{-i theta} [sin(pj - pk) + sin(pk - pl) + sin(pl - pj)]
             - 2 [cj cos(pk - pl) + ck cos(pl - pj) + cl cos(pj - pk)]
             - cj ck cl }
    """
    cj, ck, cl = cos_k_pi(j), cos_k_pi(k), cos_k_pi(l)
    pj, pk, pl = params.phi_k(j), params.phi_k(k), params.phi_k(l)
    theta = params.theta
    return (
        np.exp(-2j * theta) * (cj + ck + cl)
        + 2.0
        * np.exp(-1j * theta)
        * (math.sin(pj - pk) + math.sin(pk - pl) + math.sin(pl - pj))
        - 2.0
        * (
            cj * math.cos(pk - pl)
            + ck * math.cos(pl - pj)
            + cl * math.cos(pj - pk)
        )
        - cj * ck * cl
    ) / 32.0


def closed_form_probability(j: int, k: int, l: int, theta: float) -> float:
    """Outcome probability by case: all outcomes equal, all distinct, or
    exactly two equal.  Depends on theta only."""
    s2 = math.sin(theta) ** 2
    if j == k == l:
        return (4.0 + 21.0 * s2) / 256.0
    if j != k and k != l and j != l:
        return (4.0 + s2) / 256.0
    return (4.0 - 3.0 * s2) / 256.0


def p_same_outcome(params: SjmParams) -> float:
    """p(a = b = c) from the brute-force distribution; self-checked against
    the closed form (4 + 21 sin^2 theta)/64."""
    value = joint_distribution(params).p_same()
    expected = (4.0 + 21.0 * math.sin(params.theta) ** 2) / 64.0
    assert abs(value - expected) <= 1e-10, "p_same disagrees with closed form"
    return value


def threshold_theta() -> float:
    """Where p(a=b=c) crosses the trilocal bound: arcsin(sqrt(15/28))."""
    return math.asin(math.sqrt(15.0 / 28.0))


@dataclass(frozen=True)
class NonlocalityReport:
    """One scan point: agreement probability against the trilocal bound."""

    theta: float
    p_same: float
    bound: float
    violates: bool


def nonlocality_scan(thetas, phi: float = math.pi / 4) -> list[NonlocalityReport]:
    """Evaluate p(a=b=c) along theta at fixed phi and flag bound violations."""
    reports = []
    for theta in thetas:
        p = p_same_outcome(SjmParams(float(theta), phi))
        reports.append(
            NonlocalityReport(
                theta=float(theta),
                p_same=p,
                bound=TRILOCAL_BOUND,
                violates=p > TRILOCAL_BOUND + 1e-12,
            )
        )
    return reports
