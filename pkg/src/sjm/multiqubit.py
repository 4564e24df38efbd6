"""Even-n generalization of the symmetric joint measurement.

An n-qubit basis (n even) indexed by tuples (k_1, ..., k_{n/2}) base 4,
built by the same two-term symmetrization as the two-qubit case applied
across all pairs at once.  Orthonormality rests on the identity
<m_{j,0}|m_{k,0}> <m_{j,1}|m_{k,1}> = delta_{jk}, made transparent by two
auxiliary orthonormal single-qubit bases.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .analysis import bloch_vector
from .bases import SjmParams, component_state, cos_k_pi
from .linalg import inner, orthonormality_residual, partial_trace, tensor

# Dimension 4096 keeps construction and sampling interactive; a config
# constant, not an algorithmic limit.
N_CAP = 12

_COMPONENT_NORM = 1.0 / math.sqrt(4.0 + 2.0 * math.sqrt(2.0))
_EIGHTH_TURN = np.exp(0.25j * math.pi)


def aux_state(which: int, sign: int, phi: float) -> np.ndarray:
    """One of the auxiliary orthonormal single-qubit pairs.

    which=0 gives |m_0^+-> with |0>/|1> weights (1 + e^{-i pi/4}) and
    +-(1 + e^{i pi/4}); which=1 swaps the two weights.  Both carry the
    azimuthal phases e^{-+ i phi/2} and the shared 1/sqrt(4 + 2 sqrt 2)
    normalization.
    """
    if which not in (0, 1):
        raise ValueError(f"which must be 0 or 1, got {which}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    w = _EIGHTH_TURN if which else _EIGHTH_TURN.conjugate()
    half_phase = np.exp(0.5j * phi)
    return _COMPONENT_NORM * np.array(
        [(1.0 + w) / half_phase, sign * (1.0 + w.conjugate()) * half_phase],
        dtype=complex,
    )


def pairwise_overlap_product(j: int, k: int, params: SjmParams) -> complex:
    """<m_{j,0}|m_{k,0}> <m_{j,1}|m_{k,1}>; equals delta_{jk}, which is what
    makes the n-qubit Gram matrix the identity."""
    return inner(component_state(j, 0, params), component_state(k, 0, params)) * inner(
        component_state(j, 1, params), component_state(k, 1, params)
    )


@dataclass(frozen=True)
class MultiSjmBasis:
    """The 4^{n/2} basis states, ordered lexicographically by index tuple."""

    n: int
    params: SjmParams
    states: tuple[np.ndarray, ...]

    def index_tuples(self) -> list[tuple[int, ...]]:
        return list(itertools.product(range(4), repeat=self.n // 2))

    def state_for(self, ks: tuple[int, ...]) -> np.ndarray:
        if len(ks) != self.n // 2 or any(k not in (0, 1, 2, 3) for k in ks):
            raise ValueError(f"bad index tuple {ks} for n={self.n}")
        flat = 0
        for k in ks:
            flat = 4 * flat + k
        return self.states[flat]


def multi_sjm_basis(n: int, params: SjmParams) -> MultiSjmBasis:
    """Build the n-qubit basis (n even, 2 <= n <= 12)."""
    if n % 2 != 0 or not 2 <= n <= N_CAP:
        raise ValueError(f"n must be even with 2 <= n <= {N_CAP}, got {n}")
    pairs = n // 2
    # Per direction index: the component pair in both orders.
    forward = [tensor(component_state(k, 0, params), component_state(k, 1, params)) for k in range(4)]
    swapped = [tensor(component_state(k, 1, params), component_state(k, 0, params)) for k in range(4)]
    mix = np.exp(1j * params.theta)
    states = []
    for ks in itertools.product(range(4), repeat=pairs):
        first = tensor(*(forward[k] for k in ks))
        second = tensor(*(swapped[k] for k in ks))
        states.append(0.5 * ((1.0 + mix) * first + (1.0 - mix) * second))
    return MultiSjmBasis(n=n, params=params, states=tuple(states))


@dataclass(frozen=True)
class GramCheck:
    """Result of an orthonormality check, exhaustive or sampled."""

    residual: float
    exhaustive: bool
    pairs_sampled: int


def gram_residual(
    basis: MultiSjmBasis, rng: np.random.Generator | None = None, pairs: int = 200
) -> GramCheck:
    """Max deviation of the Gram matrix from the identity.

    Exhaustive for n <= 6.  For n >= 8 the full matrix grows quartically,
    so all norms are checked and `pairs` off-diagonal entries are sampled;
    the caller must supply a seeded generator so failures reproduce.
    """
    if basis.n <= 6:
        return GramCheck(
            residual=orthonormality_residual(basis.states),
            exhaustive=True,
            pairs_sampled=0,
        )
    if rng is None:
        raise ValueError("n >= 8 uses sampled Gram checking; pass a seeded rng")
    worst = max(abs(inner(s, s) - 1.0) for s in basis.states)
    count = len(basis.states)
    for _ in range(pairs):
        j = int(rng.integers(count))
        k = int(rng.integers(count - 1))
        if k >= j:
            k += 1
        worst = max(worst, abs(inner(basis.states[j], basis.states[k])))
    return GramCheck(residual=float(worst), exhaustive=False, pairs_sampled=pairs)


def multi_reduction_vector(
    basis: MultiSjmBasis, ks: tuple[int, ...], position: int
) -> np.ndarray:
    """Bloch vector of the single-qubit reduction at a qubit position (0-based)."""
    if not 0 <= position < basis.n:
        raise ValueError(f"position {position} out of range for n={basis.n}")
    return bloch_vector(partial_trace(basis.state_for(ks), position))


def multi_reduction_closed_form(
    k: int, params: SjmParams, n: int, position: int
) -> np.ndarray:
    """Closed form for the reduction at one position of pair i = position // 2:

        (1/sqrt 2) (-cos(k pi) cos(phi_k) +- cos(theta) sin(phi_k),
                    -cos(k pi) sin(phi_k) -+ cos(theta) cos(phi_k),
                    +- 2^{(1-n)/2} cos(k pi) sin(theta))

    with the upper sign on the first qubit of the pair (even position) and
    the lower on the second.
    """
    sign = 1.0 if position % 2 == 0 else -1.0
    ck = cos_k_pi(k)
    phik = params.phi_k(k)
    ct, st = math.cos(params.theta), math.sin(params.theta)
    inv_root2 = 1.0 / math.sqrt(2.0)
    return np.array(
        [
            inv_root2 * (-ck * math.cos(phik) + sign * ct * math.sin(phik)),
            inv_root2 * (-ck * math.sin(phik) - sign * ct * math.cos(phik)),
            inv_root2 * sign * 2.0 ** ((1.0 - n) / 2.0) * ck * st,
        ]
    )
