"""
Direct state-vector evolution of the half-line walk.

Amplitudes are stored densely as an array of shape ``(t + 1, 2)``: row ``x``
holds ``(psi_down(x, t), psi_up(x, t))``. One step applies

    psi(0, t+1) = P psi(1, t) + S0 psi(0, t)
    psi(1, t+1) = P psi(2, t) + Q0 psi(0, t)
    psi(x, t+1) = P psi(x+1, t) + Q psi(x-1, t),   x >= 2

where ``P`` keeps the top row ``(a, b)`` of the bulk coin in the down slot,
``Q`` keeps the bottom row ``(c, d)`` in the up slot, and ``S0`` / ``Q0`` put
the boundary rows ``(a0, b0)`` / ``(c0, d0)`` into the up slot. A down spin at
site 0 therefore reflects into an up spin instead of leaving the half-line.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coins import WalkSpec

__all__ = [
    "StateVector",
    "Distribution",
    "initial_state",
    "step",
    "evolve",
    "trajectory",
    "distribution",
    "estimate_rho",
    "empirical_cdf",
]


@dataclass(frozen=True)
class StateVector:
    t: int
    amps: np.ndarray  # (t + 1, 2) complex; columns are (down, up)

    @property
    def norm2(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))

    def at(self, x: int) -> tuple[complex, complex]:
        """Amplitude pair at site ``x`` (zero beyond the light cone)."""
        if x < 0:
            raise IndexError(f"site must be >= 0, got {x}")
        if x >= len(self.amps):
            return 0j, 0j
        down, up = self.amps[x]
        return complex(down), complex(up)


@dataclass(frozen=True)
class Distribution:
    t: int
    p: np.ndarray


def initial_state(spec: WalkSpec) -> StateVector:
    amps = np.array([[spec.alpha, spec.beta]], dtype=np.complex128)
    return StateVector(0, amps)


def step(state: StateVector, spec: WalkSpec) -> StateVector:
    """Advance ``state`` by one time step; returns a new state."""
    a0, b0, c0, d0 = spec.boundary_coin.entries
    a, b, c, d = spec.bulk_coin.entries
    psi = state.amps
    n = len(psi)
    new = np.zeros((n + 1, 2), dtype=np.complex128)

    # P psi(x+1): down spins hop left, for every target site x >= 0
    if n > 1:
        new[: n - 1, 0] = a * psi[1:, 0] + b * psi[1:, 1]
    # boundary: S0 psi(0) stays at 0, Q0 psi(0) moves to 1, both spin up
    new[0, 1] = a0 * psi[0, 0] + b0 * psi[0, 1]
    new[1, 1] = c0 * psi[0, 0] + d0 * psi[0, 1]
    # Q psi(x-1): up spins hop right, for every target site x >= 2
    if n > 1:
        new[2:, 1] = c * psi[1:, 0] + d * psi[1:, 1]
    return StateVector(state.t + 1, new)


def evolve(spec: WalkSpec, t: int) -> StateVector:
    """Evolve the initial state of ``spec`` for ``t`` steps."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    state = initial_state(spec)
    for _ in range(t):
        state = step(state, spec)
    return state


def trajectory(spec: WalkSpec, t: int) -> list[StateVector]:
    """All states from time 0 through ``t`` inclusive."""
    states = [initial_state(spec)]
    for _ in range(t):
        states.append(step(states[-1], spec))
    return states


def distribution(state: StateVector) -> Distribution:
    p = np.sum(np.abs(state.amps) ** 2, axis=1)
    return Distribution(state.t, p)


def estimate_rho(spec: WalkSpec, t: int = 400, x_cut: int = 10) -> float:
    """
    Simulation estimate of the localization weight.

    Sums the site probabilities over ``x <= x_cut`` and averages times ``t``
    and ``t + 1`` to damp the parity oscillation of individual sites.
    """
    if x_cut < 0:
        raise ValueError(f"x_cut must be >= 0, got {x_cut}")
    s_t = evolve(spec, t)
    s_next = step(s_t, spec)
    p_t = distribution(s_t).p[: x_cut + 1].sum()
    p_next = distribution(s_next).p[: x_cut + 1].sum()
    return float(0.5 * (p_t + p_next))


def empirical_cdf(state: StateVector, y):
    """
    CDF of ``X_t / t`` at ``y``: the probability of ``X_t <= y * t``.

    Accepts a scalar or an array of ``y`` values in [0, 1]. At ``t = 0`` the
    walker sits at the origin, so the CDF is 1 everywhere.
    """
    y_arr = np.asarray(y, dtype=float)
    if np.any(y_arr < 0) or np.any(y_arr > 1):
        raise ValueError("y must lie in [0, 1]")
    cdf = np.cumsum(distribution(state).p)
    # small slack so y * t landing on an integer is not lost to rounding
    idx = np.floor(y_arr * state.t + 1e-9).astype(int)
    out = cdf[np.clip(idx, 0, state.t)]
    return float(out) if out.ndim == 0 else out
