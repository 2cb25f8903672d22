"""
Closed-form generating functions of the half-line walk.

``Psi(x, z) = sum_t psi(x, t) z^t`` is assembled from two auxiliary series of
the bulk coin,

    lambda_+(z) = (1 + D z^2 - sqrt(D^2 z^4 + 2 D (1 - 2|a|^2) z^2 + 1)) / (2 d z)
    B(z)        = (lambda_+ - a z) / (a c z)

(``D`` is the bulk determinant) and a denominator shared by every site,

    1 - b0 z - b c0 z^2 - b D0 z^3 - a d D0 z^3 B - a c0 d z^2 B.

The coefficient of ``z^t`` is the amplitude at time ``t``, which gives an
evaluation route that never iterates the one-step rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .coins import Coin, WalkSpec, is_generic
from .errors import DegenerateCoin
from .series import PowerSeries

__all__ = [
    "GenFunBundle",
    "lambda_plus",
    "br0",
    "generating_functions",
    "psi_series",
    "amplitude_at",
    "amplitude_table",
]


def _require_generic(coin: Coin, role: str = "coin") -> None:
    if not is_generic(coin):
        raise DegenerateCoin(f"{role} has a zero entry: {coin.entries}")


def _lambda_plus_raw(coin: Coin, order: int) -> PowerSeries:
    # Exact through z^(order-2): the division by z loses the top coefficient.
    a, _, _, d = coin.entries
    det = coin.det
    z = lambda k: PowerSeries.monomial(k, order)  # noqa: E731
    radicand = det * det * z(4) + 2 * det * (1 - 2 * abs(a) ** 2) * z(2) + 1
    numerator = 1 + det * z(2) - radicand.sqrt()
    return numerator.shift_down("lambda_+ numerator") / (2 * d)


def lambda_plus(coin: Coin, T: int) -> PowerSeries:
    """
    Series of ``lambda_+`` for ``coin`` to order ``T``.

    Raises
    ------
    DegenerateCoin
        If the coin has a zero entry.
    """
    _require_generic(coin)
    if T < 2:
        raise ValueError(f"T must be >= 2, got {T}")
    return _lambda_plus_raw(coin, T + 1).truncate(T)


def _br0_raw(coin: Coin, order: int) -> PowerSeries:
    # Exact through z^(order-3).
    a, _, c, _ = coin.entries
    lam = _lambda_plus_raw(coin, order)
    return (lam - PowerSeries.monomial(1, order, a)).shift_down("lambda_+ - a z") / (a * c)


def br0(coin: Coin, T: int) -> PowerSeries:
    """Series of ``(lambda_+ - a z) / (a c z)`` to order ``T``."""
    _require_generic(coin)
    return _br0_raw(coin, T + 2).truncate(T)


@dataclass
class GenFunBundle:
    """Generating functions of one walk, all truncated at order ``T``."""

    T: int
    lambda_plus: PowerSeries
    br0: PowerSeries
    denom: PowerSeries
    psi_down: dict[int, PowerSeries] = field(default_factory=dict)
    psi_up: dict[int, PowerSeries] = field(default_factory=dict)


def generating_functions(spec: WalkSpec, T: int, xmax: int = 0) -> GenFunBundle:
    """Assemble ``Psi(x, z)`` for ``x = 0 .. xmax`` to order ``T``."""
    _require_generic(spec.boundary_coin, "boundary coin")
    _require_generic(spec.bulk_coin, "bulk coin")
    if T < 1:
        raise ValueError(f"T must be >= 1, got {T}")
    if xmax < 0:
        raise ValueError(f"xmax must be >= 0, got {xmax}")

    a0, b0, c0, d0 = spec.boundary_coin.entries
    a, b, c, d = spec.bulk_coin.entries
    det0 = spec.boundary_coin.det
    alpha, beta = spec.alpha, spec.beta

    order = T + 2
    z = lambda k: PowerSeries.monomial(k, order)  # noqa: E731
    lam = _lambda_plus_raw(spec.bulk_coin, order + 1).truncate(order)
    br = _br0_raw(spec.bulk_coin, order + 2).truncate(order)

    denom = (
        1
        - b0 * z(1)
        - b * c0 * z(2)
        - b * det0 * z(3)
        - a * d * det0 * (z(3) * br)
        - a * c0 * d * (z(2) * br)
    )
    # alpha D0 z + alpha c0 + beta d0: the amplitude that first leaves site 0
    launch = alpha * det0 * z(1) + (alpha * c0 + beta * d0)

    down = {0: alpha + (b + a * d * br) * launch * z(2) / denom}
    up = {
        0: beta
        + (
            alpha * a0 * z(1)
            + beta * b0 * z(1)
            + beta * b * det0 * z(3)
            + beta * a * d * det0 * (z(3) * br)
        )
        / denom
    }
    if xmax >= 1:
        base_down = d * z(1) * br * launch / denom
        base_up = z(1) * launch / denom
        ratio = lam * (d / a)
        power = PowerSeries.constant(1.0, order)
        for x in range(1, xmax + 1):
            down[x] = power * base_down
            up[x] = power * base_up
            power = power * ratio

    return GenFunBundle(
        T=T,
        lambda_plus=lam.truncate(T),
        br0=br.truncate(T),
        denom=denom.truncate(T),
        psi_down={x: s.truncate(T) for x, s in down.items()},
        psi_up={x: s.truncate(T) for x, s in up.items()},
    )


def psi_series(spec: WalkSpec, x: int, T: int) -> tuple[PowerSeries, PowerSeries]:
    """``(Psi_down(x, z), Psi_up(x, z))`` truncated at order ``T``."""
    bundle = generating_functions(spec, T, x)
    return bundle.psi_down[x], bundle.psi_up[x]


def amplitude_at(spec: WalkSpec, x: int, t: int) -> tuple[complex, complex]:
    """Amplitude ``psi(x, t)`` read off as the ``z^t`` coefficient."""
    down, up = psi_series(spec, x, t + 1)
    return complex(down[t]), complex(up[t])


def amplitude_table(spec: WalkSpec, xmax: int, tmax: int) -> np.ndarray:
    """
    Array ``A[x, t, s]`` of amplitudes for ``x <= xmax``, ``t <= tmax``;
    ``s = 0`` is spin down and ``s = 1`` spin up.
    """
    bundle = generating_functions(spec, tmax + 1, xmax)
    out = np.empty((xmax + 1, tmax + 1, 2), dtype=np.complex128)
    for x in range(xmax + 1):
        out[x, :, 0] = bundle.psi_down[x].coeffs
        out[x, :, 1] = bundle.psi_up[x].coeffs
    return out
