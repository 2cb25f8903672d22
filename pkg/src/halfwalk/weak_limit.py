"""
Limit law of ``X_t / t`` for half-line walks with equal coin determinants.

The limit has an atom of weight ``rho`` at the origin plus an absolutely
continuous part supported on ``(0, |a|)``:

    f_ac(y) = h(y) |c|^2 y^2 / (pi (1 - y^2) sqrt(|a|^2 - y^2))

where ``h`` is a ratio of terms built from the bulk coin, the boundary coin's
``c0, d0`` and the initial state. ``rho`` is whatever mass ``f_ac`` leaves
over. Integrals of ``f_ac`` are taken in the variable ``phi`` with
``y = |a| sin(phi)``, which cancels the inverse square root at ``y = |a|``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate

from .coins import Coin, WalkSpec, det_sqrt, is_generic
from .evolution import empirical_cdf, evolve
from .errors import (
    AssumptionViolated,
    DegenerateCoin,
    NumericalSingularity,
    OutOfSupport,
    QuadratureFailure,
)

__all__ = [
    "HParams",
    "DensityModel",
    "QuadratureConfig",
    "h_params",
    "h_value",
    "density_ac",
    "homogeneous_density",
    "hadamard_density",
    "rho",
    "limit_cdf",
    "density_model",
    "cdf_sup_distance",
]

SINGULAR_TOL = 1e-13


@dataclass(frozen=True)
class QuadratureConfig:
    subdivisions: int = 200
    abs_tol: float = 1e-8

    def __post_init__(self) -> None:
        if self.abs_tol <= 0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol}")
        if self.subdivisions < 1:
            raise ValueError(f"subdivisions must be >= 1, got {self.subdivisions}")


@dataclass(frozen=True)
class HParams:
    """Real scalars that enter ``h(y)``; everything except the ``y`` factors."""

    c_abs2: float  # |c|^2
    im_c_c0_root: float  # Im(conj(c) r - conj(c0) r), r = sqrt(det)
    mix: float  # 1 + |c0|^2 - 2 Re(conj(c) c0)
    im_c_c0sq: float  # Im(conj(c) r + conj(c) c0^2 / r)
    re_c_c0_root: float  # Re(conj(c) r - conj(c0) r)
    im_c_c0: float  # Im(conj(c) c0)
    weight: float  # |alpha|^2 + |alpha c0 + beta d0|^2
    re_launch: float  # Re(alpha r conj(alpha c0 + beta d0))
    im_launch: float  # Im(alpha r conj(alpha c0 + beta d0))
    a_abs: float  # |a|, right end of the support


def _check_spec(spec: WalkSpec) -> None:
    if not is_generic(spec.boundary_coin):
        raise DegenerateCoin(f"boundary coin has a zero entry: {spec.boundary_coin.entries}")
    if not is_generic(spec.bulk_coin):
        raise DegenerateCoin(f"bulk coin has a zero entry: {spec.bulk_coin.entries}")
    if not spec.limit_eligible:
        raise AssumptionViolated(
            f"boundary determinant {spec.boundary_coin.det!r} differs from "
            f"bulk determinant {spec.bulk_coin.det!r}"
        )


def h_params(spec: WalkSpec) -> HParams:
    _check_spec(spec)
    _, _, c0, d0 = spec.boundary_coin.entries
    a, _, c, _ = spec.bulk_coin.entries
    r = det_sqrt(spec.bulk_coin)
    cb, c0b = c.conjugate(), c0.conjugate()
    launch = spec.alpha * c0 + spec.beta * d0
    z = spec.alpha * r * launch.conjugate()
    return HParams(
        c_abs2=abs(c) ** 2,
        im_c_c0_root=(cb * r - c0b * r).imag,
        mix=1 + abs(c0) ** 2 - 2 * (cb * c0).real,
        im_c_c0sq=(cb * r + cb * c0**2 / r).imag,
        re_c_c0_root=(cb * r - c0b * r).real,
        im_c_c0=(cb * c0).imag,
        weight=abs(spec.alpha) ** 2 + abs(launch) ** 2,
        re_launch=z.real,
        im_launch=z.imag,
        a_abs=abs(a),
    )


def _h(hp: HParams, y: np.ndarray) -> np.ndarray:
    c_abs = np.sqrt(hp.c_abs2)
    one = 1.0 - y * y
    s1 = np.sqrt(one)
    # clip guards y rounding onto |a| inside the quadrature
    sa = np.sqrt(np.maximum(hp.a_abs**2 - y * y, 0.0))

    h1 = 2 * hp.c_abs2 * hp.im_c_c0_root
    h4 = 2 * c_abs * hp.re_c_c0_root * sa
    h5 = 2 * hp.im_c_c0 * s1 * sa
    h6 = hp.weight * s1
    h7 = 2 * hp.re_launch * sa
    h8 = 2 * c_abs * hp.im_launch

    # p = h1 + h2 - h3 and m = -h1 + h2 + h3, expanded about y = 0 using
    # 1 - sqrt(1 - y^2) = y^2 / (1 + sqrt(1 - y^2)) to avoid cancellation
    k2 = hp.mix * c_abs
    k3 = hp.im_c_c0sq
    w = y * y / (1.0 + s1)
    p = (h1 + k2 - k3) - k2 * w + k3 * y * y
    m = (-h1 + k2 + k3) - k2 * w - k3 * y * y
    den1 = p**2 - (h4 + h5) ** 2
    den2 = m**2 - (h4 - h5) ** 2
    # Some homogeneous coins (Hadamard among them) give den1 ~ y^4 as y -> 0,
    # cancelled by the y^2 prefactor of the density; scale the guard to match.
    floor = SINGULAR_TOL * y**4
    if np.any(np.abs(den1) <= floor) or np.any(np.abs(den2) <= floor):
        raise NumericalSingularity("h(y) denominator vanishes on the requested points")
    return ((h6 - h8) * p + h7 * (h4 + h5)) / den1 + ((h6 + h8) * m + h7 * (h4 - h5)) / den2


def _scalar_or_array(out: np.ndarray, y_in):
    return float(out) if np.ndim(y_in) == 0 else out


def h_value(spec: WalkSpec, y):
    """
    Evaluate ``h(y)`` for ``y`` in the open interval ``(0, |a|)``.

    Raises
    ------
    AssumptionViolated
        If the two coin determinants differ.
    DegenerateCoin
        If either coin has a zero entry.
    OutOfSupport
        If any ``y`` lies outside ``(0, |a|)``.
    NumericalSingularity
        If a denominator of ``h`` falls below ``1e-13 * y**4`` in magnitude.
    """
    hp = h_params(spec)
    y_arr = np.asarray(y, dtype=float)
    if np.any(y_arr <= 0) or np.any(y_arr >= hp.a_abs):
        raise OutOfSupport(f"y must lie in (0, {hp.a_abs!r})")
    return _scalar_or_array(_h(hp, y_arr), y)


def _ac_inside(hp: HParams, y: np.ndarray) -> np.ndarray:
    sa = np.sqrt(hp.a_abs**2 - y * y)
    return _h(hp, y) * hp.c_abs2 * y * y / (np.pi * (1 - y * y) * sa)


def _ac_phi(hp: HParams, phi: float) -> float:
    # f_ac(|a| sin phi) * dy/dphi; the sqrt(|a|^2 - y^2) factors cancel
    y = hp.a_abs * np.sin(phi)
    return float(_h(hp, np.asarray(y)) * hp.c_abs2 * y * y / (np.pi * (1 - y * y)))


def density_ac(spec: WalkSpec, y):
    """
    Absolutely continuous part of the limit density at ``y`` in (0, 1).

    Zero on ``[|a|, 1)``.
    """
    hp = h_params(spec)
    y_arr = np.asarray(y, dtype=float)
    if np.any(y_arr <= 0) or np.any(y_arr >= 1):
        raise OutOfSupport("y must lie in (0, 1)")
    inside = y_arr < hp.a_abs
    out = np.zeros_like(y_arr)
    if np.any(inside):
        out[inside] = _ac_inside(hp, y_arr[inside])
    return _scalar_or_array(out, y)


def homogeneous_density(coin: Coin, alpha: complex, beta: complex, y):
    """Limit density (continuous part) of the walk using ``coin`` everywhere.

    This is the closed form obtained when the boundary coin equals the bulk
    coin; it is evaluated independently of :func:`density_ac`.
    """
    if not is_generic(coin):
        raise DegenerateCoin(f"coin has a zero entry: {coin.entries}")
    y_arr = np.asarray(y, dtype=float)
    if np.any(y_arr <= 0) or np.any(y_arr >= 1):
        raise OutOfSupport("y must lie in (0, 1)")
    a, _, c, d = coin.entries
    r = det_sqrt(coin)
    a_abs, c_abs = abs(a), abs(c)
    out_amp = alpha * c + beta * d
    im_cr = (c.conjugate() * r).imag
    im_st = (alpha * r * out_amp.conjugate()).imag
    num = 2 * c_abs**3 * (abs(alpha) ** 2 + abs(out_amp) ** 2 - 2 * im_cr * im_st)

    out = np.zeros_like(y_arr)
    inside = y_arr < a_abs
    yi = y_arr[inside]
    one = 1 - yi * yi
    # |c|^2 - Im^2 (1 - y^2), grouped so the y -> 0 limit does not cancel
    mixed = (c_abs**2 - im_cr**2) + im_cr**2 * yi * yi
    den = np.pi * a_abs**2 * mixed * one * np.sqrt(a_abs**2 - yi * yi)
    out[inside] = num * yi * yi / den
    return _scalar_or_array(out, y)


def hadamard_density(y):
    """``2 / (pi (1 - y^2) sqrt(1 - 2 y^2))`` on (0, sqrt2/2), zero beyond."""
    y_arr = np.asarray(y, dtype=float)
    out = np.zeros_like(y_arr)
    inside = (y_arr > 0) & (y_arr < np.sqrt(0.5))
    yi = y_arr[inside]
    out[inside] = 2 / (np.pi * (1 - yi * yi) * np.sqrt(1 - 2 * yi * yi))
    return _scalar_or_array(out, y)


def _integrate_phi(hp: HParams, lo: float, hi: float, quad: QuadratureConfig) -> float:
    if hi <= lo:
        return 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        res = integrate.quad(
            lambda phi: _ac_phi(hp, phi),
            lo,
            hi,
            epsabs=quad.abs_tol,
            epsrel=0.0,
            limit=quad.subdivisions,
            full_output=1,
        )
    value, abserr = res[0], res[1]
    if len(res) > 3 or not abserr <= quad.abs_tol:
        msg = res[3] if len(res) > 3 else "error estimate above tolerance"
        raise QuadratureFailure(f"|error| ~ {abserr:.3e} > {quad.abs_tol:.1e}: {msg}")
    return value


def rho(spec: WalkSpec, quad: QuadratureConfig | None = None) -> float:
    """Weight of the atom at the origin: one minus the integral of ``f_ac``."""
    quad = quad or QuadratureConfig()
    hp = h_params(spec)
    return 1.0 - _integrate_phi(hp, 0.0, np.pi / 2, quad)


def limit_cdf(spec: WalkSpec, y, quad: QuadratureConfig | None = None):
    """
    CDF of the limit law, ``rho + int_0^y f_ac``, for ``y`` in [0, 1].

    An array of ``y`` is integrated piecewise between sorted points so that
    the result is monotone by construction.
    """
    quad = quad or QuadratureConfig()
    hp = h_params(spec)
    y_arr = np.asarray(y, dtype=float)
    if np.any(y_arr < 0) or np.any(y_arr > 1):
        raise ValueError("y must lie in [0, 1]")
    base = rho(spec, quad)
    phis = np.arcsin(np.minimum(y_arr.ravel(), hp.a_abs) / hp.a_abs)
    order = np.argsort(phis)
    sorted_phis = phis[order]
    pieces = np.empty_like(sorted_phis)
    prev = 0.0
    for i, phi in enumerate(sorted_phis):
        pieces[i] = _integrate_phi(hp, prev, phi, quad)
        prev = max(prev, phi)
    cdf_sorted = base + np.cumsum(pieces)
    out = np.empty_like(cdf_sorted)
    out[order] = cdf_sorted
    return _scalar_or_array(out.reshape(y_arr.shape), y)


@dataclass(frozen=True)
class DensityModel:
    """Atom weight ``rho`` at zero plus the continuous density on (0, |a|)."""

    rho: float
    ac_density: Callable[[np.ndarray], np.ndarray]
    support_end: float


def density_model(spec: WalkSpec, quad: QuadratureConfig | None = None) -> DensityModel:
    hp = h_params(spec)
    return DensityModel(
        rho=rho(spec, quad),
        ac_density=lambda y: density_ac(spec, y),
        support_end=hp.a_abs,
    )


def cdf_sup_distance(
    spec: WalkSpec,
    steps: int,
    n_grid: int = 50,
    quad: QuadratureConfig | None = None,
) -> float:
    """
    Largest gap between the CDF of ``X_t / t`` after ``steps`` steps and the
    limit CDF, over ``n_grid`` equally spaced points of [0, 1].
    """
    grid = np.linspace(0.0, 1.0, n_grid)
    limit = limit_cdf(spec, grid, quad)
    emp = empirical_cdf(evolve(spec, steps), grid)
    return float(np.max(np.abs(emp - limit)))
