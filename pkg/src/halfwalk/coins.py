"""
Coin matrices and walk specifications.

A :class:`Coin` is a validated 2x2 unitary ``[[a, b], [c, d]]``. A
:class:`WalkSpec` pairs a boundary coin (acting at site 0) with a bulk coin
(acting at every site x >= 1) and the initial coin state at site 0.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

from .errors import NotUnitary

UNITARY_TOL = 1e-12
DET_TOL = 1e-10
GENERIC_TOL = 1e-12

__all__ = [
    "Coin",
    "WalkSpec",
    "make_coin",
    "det_sqrt",
    "is_generic",
    "hadamard",
    "phased_coin",
    "random_coin",
    "hadamard_spec",
    "phased_spec",
    "mixed_spec",
]


@dataclass(frozen=True)
class Coin:
    """
    Unitary 2x2 coin ``[[a, b], [c, d]]``.

    Use :func:`make_coin` to build one; the constructor validates unitarity
    and caches the determinant.
    """

    a: complex
    b: complex
    c: complex
    d: complex
    det: complex = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        for name in "abcd":
            object.__setattr__(self, name, complex(getattr(self, name)))
        m = self.matrix
        err = np.abs(m.conj().T @ m - np.eye(2)).max()
        if not np.isfinite(err) or err > UNITARY_TOL:
            raise NotUnitary(f"U^dagger U deviates from identity by {err:.3e}")
        det = self.a * self.d - self.b * self.c
        if abs(abs(det) - 1.0) > UNITARY_TOL:
            raise NotUnitary(f"|det| = {abs(det)!r} is not 1")
        object.__setattr__(self, "det", det)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=np.complex128)

    @property
    def entries(self) -> tuple[complex, complex, complex, complex]:
        return self.a, self.b, self.c, self.d

    @classmethod
    def from_matrix(cls, m) -> Coin:
        m = np.asarray(m, dtype=np.complex128)
        if m.shape != (2, 2):
            raise ValueError(f"coin must be 2x2, got shape {m.shape}")
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])


def make_coin(a: complex, b: complex, c: complex, d: complex) -> Coin:
    """Build a validated coin from its row-major entries.

    Raises
    ------
    NotUnitary
        If ``U^dagger U`` differs from the identity by more than 1e-12.
    """
    return Coin(a, b, c, d)


def det_sqrt(coin: Coin) -> complex:
    """
    Principal square root of the coin determinant.

    For ``det = exp(i*theta)`` with ``theta`` in (-pi, pi] this returns
    ``exp(i*theta/2)``; in particular ``det = -1`` gives ``+1j``.
    """
    det = coin.det
    # Rounding can leave det just below the cut; keep it on the theta ~ pi side.
    if det.real < 0 and abs(det.imag) <= GENERIC_TOL:
        return 1j * cmath.sqrt(-det)
    return cmath.sqrt(det)


def is_generic(coin: Coin) -> bool:
    """True iff every entry of the coin is bounded away from zero."""
    return min(abs(e) for e in coin.entries) > GENERIC_TOL


@dataclass(frozen=True)
class WalkSpec:
    """
    A half-line walk: boundary coin ``U0`` at site 0, bulk coin ``U`` at
    sites x >= 1, launched from site 0 in coin state ``(alpha, beta)``.
    """

    boundary_coin: Coin
    bulk_coin: Coin
    alpha: complex
    beta: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        norm2 = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm2 - 1.0) > UNITARY_TOL:
            raise ValueError(f"initial state has squared norm {norm2!r}, expected 1")

    @property
    def limit_eligible(self) -> bool:
        """Whether the boundary and bulk determinants agree (to 1e-10)."""
        return abs(self.boundary_coin.det - self.bulk_coin.det) <= DET_TOL

    @property
    def homogeneous(self) -> bool:
        return self.boundary_coin == self.bulk_coin


_S = np.sqrt(2.0) / 2


def hadamard() -> Coin:
    return Coin(_S, _S, _S, -_S)


def phased_coin() -> Coin:
    """The coin ``(sqrt2/2) [[1, e^{i pi/4}], [e^{-i pi/4}, -1]]``."""
    return Coin(_S, _S * cmath.exp(1j * cmath.pi / 4), _S * cmath.exp(-1j * cmath.pi / 4), -_S)


def random_coin(rng: np.random.Generator | None = None) -> Coin:
    """Haar-random 2x2 unitary (QR of a complex Ginibre matrix)."""
    rng = np.random.default_rng(rng)
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    q = q * (np.diag(r) / np.abs(np.diag(r)))
    return Coin.from_matrix(q)


def hadamard_spec(alpha: complex = 1.0, beta: complex = 0.0) -> WalkSpec:
    h = hadamard()
    return WalkSpec(h, h, alpha, beta)


def phased_spec() -> WalkSpec:
    """Homogeneous walk with :func:`phased_coin`, state (sqrt2/2, i sqrt2/2)."""
    u = phased_coin()
    return WalkSpec(u, u, _S, 1j * _S)


def mixed_spec() -> WalkSpec:
    """Boundary coin :func:`phased_coin`, Hadamard bulk, state spin-up."""
    return WalkSpec(phased_coin(), hadamard(), 0.0, 1.0)
