"""
Truncated formal power series with complex coefficients.

A :class:`PowerSeries` of order ``T`` stores ``c_0 .. c_{T-1}``; every
operation returns a series of the same order whose coefficients agree with
the exact (untruncated) result.
"""

from __future__ import annotations

from numbers import Number

import numpy as np

from .errors import BadConstantTerm, ZeroConstantTerm

__all__ = ["PowerSeries", "series_div", "series_sqrt"]

ZERO_TOL = 1e-12


class PowerSeries:
    """Order-``T`` truncation of ``sum_k c_k z^k``.

    Supports ``+``, ``-``, ``*`` and ``/`` between series of equal order and
    with complex scalars.

    >>> one_minus_z = PowerSeries([1, -1], order=4)
    >>> (1 / one_minus_z).coeffs.real
    array([1., 1., 1., 1.])
    """

    __slots__ = ("_c",)
    __array_priority__ = 1000  # make numpy scalars defer to our operators

    def __init__(self, coeffs, order: int | None = None):
        c = np.asarray(coeffs, dtype=np.complex128).ravel()
        if order is not None:
            if order < 1:
                raise ValueError(f"order must be >= 1, got {order}")
            if len(c) >= order:
                c = c[:order].copy()
            else:
                c = np.concatenate([c, np.zeros(order - len(c), dtype=np.complex128)])
        elif len(c) == 0:
            raise ValueError("a power series needs at least one coefficient")
        c.flags.writeable = False
        self._c = c

    @classmethod
    def monomial(cls, k: int, order: int, coeff: complex = 1.0) -> PowerSeries:
        """``coeff * z**k`` truncated at ``order``."""
        c = np.zeros(order, dtype=np.complex128)
        if k < order:
            c[k] = coeff
        return cls(c)

    @classmethod
    def constant(cls, value: complex, order: int) -> PowerSeries:
        return cls.monomial(0, order, value)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def order(self) -> int:
        return len(self._c)

    def __getitem__(self, k):
        return self._c[k]

    def __len__(self) -> int:
        return len(self._c)

    def __repr__(self) -> str:
        return f"PowerSeries({self._c.tolist()!r})"

    def _coerce(self, other) -> PowerSeries:
        if isinstance(other, PowerSeries):
            if other.order != self.order:
                raise ValueError(f"order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, Number):
            return PowerSeries.constant(complex(other), self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PowerSeries(self._c + other._c)

    __radd__ = __add__

    def __neg__(self) -> PowerSeries:
        return PowerSeries(-self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PowerSeries(self._c - other._c)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, Number):
            return PowerSeries(self._c * complex(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return PowerSeries(np.convolve(self._c, other._c)[: self.order])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Number):
            return PowerSeries(self._c / complex(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return series_div(other, self)

    def __pow__(self, n: int) -> PowerSeries:
        if not isinstance(n, (int, np.integer)) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = PowerSeries.constant(1.0, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift_down(self, what: str = "series") -> PowerSeries:
        """
        Divide by ``z``.

        The constant term must vanish (|c_0| < 1e-12); otherwise the quotient
        is not a power series and :class:`ZeroConstantTerm` is raised. The new
        top coefficient is unknown at this order and is set to zero, so the
        result is exact only through ``c_{T-2}``; callers that need full
        accuracy work one order higher and truncate.
        """
        if abs(self._c[0]) >= ZERO_TOL:
            raise ZeroConstantTerm(
                f"cannot divide {what} by z: constant term {self._c[0]!r} is not zero"
            )
        return PowerSeries(np.append(self._c[1:], 0.0))

    def shift_up(self, k: int = 1) -> PowerSeries:
        """Multiply by ``z**k``."""
        if k == 0:
            return self
        c = np.zeros(self.order, dtype=np.complex128)
        c[k:] = self._c[: self.order - k]
        return PowerSeries(c)

    def truncate(self, order: int) -> PowerSeries:
        return PowerSeries(self._c, order=order)

    def sqrt(self) -> PowerSeries:
        return series_sqrt(self)

    def allclose(self, other, atol: float = 1e-12) -> bool:
        other = self._coerce(other)
        return bool(np.all(np.abs(self._c - other._c) <= atol))


def series_div(num: PowerSeries, den: PowerSeries) -> PowerSeries:
    """Quotient ``q`` with ``q * den == num`` through order ``T``.

    Raises
    ------
    ZeroConstantTerm
        If ``|den[0]| <= 1e-12``.
    """
    if num.order != den.order:
        raise ValueError(f"order mismatch: {num.order} vs {den.order}")
    d = den.coeffs
    if abs(d[0]) <= ZERO_TOL:
        raise ZeroConstantTerm(f"denominator constant term {d[0]!r} is zero")
    n = num.coeffs
    q = np.zeros(num.order, dtype=np.complex128)
    inv0 = 1.0 / d[0]
    for k in range(num.order):
        # q_k = (n_k - sum_{j<k} q_j d_{k-j}) / d_0
        acc = n[k] - np.dot(q[:k], d[k:0:-1])
        q[k] = acc * inv0
    return PowerSeries(q)


def series_sqrt(ps: PowerSeries) -> PowerSeries:
    """
    Square root on the branch with ``s(0) = +1``.

    Requires ``ps[0] == 1`` (within 1e-12). Uses the recurrence
    ``2 s_k = p_k - sum_{j=1}^{k-1} s_j s_{k-j}``.
    """
    p = ps.coeffs
    if abs(p[0] - 1.0) > ZERO_TOL:
        raise BadConstantTerm(f"constant term must be 1, got {p[0]!r}")
    s = np.zeros(ps.order, dtype=np.complex128)
    s[0] = 1.0
    for k in range(1, ps.order):
        s[k] = 0.5 * (p[k] - np.dot(s[1:k], s[k - 1 : 0 : -1]))
    return PowerSeries(s)
