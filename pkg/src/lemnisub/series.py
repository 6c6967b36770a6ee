"""Truncated Taylor series of analytic functions on the unit disk.

A :class:`PowerSeries` stores complex coefficients ``c[0] .. c[N]`` of

    p(z) = c0 + c1*z + c2*z**2 + ... + cN*z**N

and supports the calculus needed by the verification engine: Cauchy
products, division, real powers, ``sqrt``/``log``/``exp``, the operator
``z d/dz``, antiderivatives, composition with a series vanishing at 0,
and Horner evaluation.  Everything is computed by O(N^2) coefficient
recursions, which is ample at the default order N = 64 and keeps each
step numerically transparent.

Arithmetic between two series truncates the result at the smaller of the
two orders.  Values are immutable once constructed; instances may be
shared freely across threads.

    >>> s = PowerSeries([1.0, 1.0])        # 1 + z
    >>> (s * PowerSeries([1.0, -1.0])).coeffs.real.tolist()
    [1.0, 0.0]
    >>> one_over = 1.0 / s.pad_to(4)       # geometric series
    >>> one_over.coeffs.real.tolist()
    [1.0, -1.0, 1.0, -1.0, 1.0]
"""

from __future__ import annotations

from typing import Iterable, Union

import numpy as np
from numpy.polynomial import polynomial as npoly

from .config import DEFAULTS
from .errors import (
    ConstantTermNotOne,
    ConstantTermNotZero,
    DivisionByZeroConstantTerm,
    InnerConstantTermNotZero,
)

Scalar = Union[int, float, complex]

_DIV_PIVOT_TOL = 1e-14


class PowerSeries:
    """Immutable truncated power series with complex coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        c = np.asarray(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                       dtype=complex)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a non-empty 1-D sequence")
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            if c.size > order + 1:
                c = c[: order + 1]
            elif c.size < order + 1:
                c = np.concatenate([c, np.zeros(order + 1 - c.size, dtype=complex)])
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "_c", c)

    # --- construction helpers ---

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries":
        c = np.zeros(order + 1, dtype=complex)
        c[0] = value
        return cls(c)

    @classmethod
    def identity(cls, order: int) -> "PowerSeries":
        """The series of z itself."""
        c = np.zeros(order + 1, dtype=complex)
        if order >= 1:
            c[1] = 1.0
        return cls(c)

    # --- basic access ---

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient array c0..cN."""
        return self._c

    @property
    def order(self) -> int:
        return self._c.size - 1

    def __len__(self) -> int:
        return self._c.size

    def __getitem__(self, n: int) -> complex:
        return complex(self._c[n])

    def __repr__(self) -> str:
        head = np.array2string(self._c[: min(4, self._c.size)], precision=6)
        return f"PowerSeries(order={self.order}, coeffs={head}...)"

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self._c, order=order)

    def pad_to(self, order: int) -> "PowerSeries":
        return PowerSeries(self._c, order=order)

    # --- ring operations ---

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            return PowerSeries(self._c[: n + 1] + other._c[: n + 1])
        c = self._c.copy()
        c[0] = c[0] + other
        return PowerSeries(c)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-self._c)

    def __sub__(self, other):
        return self + (-other if isinstance(other, PowerSeries) else -complex(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            full = np.convolve(self._c[: n + 1], other._c[: n + 1])
            return PowerSeries(full[: n + 1])
        return PowerSeries(self._c * complex(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return _divide(self, other)
        return PowerSeries(self._c / complex(other))

    def __rtruediv__(self, other):
        num = PowerSeries.constant(complex(other), self.order)
        return _divide(num, self)

    def __pow__(self, exponent):
        return self.power(exponent)

    # --- analytic operations ---

    def power(self, exponent: float) -> "PowerSeries":
        """p**a for real a, by the Euler coefficient recursion; needs c0 = 1."""
        _require_constant_one(self._c)
        n = self.order
        p = self._c
        u = np.zeros(n + 1, dtype=complex)
        u[0] = 1.0
        a = float(exponent)
        for m in range(1, n + 1):
            j = np.arange(1, m + 1)
            w = (a * j - (m - j)) * p[1 : m + 1]
            u[m] = np.dot(w, u[m - 1 :: -1][: m]) / m
        return PowerSeries(u)

    def sqrt(self) -> "PowerSeries":
        """Square root with value 1 at the origin; needs c0 = 1."""
        _require_constant_one(self._c)
        n = self.order
        s = np.zeros(n + 1, dtype=complex)
        s[0] = 1.0
        for m in range(1, n + 1):
            acc = np.dot(s[1:m], s[m - 1 : 0 : -1]) if m > 1 else 0.0
            s[m] = (self._c[m] - acc) / 2.0
        return PowerSeries(s)

    def log(self) -> "PowerSeries":
        """Logarithm vanishing at the origin; needs c0 = 1."""
        _require_constant_one(self._c)
        d = _divide(self.zderiv(), self)
        out = np.zeros(self.order + 1, dtype=complex)
        ns = np.arange(1, self.order + 1)
        out[1:] = d._c[1:] / ns
        return PowerSeries(out)

    def exp(self) -> "PowerSeries":
        """Exponential; needs c0 = 0."""
        if abs(self._c[0]) > DEFAULTS.coeff_tol:
            raise ConstantTermNotZero(f"constant term is {self._c[0]!r}, expected 0")
        n = self.order
        e = np.zeros(n + 1, dtype=complex)
        e[0] = 1.0
        zp = self._c * np.arange(n + 1)  # coefficients of z p'
        for m in range(1, n + 1):
            e[m] = np.dot(zp[1 : m + 1], e[m - 1 :: -1][: m]) / m
        return PowerSeries(e)

    def zderiv(self) -> "PowerSeries":
        """The operator z d/dz: c_n -> n c_n."""
        return PowerSeries(self._c * np.arange(self._c.size))

    def integrate0(self) -> "PowerSeries":
        """Antiderivative vanishing at 0, truncated back to the same order."""
        out = np.zeros(self._c.size, dtype=complex)
        ns = np.arange(1, self._c.size)
        out[1:] = self._c[:-1] / ns
        return PowerSeries(out)

    def div_z(self) -> "PowerSeries":
        """Divide by z (shift down); needs c0 = 0."""
        if abs(self._c[0]) > DEFAULTS.coeff_tol:
            raise ConstantTermNotZero(f"constant term is {self._c[0]!r}, expected 0")
        out = np.zeros(self._c.size, dtype=complex)
        out[:-1] = self._c[1:]
        return PowerSeries(out)

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """p(inner(z)) truncated at the smaller order; inner must vanish at 0."""
        if abs(inner._c[0]) > DEFAULTS.coeff_tol:
            raise InnerConstantTermNotZero(
                f"inner constant term is {inner._c[0]!r}, expected 0"
            )
        n = min(self.order, inner.order)
        w = inner._c[: n + 1]
        # outer coefficients beyond order n cannot influence the truncation
        # because inner has no constant term
        acc = np.zeros(n + 1, dtype=complex)
        acc[0] = self._c[n]
        for k in range(n - 1, -1, -1):
            acc = np.convolve(acc, w)[: n + 1]
            acc[0] += self._c[k]
        return PowerSeries(acc)

    def eval(self, z):
        """Horner evaluation at a complex point or ndarray of points."""
        return npoly.polyval(z, self._c)

    __call__ = eval

    def tail_bound(self, radius: float) -> float:
        """Crude geometric tail certificate |c_N| r^N / (1 - r)."""
        if radius >= 1.0:
            return float("inf")
        return float(abs(self._c[-1]) * radius ** self.order / (1.0 - radius))

    def max_abs_coeff(self) -> float:
        return float(np.max(np.abs(self._c)))


def _require_constant_one(c: np.ndarray) -> None:
    if abs(c[0] - 1.0) > DEFAULTS.coeff_tol:
        raise ConstantTermNotOne(f"constant term is {c[0]!r}, expected 1")


def _divide(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    if abs(b._c[0]) < _DIV_PIVOT_TOL:
        raise DivisionByZeroConstantTerm(
            f"denominator constant term {b._c[0]!r} below {_DIV_PIVOT_TOL}"
        )
    n = min(a.order, b.order)
    bc = b._c[: n + 1]
    out = np.zeros(n + 1, dtype=complex)
    out[0] = a._c[0] / bc[0]
    for m in range(1, n + 1):
        acc = np.dot(out[:m], bc[m:0:-1])
        out[m] = (a._c[m] - acc) / bc[0]
    return PowerSeries(out)
