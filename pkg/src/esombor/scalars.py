"""Certified enclosure arithmetic for the transcendental values e^sqrt(k).

Every real quantity with a transcendental component is carried as a
:class:`Scalar`: an interval [lo, hi] guaranteed to contain the true value,
viewed as midpoint +/- radius. Arithmetic rounds outward (mpmath's interval
context), so strict comparisons between disjoint enclosures are certified.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from fractions import Fraction

import mpmath
from mpmath import iv, mp

DEFAULT_PRECISION = int(os.environ.get("ESOMBOR_PRECISION", "50"))

#: Escalation ladder for strict comparisons that come back undecided.
PRECISION_LADDER = (30, 50, 100, 200)


@contextmanager
def _iv_dps(p: int):
    old = iv.dps
    iv.dps = p
    try:
        yield
    finally:
        iv.dps = old


class Scalar:
    """Interval enclosure of a real number at a working decimal precision."""

    __slots__ = ("_ival", "precision")

    def __init__(self, ival, precision: int):
        self._ival = ival
        self.precision = precision

    # -- constructors -------------------------------------------------------

    @classmethod
    def exact(cls, value: int | Fraction, p: int = DEFAULT_PRECISION) -> "Scalar":
        if isinstance(value, Fraction):
            with _iv_dps(p):
                return cls(iv.mpf(value.numerator) / iv.mpf(value.denominator), p)
        with _iv_dps(p):
            return cls(iv.mpf(value), p)

    @classmethod
    def exp_sqrt(cls, k: int, p: int = DEFAULT_PRECISION) -> "Scalar":
        """Enclosure of e^sqrt(k) for a non-negative integer k."""
        if k < 0:
            raise ValueError("exp_sqrt argument must be non-negative")
        with _iv_dps(p):
            if k == 0:
                return cls(iv.mpf(1), p)
            return cls(iv.exp(iv.sqrt(iv.mpf(k))), p)

    @classmethod
    def sqrt_int(cls, k: int, p: int = DEFAULT_PRECISION) -> "Scalar":
        """Enclosure of sqrt(k) for a non-negative integer k."""
        if k < 0:
            raise ValueError("sqrt_int argument must be non-negative")
        with _iv_dps(p):
            return cls(iv.sqrt(iv.mpf(k)), p)

    # -- views --------------------------------------------------------------

    @property
    def lo(self) -> mpmath.mpf:
        return mp.make_mpf(self._ival._mpi_[0])

    @property
    def hi(self) -> mpmath.mpf:
        return mp.make_mpf(self._ival._mpi_[1])

    @property
    def midpoint(self) -> mpmath.mpf:
        with mp.workdps(self.precision + 10):
            return (self.lo + self.hi) / 2

    @property
    def radius(self) -> mpmath.mpf:
        with mp.workdps(self.precision + 10):
            return (self.hi - self.lo) / 2

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other, p: int):
        if isinstance(other, Scalar):
            return other._ival
        if isinstance(other, Fraction):
            return iv.mpf(other.numerator) / iv.mpf(other.denominator)
        if isinstance(other, int):
            return iv.mpf(other)
        return NotImplemented

    def _binop(self, other, op):
        p = max(self.precision,
                other.precision if isinstance(other, Scalar) else 0)
        with _iv_dps(p):
            rhs = self._coerce(other, p)
            if rhs is NotImplemented:
                return NotImplemented
            return Scalar(op(self._ival, rhs), p)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self):
        with _iv_dps(self.precision):
            return Scalar(-self._ival, self.precision)

    # -- certified comparisons ---------------------------------------------

    def certainly_lt(self, other: "Scalar | int") -> bool:
        o = other if isinstance(other, Scalar) else Scalar.exact(other, self.precision)
        return bool(self.hi < o.lo)

    def certainly_gt(self, other: "Scalar | int") -> bool:
        o = other if isinstance(other, Scalar) else Scalar.exact(other, self.precision)
        return bool(self.lo > o.hi)

    def certainly_positive(self) -> bool:
        return bool(self.lo > 0)

    def certainly_negative(self) -> bool:
        return bool(self.hi < 0)

    def intersects(self, other: "Scalar") -> bool:
        return not (self.certainly_lt(other) or self.certainly_gt(other))

    def contains(self, other: "Scalar") -> bool:
        """True when other's interval lies inside this one."""
        return bool(self.lo <= other.lo and other.hi <= self.hi)

    # -- formatting ---------------------------------------------------------

    def midpoint_str(self, digits: int | None = None) -> str:
        return mpmath.nstr(self.midpoint, digits or self.precision)

    def radius_str(self) -> str:
        return mpmath.nstr(self.radius, 5)

    def to_json(self) -> dict:
        return {"midpoint": self.midpoint_str(), "radius": self.radius_str()}

    def __float__(self) -> float:
        return float(self.midpoint)

    def __repr__(self) -> str:
        return f"Scalar({self.midpoint_str(12)} ± {self.radius_str()}, p={self.precision})"


def agreement_digits(a: Scalar, b: Scalar) -> int:
    """Number of significant decimal digits on which two midpoints agree."""
    with mp.workdps(max(a.precision, b.precision) + 10):
        x, y = a.midpoint, b.midpoint
        diff = abs(x - y)
        scale = max(abs(x), abs(y))
        if scale == 0 or diff == 0:
            return max(a.precision, b.precision)
        return int(mpmath.floor(mpmath.log10(scale / diff)))
