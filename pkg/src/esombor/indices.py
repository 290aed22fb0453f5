"""Reduced Sombor index, its exponential variant, and the M-coefficient table.

The per-edge contribution depends only on the endpoint degrees, so both
indices are evaluated from the edge-type counts m_ij against a cached table
of enclosures of e^sqrt(k). The decomposed form rewrites the exponential
index as a base term in f(1,4), f(4,4) plus penalty terms M_ij * m_ij; it
must agree with direct summation on every tree of order >= 5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from .errors import OrderTooSmallError
from .scalars import DEFAULT_PRECISION, Scalar
from .trees import EDGE_TYPES, ChemTree, edge_type_counts

#: M_ij = f(i,j) + c14 * f(1,4) + c44 * f(4,4), as exact fractions.
_M_DEFS: Dict[str, Tuple[Tuple[int, int], Fraction, Fraction]] = {
    "M12": ((1, 2), Fraction(-4, 3), Fraction(1, 3)),
    "M13": ((1, 3), Fraction(-10, 9), Fraction(1, 9)),
    "M22": ((2, 2), Fraction(-2, 3), Fraction(-1, 3)),
    "M23": ((2, 3), Fraction(-4, 9), Fraction(-5, 9)),
    "M24": ((2, 4), Fraction(-1, 3), Fraction(-2, 3)),
    "M33": ((3, 3), Fraction(-2, 9), Fraction(-7, 9)),
    "M34": ((3, 4), Fraction(-1, 9), Fraction(-8, 9)),
}


def _radicand(x: int, y: int) -> int:
    return (x - 1) ** 2 + (y - 1) ** 2


@lru_cache(maxsize=None)
def f(x: int, y: int, p: int = DEFAULT_PRECISION) -> Scalar:
    """Enclosure of e^sqrt((x-1)^2 + (y-1)^2) for degrees x, y in 1..4."""
    if not (1 <= x <= 4 and 1 <= y <= 4):
        raise ValueError(f"degrees must be in 1..4, got ({x}, {y})")
    return Scalar.exp_sqrt(_radicand(x, y), p)


def f_float(x: int, y: int) -> float:
    """Double-precision fast path; only used to pre-select candidates."""
    return math.exp(math.sqrt(_radicand(x, y)))


@dataclass(frozen=True)
class CoefficientTable:
    M12: Scalar
    M13: Scalar
    M22: Scalar
    M23: Scalar
    M24: Scalar
    M33: Scalar
    M34: Scalar
    f14: Scalar
    f44: Scalar
    precision: int

    def get(self, name: str) -> Scalar:
        return getattr(self, name)

    def names(self) -> Tuple[str, ...]:
        return tuple(_M_DEFS)


@lru_cache(maxsize=None)
def coefficient_table(p: int = DEFAULT_PRECISION) -> CoefficientTable:
    """The seven M-coefficients (all strictly negative) at precision p."""
    f14, f44 = f(1, 4, p), f(4, 4, p)
    coeffs = {}
    for name, ((x, y), c14, c44) in _M_DEFS.items():
        coeffs[name] = f(x, y, p) + c14 * f14 + c44 * f44
    return CoefficientTable(precision=p, f14=f14, f44=f44, **coeffs)


def reduced_sombor(t: ChemTree, p: int = DEFAULT_PRECISION) -> Scalar:
    """Sum over edges of sqrt((d(u)-1)^2 + (d(v)-1)^2)."""
    et = edge_type_counts(t)
    total = Scalar.exact(0, p)
    for (i, j) in EDGE_TYPES:
        m = et.get(i, j)
        if m:
            total = total + m * Scalar.sqrt_int(_radicand(i, j), p)
    return total


def exp_reduced_sombor(t: ChemTree, p: int = DEFAULT_PRECISION) -> Scalar:
    """Sum over edges of e^sqrt((d(u)-1)^2 + (d(v)-1)^2)."""
    return exp_reduced_sombor_from_counts(edge_type_counts(t), p)


def exp_reduced_sombor_from_counts(et, p: int = DEFAULT_PRECISION) -> Scalar:
    total = Scalar.exact(0, p)
    for (i, j) in EDGE_TYPES:
        m = et.get(i, j)
        if m:
            total = total + m * f(i, j, p)
    return total


def exp_reduced_sombor_float(et) -> float:
    """Fast-path double evaluation from edge-type counts."""
    return sum(et.get(i, j) * f_float(i, j) for (i, j) in EDGE_TYPES if et.get(i, j))


def exp_reduced_sombor_decomposed(t: ChemTree, p: int = DEFAULT_PRECISION) -> Scalar:
    """Evaluate the M-coefficient decomposition (valid for n >= 5).

    value = (2n+2)/3 * f(1,4) + (n-5)/3 * f(4,4) + sum M_ij * m_ij
    over the seven penalized edge types. The enclosure must intersect the
    directly summed value (asserted).
    """
    n = t.order
    if n < 5:
        raise OrderTooSmallError(f"decomposition requires n >= 5, got {n}")
    table = coefficient_table(p)
    et = edge_type_counts(t)
    total = (Fraction(2 * n + 2, 3) * table.f14
             + Fraction(n - 5, 3) * table.f44)
    for name, ((x, y), _, _) in _M_DEFS.items():
        m = et.get(x, y)
        if m:
            total = total + m * table.get(name)
    assert total.intersects(exp_reduced_sombor(t, p))
    return total


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of the exact-rational m14/m44 structural identities."""

    m14_ok: bool
    m44_ok: bool

    @property
    def all_ok(self) -> bool:
        return self.m14_ok and self.m44_ok


def check_structural_identities(t: ChemTree) -> IdentityReport:
    """Verify the two Gutman-Miljković edge-count relations exactly.

    m14 = (2n+2)/3 - 4/3 m12 - 10/9 m13 - 2/3 m22 - 4/9 m23
          - 1/3 m24 - 2/9 m33 - 1/9 m34
    m44 = (n-5)/3 + 1/3 m12 + 1/9 m13 - 1/3 m22 - 5/9 m23
          - 2/3 m24 - 7/9 m33 - 8/9 m34
    """
    n = t.order
    if n < 5:
        raise OrderTooSmallError(f"identities require n >= 5, got {n}")
    et = edge_type_counts(t)
    m14 = (Fraction(2 * n + 2, 3)
           - Fraction(4, 3) * et.m12 - Fraction(10, 9) * et.m13
           - Fraction(2, 3) * et.m22 - Fraction(4, 9) * et.m23
           - Fraction(1, 3) * et.m24 - Fraction(2, 9) * et.m33
           - Fraction(1, 9) * et.m34)
    m44 = (Fraction(n - 5, 3)
           + Fraction(1, 3) * et.m12 + Fraction(1, 9) * et.m13
           - Fraction(1, 3) * et.m22 - Fraction(5, 9) * et.m23
           - Fraction(2, 3) * et.m24 - Fraction(7, 9) * et.m33
           - Fraction(8, 9) * et.m34)
    return IdentityReport(m14_ok=(m14 == et.m14), m44_ok=(m44 == et.m44))
