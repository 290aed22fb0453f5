"""Extremal-tree constructors, closed-form maxima, and equality conditions.

The maximal trees split by n mod 3. The constructor builds one canonical
caterpillar representative per residue class (the characterization is by
degree/edge-type counts, so maximizers are not unique in general):

  r2 (n = 3k+2): a path of k degree-4 vertices filled with leaves.
  r1 (n = 3k+4): same skeleton plus one degree-3 vertex, adjacent to a
                 degree-4 vertex and carrying two leaves (m13=2, m34=1).
  r0 (n = 3k+3): same skeleton plus a pendant path leaf-deg2 hanging off a
                 degree-4 vertex (m12=m24=1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

from .errors import OrderTooSmallError
from .indices import exp_reduced_sombor, f
from .scalars import DEFAULT_PRECISION, Scalar
from .trees import ChemTree, degree_counts, edge_type_counts, tree_from_edge_list


def residue_class(n: int) -> str:
    """'r0' | 'r1' | 'r2' according to n mod 3."""
    return f"r{n % 3}"


def _require_order(n: int) -> None:
    if n < 5:
        raise OrderTooSmallError(f"supported orders start at 5, got {n}")


def construct_extremal(n: int) -> ChemTree:
    """A chemical tree attaining the maximum index for its residue class."""
    _require_order(n)
    r = n % 3
    k = {2: (n - 2) // 3, 1: (n - 4) // 3, 0: (n - 3) // 3}[r]
    edges = [(i, i + 1) for i in range(k - 1)]
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    nxt = k

    def attach(v: int) -> int:
        nonlocal nxt
        w = nxt
        nxt += 1
        edges.append((v, w))
        deg[v] += 1
        deg[w] += 1
        return w

    if r == 1:
        w = attach(0)  # will end with degree 3
        attach(w)
        attach(w)
    elif r == 0:
        u = attach(0)  # will end with degree 2
        attach(u)
    for v in range(k):
        while deg[v] < 4:
            attach(v)
    assert nxt == n
    return tree_from_edge_list(n, edges)


def theorem_bound(n: int, p: int = DEFAULT_PRECISION) -> Scalar:
    """The proven residue-class maximum of the exponential index."""
    _require_order(n)
    r = n % 3
    f14, f44 = f(1, 4, p), f(4, 4, p)
    if r == 2:
        return Fraction(2 * n + 2, 3) * f14 + Fraction(n - 5, 3) * f44
    if r == 1:
        return (2 * f(1, 3, p) + f(3, 4, p)
                + Fraction(2 * n - 5, 3) * f14 + Fraction(n - 7, 3) * f44)
    return (f(1, 2, p) + f(2, 4, p)
            + Fraction(2 * n - 3, 3) * f14 + Fraction(n - 6, 3) * f44)


def conjecture_bound(n: int, p: int = DEFAULT_PRECISION) -> Scalar:
    """The conjectured residue-class bound, evaluated verbatim.

    The r1 branch coefficient (n-13)/3 and the r0 branch coefficient (n-9)/3
    go negative at small orders; the formula is still evaluated as written,
    since refutation must compare against the conjecture exactly as stated.
    """
    _require_order(n)
    r = n % 3
    f14, f44 = f(1, 4, p), f(4, 4, p)
    if r == 2:
        return Fraction(2 * n + 2, 3) * f14 + Fraction(n - 5, 3) * f44
    if r == 1:
        return (Fraction(2 * n + 1, 3) * f14 + Fraction(n - 13, 3) * f44
                + 3 * f(3, 4, p))
    return (Fraction(n, 3) * f14 + Fraction(n - 9, 3) * f44
            + 2 * f(2, 4, p))


@dataclass(frozen=True)
class EqualityCheck:
    """Per-condition booleans for the residue class of t, plus the conjunction."""

    residue: str
    conditions: Dict[str, bool]

    @property
    def satisfied(self) -> bool:
        return all(self.conditions.values())


def equality_conditions(t: ChemTree) -> EqualityCheck:
    """Does t satisfy the exact characterization of the maximizers?"""
    _require_order(t.order)
    dc = degree_counts(t)
    et = edge_type_counts(t)
    r = t.order % 3
    if r == 2:
        conds = {"n2=0": dc.n2 == 0, "n3=0": dc.n3 == 0}
    elif r == 1:
        conds = {"n2=0": dc.n2 == 0, "n3=1": dc.n3 == 1,
                 "m13=2": et.m13 == 2, "m34=1": et.m34 == 1}
    else:
        conds = {"n2=1": dc.n2 == 1, "n3=0": dc.n3 == 0,
                 "m12=1": et.m12 == 1, "m24=1": et.m24 == 1}
    return EqualityCheck(residue=residue_class(t.order), conditions=conds)


@dataclass(frozen=True)
class ExtremalCertificate:
    tree: ChemTree
    residue: str
    conditions: Dict[str, bool]
    value: Scalar
    bound: Scalar


def extremal_certificate(n: int, p: int = DEFAULT_PRECISION) -> ExtremalCertificate:
    """Construct the extremal tree and certify value-vs-bound agreement."""
    t = construct_extremal(n)
    check = equality_conditions(t)
    value = exp_reduced_sombor(t, p)
    bound = theorem_bound(n, p)
    cert = ExtremalCertificate(tree=t, residue=check.residue,
                               conditions=check.conditions,
                               value=value, bound=bound)
    assert check.satisfied
    assert value.intersects(bound)
    return cert
