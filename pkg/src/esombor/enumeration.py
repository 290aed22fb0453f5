"""Exhaustive generation of non-isomorphic chemical trees.

Primary strategy: level-wise leaf augmentation. Every tree on n vertices
arises from a tree on n-1 vertices by attaching a leaf, so growing from the
single vertex and deduplicating by canonical code per level yields exactly
one representative per isomorphism class. Attachment points are restricted
to one vertex per automorphism orbit (vertices with equal whole-tree rooted
codes are equivalent), which keeps the duplicate rate low.

The oracle route is an independent cross-check: exhaustive Prüfer-sequence
decoding for small n, and degree-filtered free-tree generation (networkx's
Wright/Richmond/Odlyzko/McKay generator) above that, where the sequence
space is astronomically large.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from .errors import OrderTooLargeError, ResourceLimitError
from .trees import ChemTree, canonical_code, rooted_code, tree_from_edge_list

ORACLE_MAX_ORDER = 12
PRUFER_MAX_ORDER = 8


@dataclass(frozen=True)
class EnumerationConfig:
    n: int
    max_degree: int = 4
    mode: str = "canonical"  # "canonical" | "oracle"
    max_classes: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"order must be >= 1, got {self.n}")
        if self.max_degree < 1:
            raise ValueError(f"max_degree must be >= 1, got {self.max_degree}")
        if self.mode not in ("canonical", "oracle"):
            raise ValueError(f"unknown mode {self.mode!r}")


def _orbit_representatives(t: ChemTree) -> List[int]:
    """One vertex per automorphism orbit (equal rooted codes <=> same orbit)."""
    reps: Dict[bytes, int] = {}
    for v in range(t.order):
        code = rooted_code(t, v)
        if code not in reps:
            reps[code] = v
    return list(reps.values())


@lru_cache(maxsize=8)
def _classes(n: int, max_degree: int) -> Tuple[ChemTree, ...]:
    """All isomorphism classes of trees of order n with bounded degree,
    sorted by canonical code."""
    if n == 1:
        return (tree_from_edge_list(1, [], max_degree=max_degree),)
    level: Dict[bytes, ChemTree] = {}
    for t in _classes(n - 1, max_degree):
        for v in _orbit_representatives(t):
            if t.degrees[v] >= max_degree:
                continue
            t2 = tree_from_edge_list(
                n, list(t.edges) + [(v, n - 1)], max_degree=max_degree)
            level.setdefault(canonical_code(t2), t2)
    return tuple(level[c] for c in sorted(level))


def enumerate_chemical_trees(cfg: EnumerationConfig) -> Iterator[ChemTree]:
    """Yield one representative per isomorphism class, sorted by canonical code."""
    if cfg.mode == "oracle":
        source = enumerate_oracle(cfg.n, max_degree=cfg.max_degree)
    else:
        source = iter(_classes(cfg.n, cfg.max_degree))
    for i, t in enumerate(source, start=1):
        if cfg.max_classes is not None and i > cfg.max_classes:
            raise ResourceLimitError(
                f"class count exceeded configured cap {cfg.max_classes}")
        yield t


def count_chemical_trees(n: int, max_degree: int = 4) -> int:
    """Number of isomorphism classes of chemical trees of order n."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    return len(_classes(n, max_degree))


def _prufer_decode(n: int, seq: Tuple[int, ...]) -> List[Tuple[int, int]]:
    import heapq

    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def enumerate_oracle(n: int, max_degree: int = 4) -> Iterator[ChemTree]:
    """Independent enumeration used to cross-check the canonical generator.

    For n <= 8: decode every (n-2)-length Prüfer sequence, filter by degree,
    deduplicate by canonical code. For 9 <= n <= 12 the full sequence space
    is out of reach (12^10 sequences), so all free trees are generated with
    networkx's WROM algorithm and degree-filtered instead.
    """
    if n > ORACLE_MAX_ORDER:
        raise OrderTooLargeError(
            f"oracle supports n <= {ORACLE_MAX_ORDER}, got {n}")
    if n <= PRUFER_MAX_ORDER:
        yield from _oracle_prufer(n, max_degree)
    else:
        yield from _oracle_free_trees(n, max_degree)


def _oracle_prufer(n: int, max_degree: int) -> Iterator[ChemTree]:
    if n == 1:
        yield tree_from_edge_list(1, [])
        return
    if n == 2:
        yield tree_from_edge_list(2, [(0, 1)])
        return
    seen: Dict[bytes, ChemTree] = {}
    for seq in itertools.product(range(n), repeat=n - 2):
        # degree of a vertex = multiplicity in the sequence + 1
        if any(seq.count(v) > max_degree - 1 for v in set(seq)):
            continue
        t = tree_from_edge_list(n, _prufer_decode(n, seq), max_degree=max_degree)
        code = canonical_code(t)
        if code not in seen:
            seen[code] = t
    for code in sorted(seen):
        yield seen[code]


def _oracle_free_trees(n: int, max_degree: int) -> Iterator[ChemTree]:
    import networkx as nx

    seen: Dict[bytes, ChemTree] = {}
    for g in nx.nonisomorphic_trees(n):
        if max(dict(g.degree).values()) > max_degree:
            continue
        t = tree_from_edge_list(n, list(g.edges), max_degree=max_degree)
        seen.setdefault(canonical_code(t), t)
    for code in sorted(seen):
        yield seen[code]
