"""Chemical tree representation, degree/edge statistics, canonical codes, serialization.

A chemical tree is a tree in which every vertex has degree at most 4.
Vertices are labeled 0..n-1; edges are stored as sorted (min, max) pairs so
that iteration order is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from .errors import (
    BadLabelError,
    DegreeBoundError,
    DuplicateEdgeError,
    NotATreeError,
    ParseError,
    UnsupportedFormatError,
)

MAX_CHEMICAL_DEGREE = 4

#: The ten unordered degree pairs (i, j), 1 <= i <= j <= 4, in table order.
EDGE_TYPES: Tuple[Tuple[int, int], ...] = (
    (1, 1), (1, 2), (1, 3), (1, 4),
    (2, 2), (2, 3), (2, 4),
    (3, 3), (3, 4),
    (4, 4),
)


@dataclass(frozen=True)
class DegreeCounts:
    """Counts (n1, n2, n3, n4) of vertices of degree 1..4."""

    n1: int
    n2: int
    n3: int
    n4: int

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.n1, self.n2, self.n3, self.n4)


@dataclass(frozen=True)
class EdgeTypeCounts:
    """Counts m_ij of edges joining a degree-i and a degree-j vertex."""

    m11: int
    m12: int
    m13: int
    m14: int
    m22: int
    m23: int
    m24: int
    m33: int
    m34: int
    m44: int

    def get(self, i: int, j: int) -> int:
        i, j = min(i, j), max(i, j)
        return getattr(self, f"m{i}{j}")

    def as_dict(self) -> dict:
        return {f"m{i}{j}": self.get(i, j) for i, j in EDGE_TYPES}


class ChemTree:
    """Immutable labeled tree with max degree <= 4 and cached degrees.

    Construct through :func:`tree_from_edge_list`, which validates.
    """

    __slots__ = ("order", "edges", "degrees", "_code")

    def __init__(self, order: int, edges: Tuple[Tuple[int, int], ...],
                 degrees: Tuple[int, ...]):
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "degrees", degrees)
        object.__setattr__(self, "_code", None)

    def __setattr__(self, name, value):
        raise AttributeError("ChemTree is immutable")

    def adjacency(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def __eq__(self, other) -> bool:
        return (isinstance(other, ChemTree)
                and self.order == other.order and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.order, self.edges))

    def __repr__(self) -> str:
        return f"ChemTree(n={self.order}, edges={list(self.edges)})"


def tree_from_edge_list(n: int, edges: Iterable[Tuple[int, int]],
                        max_degree: int = MAX_CHEMICAL_DEGREE) -> ChemTree:
    """Validate and build a ChemTree from an edge list over labels 0..n-1."""
    if n < 1:
        raise NotATreeError(f"order must be >= 1, got {n}")
    norm = []
    seen = set()
    for u, v in edges:
        if not (0 <= u < n) or not (0 <= v < n):
            raise BadLabelError(f"edge ({u}, {v}) has a label outside 0..{n - 1}")
        if u == v:
            raise NotATreeError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdgeError(f"edge {e} appears twice")
        seen.add(e)
        norm.append(e)
    if len(norm) != n - 1:
        raise NotATreeError(f"a tree on {n} vertices needs {n - 1} edges, got {len(norm)}")

    degrees = [0] * n
    adj: List[List[int]] = [[] for _ in range(n)]
    for u, v in norm:
        degrees[u] += 1
        degrees[v] += 1
        adj[u].append(v)
        adj[v].append(u)
    for v, d in enumerate(degrees):
        if d > max_degree:
            raise DegreeBoundError(f"vertex {v} has degree {d} > {max_degree}")

    # n-1 edges + connected <=> tree
    stack = [0]
    visited = [False] * n
    visited[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not visited[w]:
                visited[w] = True
                count += 1
                stack.append(w)
    if count != n:
        raise NotATreeError("edge set is disconnected (so it contains a cycle)")

    return ChemTree(n, tuple(sorted(norm)), tuple(degrees))


def degree_counts(t: ChemTree) -> DegreeCounts:
    """Count vertices by degree; asserts the two degree-sum identities."""
    c = [0] * 5
    for d in t.degrees:
        c[d] += 1
    dc = DegreeCounts(c[1], c[2], c[3], c[4])
    n = t.order
    if n >= 2:
        assert dc.n1 + dc.n2 + dc.n3 + dc.n4 == n
        assert dc.n1 + 2 * dc.n2 + 3 * dc.n3 + 4 * dc.n4 == 2 * (n - 1)
    return dc


def edge_type_counts(t: ChemTree) -> EdgeTypeCounts:
    """Count edges by their endpoint-degree pair; asserts the m/n identities."""
    m = {pair: 0 for pair in EDGE_TYPES}
    for u, v in t.edges:
        i, j = t.degrees[u], t.degrees[v]
        if i > j:
            i, j = j, i
        m[(i, j)] += 1
    et = EdgeTypeCounts(*(m[pair] for pair in EDGE_TYPES))

    dc = degree_counts(t)
    assert sum(m.values()) == t.order - 1
    if t.order >= 3:
        assert et.m11 == 0
        assert et.m12 + et.m13 + et.m14 == dc.n1
        assert et.m12 + 2 * et.m22 + et.m23 + et.m24 == 2 * dc.n2
        assert et.m13 + et.m23 + 2 * et.m33 + et.m34 == 3 * dc.n3
        assert et.m14 + et.m24 + et.m34 + 2 * et.m44 == 4 * dc.n4
    return et


# ---------------------------------------------------------------------------
# Canonical form (AHU encoding rooted at the centroid)
# ---------------------------------------------------------------------------

def _centroids(t: ChemTree) -> List[int]:
    """Centroid vertex (or the two of a bicentroidal tree)."""
    n = t.order
    if n == 1:
        return [0]
    adj = t.adjacency()
    size = [1] * n
    order: List[int] = []
    parent = [-1] * n
    stack = [0]
    visited = [False] * n
    visited[0] = True
    while stack:
        u = stack.pop()
        order.append(u)
        for w in adj[u]:
            if not visited[w]:
                visited[w] = True
                parent[w] = u
                stack.append(w)
    for u in reversed(order):
        if parent[u] >= 0:
            size[parent[u]] += size[u]
    best = n + 1
    out: List[int] = []
    for v in range(n):
        heaviest = n - size[v]
        for w in adj[v]:
            if w != parent[v]:
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best = heaviest
            out = [v]
        elif heaviest == best:
            out.append(v)
    return out


def _rooted_code(adj: Sequence[Sequence[int]], root: int) -> bytes:
    """AHU parenthesis code of the tree rooted at `root` (iterative)."""
    parent = [-2] * len(adj)
    parent[root] = -1
    out: dict = {}
    stack = [(root, False)]
    while stack:
        u, done = stack.pop()
        if done:
            kids = sorted(out[w] for w in adj[u] if w != parent[u])
            out[u] = b"(" + b"".join(kids) + b")"
        else:
            stack.append((u, True))
            for w in adj[u]:
                if parent[w] == -2:
                    parent[w] = u
                    stack.append((w, False))
    return out[root]


def rooted_code(t: ChemTree, root: int) -> bytes:
    """Canonical code of t rooted at a given vertex."""
    return _rooted_code(t.adjacency(), root)


def canonical_code(t: ChemTree) -> bytes:
    """Relabeling-invariant code: AHU encoding rooted at the centroid.

    For bicentroidal trees the lexicographically smaller of the two rooted
    codes is taken. Two trees get equal codes iff they are isomorphic.
    """
    if t._code is None:
        adj = t.adjacency()
        code = min(_rooted_code(adj, c) for c in _centroids(t))
        object.__setattr__(t, "_code", code)
    return t._code


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def serialize(t: ChemTree, format: str = "edge-list") -> bytes:
    """Serialize to the edge-list text format or header-free graph6."""
    if format == "edge-list":
        lines = [str(t.order)]
        lines.extend(f"{u} {v}" for u, v in t.edges)
        return ("\n".join(lines) + "\n").encode("ascii")
    if format == "graph6":
        return _to_graph6(t)
    raise UnsupportedFormatError(f"unknown format {format!r}")


def parse(data: bytes | str, format: str = "edge-list") -> ChemTree:
    """Inverse of :func:`serialize` (validates the result)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    if format == "edge-list":
        return _parse_edge_list(data)
    if format == "graph6":
        return _from_graph6(data)
    raise UnsupportedFormatError(f"unknown format {format!r}")


def _parse_edge_list(data: bytes) -> ChemTree:
    lines = [ln for ln in data.decode("ascii", errors="replace").splitlines()]
    if not lines:
        raise ParseError("empty input")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ParseError(f"bad order line {lines[0]!r}") from None
    edges = []
    for ln in lines[1:]:
        ln = ln.strip()
        if not ln:
            continue
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"bad edge line {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"bad edge line {ln!r}") from None
        edges.append((u, v))
    return tree_from_edge_list(n, edges)


def _g6_size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise UnsupportedFormatError(f"graph6 order {n} beyond supported limit 258047")


def _to_graph6(t: ChemTree) -> bytes:
    n = t.order
    adj = [[False] * n for _ in range(n)]
    for u, v in t.edges:
        adj[u][v] = adj[v][u] = True
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if adj[i][j] else 0)
    while len(bits) % 6:
        bits.append(0)
    out = bytearray(_g6_size_bytes(n))
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out)


def _from_graph6(data: bytes) -> ChemTree:
    s = data.strip()
    if s.startswith(b">>graph6<<"):
        s = s[len(b">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 input")
    if s[0] == 126:
        if len(s) < 4 or s[1] == 126:
            raise ParseError("unsupported or truncated graph6 size field")
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63)
        body = s[4:]
    else:
        n = s[0] - 63
        body = s[1:]
    if n < 1:
        raise ParseError(f"bad graph6 order {n}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ParseError(f"graph6 body length {len(body)}, expected {need}")
    bits: List[int] = []
    for ch in body:
        v = ch - 63
        if not (0 <= v < 64):
            raise ParseError(f"bad graph6 byte {ch}")
        bits.extend((v >> k) & 1 for k in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return tree_from_edge_list(n, edges)


def parse_edge_list_stream(data: bytes | str) -> Iterator[ChemTree]:
    """Parse a concatenation of edge-list records (as emitted by the CLI)."""
    if isinstance(data, bytes):
        data = data.decode("ascii")
    lines = [ln for ln in data.splitlines() if ln.strip()]
    pos = 0
    while pos < len(lines):
        try:
            n = int(lines[pos].strip())
        except ValueError:
            raise ParseError(f"bad order line {lines[pos]!r}") from None
        block = lines[pos:pos + n]
        pos += max(n, 1)
        yield _parse_edge_list(("\n".join(block) + "\n").encode("ascii"))
