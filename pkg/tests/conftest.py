import random

import pytest
from mpmath import mp

from esombor.trees import tree_from_edge_list


def mp_f(x, y, dps=60):
    """Independent (non-interval) oracle for e^sqrt((x-1)^2+(y-1)^2)."""
    with mp.workdps(dps):
        return mp.exp(mp.sqrt((x - 1) ** 2 + (y - 1) ** 2))


def prufer_decode(n, seq):
    """Reference Prüfer decoding, kept separate from the package's copy."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    edges = []
    for x in seq:
        leaf = leaves.pop(0)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            import bisect
            bisect.insort(leaves, x)
    edges.append((leaves[0], leaves[1]))
    return edges


def random_labeled_tree(rng: random.Random, n: int, max_degree=None):
    """Uniform labeled tree via a random Prüfer sequence."""
    if n == 1:
        return tree_from_edge_list(1, [], max_degree=max_degree or n)
    if n == 2:
        return tree_from_edge_list(2, [(0, 1)], max_degree=max_degree or n)
    while True:
        seq = [rng.randrange(n) for _ in range(n - 2)]
        if max_degree is not None and any(
                seq.count(v) + 1 > max_degree for v in set(seq)):
            continue
        return tree_from_edge_list(n, prufer_decode(n, seq),
                                   max_degree=max_degree or n)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


@pytest.fixture
def p5():
    return tree_from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 4)])


@pytest.fixture
def k14():
    return tree_from_edge_list(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
