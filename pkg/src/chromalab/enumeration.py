"""Exhaustive enumeration of small labeled graphs.

A graph of order n is encoded by a bitmask over the C(n, 2) vertex pairs
in lexicographic order; mask bit i corresponds to ``vertex_pairs(n)[i]``.
Enumeration order (ascending order, then ascending mask) is deterministic.
"""

from __future__ import annotations

from typing import Iterator

from .graphs import Edge, Graph, bipartition


def vertex_pairs(n: int) -> tuple[Edge, ...]:
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def num_labeled_graphs(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = vertex_pairs(n)
    return Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, in ascending mask order."""
    pairs = vertex_pairs(n)
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    adj = g.adjacency_masks
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.order) - 1


def connected_bipartite_graphs(max_order: int) -> Iterator[Graph]:
    """All connected bipartite labeled graphs with at least one edge, order <= max_order."""
    for n in range(2, max_order + 1):
        for g in all_labeled_graphs(n):
            if g.edges and is_connected(g) and bipartition(g) is not None:
                yield g
