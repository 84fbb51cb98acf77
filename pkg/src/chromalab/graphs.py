"""Immutable simple undirected graphs and their structural operators.

Vertices are dense 0-based indices ``0..order-1``.  Edges are unordered
pairs stored canonically as ``(u, v)`` with ``u < v``, in lexicographic
order.  Graphs are values: hashable, compared by labeled equality, and
safe to share across concurrent tasks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import DomainError, EdgeListFormatError

Edge = tuple[int, int]


def _canonical_edges(order: int, edges: Iterable) -> tuple[Edge, ...]:
    seen: set[Edge] = set()
    for item in edges:
        try:
            u, v = item
        except (TypeError, ValueError):
            raise DomainError(f"edge {item!r} is not a pair of vertices") from None
        if not isinstance(u, int) or not isinstance(v, int):
            raise DomainError(f"edge {item!r} has non-integer endpoints")
        if u == v:
            raise DomainError(f"self-loop at vertex {u} is not allowed")
        if u > v:
            u, v = v, u
        if u < 0 or v >= order:
            raise DomainError(f"edge ({u}, {v}) out of range for order {order}")
        seen.add((u, v))
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..order-1``.

    The constructor accepts any iterable of vertex pairs and normalizes
    them (orientation, duplicates, ordering); invalid edges raise
    :class:`DomainError`.
    """

    order: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 0:
            raise DomainError(f"graph order must be a non-negative integer, got {self.order!r}")
        object.__setattr__(self, "edges", _canonical_edges(self.order, self.edges))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor sets as bitmasks (bit u set iff u adjacent)."""
        masks = [0] * self.order
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def neighbor_lists(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adjacency_masks)


@dataclass(frozen=True)
class Bipartition:
    """A two-sided vertex partition; side 0 is X, side 1 is Y."""

    side_of: tuple[int, ...]

    @property
    def x_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side_of) if s == 0)

    @property
    def y_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.side_of) if s == 1)

    @property
    def sizes(self) -> tuple[int, int]:
        x = sum(1 for s in self.side_of if s == 0)
        return x, len(self.side_of) - x


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    present = g._edge_set
    edges = [(u, v) for u in range(g.order) for v in range(u + 1, g.order)
             if (u, v) not in present]
    return Graph(g.order, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint copies of g and h plus every edge between the two sides.

    Vertices of g keep their labels; vertices of h are shifted by ``g.order``.
    """
    shift = g.order
    edges = list(g.edges)
    edges += [(u + shift, v + shift) for u, v in h.edges]
    edges += [(u, v + shift) for u in range(g.order) for v in range(h.order)]
    return Graph(g.order + h.order, edges)


def disjoint_union(gs: Iterable[Graph]) -> Graph:
    """Vertex-relabeled union with no cross edges; empty input gives the order-0 graph."""
    edges: list[Edge] = []
    shift = 0
    for g in gs:
        edges += [(u + shift, v + shift) for u, v in g.edges]
        shift += g.order
    return Graph(shift, edges)


def max_degree(g: Graph) -> int:
    """Maximum vertex degree; 0 for edgeless graphs (including order 0)."""
    return max(g.degrees, default=0)


def bipartition(g: Graph) -> Bipartition | None:
    """Two-color g by BFS if possible, else None.

    Deterministic: the lowest-index vertex of each component goes to X.
    """
    side = [-1] * g.order
    nbrs = g.neighbor_lists
    for root in range(g.order):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in nbrs[v]:
                if side[u] == -1:
                    side[u] = 1 - side[v]
                    queue.append(u)
                elif side[u] == side[v]:
                    return None
    return Bipartition(tuple(side))


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list interchange format.

    Line 1 is ``<order> <edge_count>``; each following line is ``u v``.
    Lines starting with ``#`` and blank lines are ignored.  Reversed pairs
    are normalized; self-loops, duplicates, out-of-range endpoints and
    count mismatches raise :class:`EdgeListFormatError` with a line number.
    """
    order = -1
    expected = -1
    edges: list[Edge] = []
    seen: set[Edge] = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListFormatError(lineno, f"expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListFormatError(lineno, f"expected two integers, got {line!r}") from None
        if order < 0:
            if a < 0 or b < 0:
                raise EdgeListFormatError(lineno, "order and edge count must be non-negative")
            order, expected = a, b
            continue
        if len(edges) == expected:
            raise EdgeListFormatError(lineno, f"more edges than the header's {expected}")
        if a == b:
            raise EdgeListFormatError(lineno, f"self-loop at vertex {a}")
        u, v = (a, b) if a < b else (b, a)
        if u < 0 or v >= order:
            raise EdgeListFormatError(lineno, f"edge ({a}, {b}) out of range for order {order}")
        if (u, v) in seen:
            raise EdgeListFormatError(lineno, f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    if order < 0:
        raise EdgeListFormatError(last_line or 1, "missing '<order> <edge_count>' header")
    if len(edges) != expected:
        raise EdgeListFormatError(last_line or 1,
                                  f"header promises {expected} edges, input ends after {len(edges)}")
    return Graph(order, edges)


def format_edge_list(g: Graph) -> str:
    """Serialize g in the edge-list interchange format (bit-exact)."""
    lines = [f"{g.order} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))
