"""Exact ground-truth solvers for chromatic number and chromatic index.

The vertex solver is a backtracking search in dynamic DSATUR order
(maximum saturation, ties by maximum degree, then lowest index), trying
colors in ascending order with symmetry breaking: a vertex may use at
most one color index beyond the maximum used so far.  All tie-breaking
is fixed, so returned witnesses are byte-stable across runs.

The chromatic index is computed as the chromatic number of the line
graph, with the maximum degree as starting lower bound; the line-graph
coloring is mapped back through the edge correspondence to an edge
coloring witness.

Searches are bounded by a node budget and raise
:class:`BudgetExceededError` rather than running unbounded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError, DomainError
from .graphs import Edge, Graph
from .linegraph import line_graph

#: Default node limit, sized so every instance in the test suite finishes
#: with a wide margin while still cutting off runaway inputs.
DEFAULT_NODE_BUDGET = 10_000_000


class SearchBudget:
    """Mutable node counter shared by the solver calls of one operation."""

    __slots__ = ("limit", "nodes")

    def __init__(self, limit: int = DEFAULT_NODE_BUDGET):
        if limit <= 0:
            raise DomainError(f"node budget must be positive, got {limit}")
        self.limit = limit
        self.nodes = 0

    def spend(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExceededError(
                f"solver budget exceeded: more than {self.limit} search nodes")


def _as_budget(budget: int | SearchBudget | None) -> SearchBudget:
    if budget is None:
        return SearchBudget()
    if isinstance(budget, SearchBudget):
        return budget
    return SearchBudget(budget)


@dataclass(frozen=True)
class VertexColoring:
    """A proper vertex coloring using contiguous color indices 0..num_colors-1."""

    color_of: tuple[int, ...]
    num_colors: int


@dataclass
class EdgeColoring:
    """A proper edge coloring; keys are canonical (u, v) edges with u < v."""

    color_of: dict[Edge, int]
    num_colors: int

    def assignment(self) -> list[tuple[int, int, int]]:
        """(u, v, color) triples in canonical edge order."""
        return [(u, v, self.color_of[(u, v)]) for u, v in sorted(self.color_of)]


def greedy_clique_lower_bound(g: Graph) -> int:
    """Size of a greedily grown clique; a sound lower bound for chromatic_number.

    Seeded at the maximum-degree vertex, extended by the highest-degree
    common neighbor, ties to the lowest index.  Returns 0 only for the
    order-0 graph.
    """
    n = g.order
    if n == 0:
        return 0
    deg = g.degrees
    adj = g.adjacency_masks
    start = max(range(n), key=lambda v: (deg[v], -v))
    size = 1
    common = adj[start]
    while common:
        best, best_deg = -1, -1
        m = common
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if deg[v] > best_deg:
                best, best_deg = v, deg[v]
        size += 1
        common &= adj[best]
    return size


def is_k_colorable(g: Graph, k: int,
                   budget: int | SearchBudget | None = None) -> VertexColoring | None:
    """Return a proper coloring of g with at most k colors, or None.

    The witness may use fewer than k colors; its color indices are
    contiguous and all used.  Absence is a value, not an error.
    """
    if k < 0:
        raise DomainError(f"color count must be >= 0, got {k}")
    n = g.order
    if n == 0:
        return VertexColoring((), 0)
    if k == 0:
        return None
    bud = _as_budget(budget)
    adj = g.adjacency_masks
    deg = g.degrees
    nbrs = g.neighbor_lists
    color_of = [-1] * n
    neigh_colors = [0] * n  # bitmask of colors already on colored neighbors

    def pick() -> int:
        best, best_sat, best_deg = -1, -1, -1
        for v in range(n):
            if color_of[v] < 0:
                s = neigh_colors[v].bit_count()
                if s > best_sat or (s == best_sat and deg[v] > best_deg):
                    best, best_sat, best_deg = v, s, deg[v]
        return best

    def extend(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        forbidden = neigh_colors[v]
        top = min(k - 1, used)  # symmetry breaking: at most one fresh color
        for c in range(top + 1):
            if forbidden >> c & 1:
                continue
            bud.spend()
            color_of[v] = c
            bit = 1 << c
            touched = []
            for u in nbrs[v]:
                if color_of[u] < 0 and not neigh_colors[u] & bit:
                    neigh_colors[u] |= bit
                    touched.append(u)
            if extend(colored + 1, used if c < used else used + 1):
                return True
            for u in touched:
                neigh_colors[u] &= ~bit
            color_of[v] = -1
        return False

    if extend(0, 0):
        return VertexColoring(tuple(color_of), max(color_of) + 1)
    return None


def chromatic_number(g: Graph,
                     budget: int | SearchBudget | None = None) -> VertexColoring:
    """Exact minimum vertex coloring; ``num_colors`` is the chromatic number.

    Iterates k upward from the greedy clique lower bound.  The order-0
    graph needs 0 colors and any edgeless nonempty graph needs 1.
    """
    if g.order == 0:
        return VertexColoring((), 0)
    bud = _as_budget(budget)
    k = greedy_clique_lower_bound(g)
    while True:
        witness = is_k_colorable(g, k, bud)
        if witness is not None:
            return witness
        k += 1


def chromatic_index(g: Graph,
                    budget: int | SearchBudget | None = None) -> EdgeColoring:
    """Exact minimum edge coloring, computed as a coloring of the line graph.

    Requires at least one edge (the chromatic index of an edgeless graph
    is undefined here).
    """
    if not g.edges:
        raise DomainError("chromatic index requires a graph with at least one edge")
    bud = _as_budget(budget)
    lg = line_graph(g)
    k = max(max(g.degrees), greedy_clique_lower_bound(lg.graph))
    while True:
        witness = is_k_colorable(lg.graph, k, bud)
        if witness is not None:
            break
        k += 1
    color_of = {edge: witness.color_of[i] for i, edge in enumerate(lg.edge_of_vertex)}
    return EdgeColoring(color_of, witness.num_colors)


def validate_vertex_coloring(g: Graph, c: VertexColoring) -> bool:
    """True iff c is proper on g and its color indices are contiguous and all used."""
    colors = c.color_of
    if len(colors) != g.order:
        return False
    if g.order == 0:
        return c.num_colors == 0
    if any(not isinstance(col, int) or col < 0 for col in colors):
        return False
    if c.num_colors != max(colors) + 1:
        return False
    if set(colors) != set(range(c.num_colors)):
        return False
    return all(colors[u] != colors[v] for u, v in g.edges)


def validate_edge_coloring(g: Graph, c: EdgeColoring) -> bool:
    """True iff c colors exactly g's edges, properly at shared endpoints, contiguously."""
    if set(c.color_of) != set(g.edges):
        return False
    used = set(c.color_of.values())
    if not g.edges:
        return c.num_colors == 0
    if any(not isinstance(col, int) or col < 0 for col in used):
        return False
    if used != set(range(c.num_colors)):
        return False
    seen_at: list[set[int]] = [set() for _ in range(g.order)]
    for (u, v), col in c.color_of.items():
        if col in seen_at[u] or col in seen_at[v]:
            return False
        seen_at[u].add(col)
        seen_at[v].add(col)
    return True
