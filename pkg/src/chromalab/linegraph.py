"""The line-graph operator with a traceable edge-to-vertex correspondence.

Vertex i of the line graph corresponds to the i-th edge of the source
graph in canonical (lexicographic) edge order, so vertex colorings of the
line graph map back to edge colorings deterministically.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Edge, Graph


@dataclass(frozen=True)
class LineGraphResult:
    graph: Graph
    edge_of_vertex: tuple[Edge, ...]


def line_graph(g: Graph) -> LineGraphResult:
    """Build L(g): one vertex per edge, adjacency = shared endpoint.

    An edgeless source yields the order-0 line graph.
    """
    edges = g.edges
    m = len(edges)
    lg_edges = []
    for i in range(m):
        a, b = edges[i]
        for j in range(i + 1, m):
            c, d = edges[j]
            if a == c or a == d or b == c or b == d:
                lg_edges.append((i, j))
    return LineGraphResult(Graph(m, lg_edges), edges)
