"""Constructive edge colorings with certified color counts.

Each construction returns an :class:`EdgeColoring` for the corresponding
canonical graph (see :mod:`chromalab.families` for labeling):

* complete graphs by the circle method (n-1 colors for even n, n for odd);
* bipartite graphs by iterative insertion with alternating-path flips,
  using exactly the maximum degree;
* wheels, helms and fans by fixed offset rules on the spoke colors;
* arbitrary graphs by Misra-Gries fan rotation, at most max degree + 1.

The wheel/helm/fan rules color spoke j with color j, the rim or path edge
leaving position j with color j+2, and the helm pendant at position j
with color j+3 (all modulo the spoke count).  The three offsets at one
rim position are pairwise distinct exactly on the stated domains, which
is why helm(3) and fan(2) are rejected: there the rule cannot work and
the true optimum differs from the n-color pattern, so those calls raise
:class:`ConstructionInfeasibleError` carrying the exact coloring.
"""

from __future__ import annotations

from . import families
from .coloring import EdgeColoring, chromatic_index
from .errors import ConstructionInfeasibleError, DomainError
from .graphs import Graph, bipartition, max_degree


def edge_color_complete(n: int) -> EdgeColoring:
    """Color K_n with n-1 colors (n even) or n colors (n odd); requires n >= 2.

    Even case: fix vertex n-1; the edge (i, j) of the rotating part gets
    the round r with i + j = 2r (mod n-1), and (i, n-1) gets round i.
    Odd case: edge (i, j) gets color (i + j) mod n.
    """
    if n < 2:
        raise DomainError(f"edge_color_complete requires n >= 2 (got n={n})")
    color_of = {}
    if n % 2 == 0:
        mod = n - 1
        inv2 = n // 2  # 2 * (n/2) = n = mod + 1, so this inverts 2 mod (n-1)
        for i in range(n - 1):
            color_of[(i, n - 1)] = i
            for j in range(i + 1, n - 1):
                color_of[(i, j)] = (i + j) * inv2 % mod
        return EdgeColoring(color_of, mod)
    for i in range(n):
        for j in range(i + 1, n):
            color_of[(i, j)] = (i + j) % n
    return EdgeColoring(color_of, n)


def edge_color_bipartite_konig(g: Graph) -> EdgeColoring:
    """Color a nonempty bipartite graph with exactly max_degree(g) colors.

    Insert edges one by one: take the smallest color free at both ends if
    one exists; otherwise flip the alternating two-color path from v so
    the color free at u becomes free at v as well.
    """
    if not g.edges:
        raise DomainError("edge_color_bipartite_konig requires at least one edge")
    if bipartition(g) is None:
        raise DomainError("edge_color_bipartite_konig requires a bipartite graph")
    delta = max_degree(g)
    partner = [[-1] * delta for _ in range(g.order)]  # partner[x][c] = neighbor via color c
    color_of = {}

    def assign(x: int, y: int, c: int) -> None:
        color_of[(x, y) if x < y else (y, x)] = c
        partner[x][c] = y
        partner[y][c] = x

    for u, v in g.edges:
        common = next((c for c in range(delta)
                       if partner[u][c] < 0 and partner[v][c] < 0), None)
        if common is not None:
            assign(u, v, common)
            continue
        cu = next(c for c in range(delta) if partner[u][c] < 0)
        cv = next(c for c in range(delta) if partner[v][c] < 0)
        # walk the cu/cv alternating path from v; bipartiteness keeps it off u
        path = []
        x, col = v, cu
        while partner[x][col] >= 0:
            y = partner[x][col]
            path.append((x, y, col))
            x, col = y, (cv if col == cu else cu)
        for x, y, col in path:
            partner[x][col] = -1
            partner[y][col] = -1
        for x, y, col in path:
            new = cv if col == cu else cu
            assign(x, y, new)
        assign(u, v, cu)
    return EdgeColoring(color_of, delta)


def edge_color_wheel(n: int) -> EdgeColoring:
    """Color wheel(n) with n-1 colors; requires n >= 4.

    Spoke to rim position j gets color j; the rim edge from position j to
    j+1 gets color (j+2) mod (n-1).
    """
    if n < 4:
        raise DomainError(f"edge_color_wheel requires n >= 4 (got n={n})")
    mod = n - 1
    color_of = {}
    for j in range(mod):
        color_of[(0, j + 1)] = j
        a, b = j + 1, (j + 1) % mod + 1
        color_of[(min(a, b), max(a, b))] = (j + 2) % mod
    return EdgeColoring(color_of, mod)


def edge_color_helm(n: int) -> EdgeColoring:
    """Color helm(n) with n colors; requires n >= 4.

    Spoke at rim position j gets color j, the rim edge leaving j gets
    (j+2) mod n, the pendant at j gets (j+3) mod n.  At n=3 those three
    offsets collide and the true optimum is larger, so the call raises
    :class:`ConstructionInfeasibleError` carrying the exact coloring.
    """
    if n < 3:
        raise DomainError(f"edge_color_helm requires n >= 3 (got n={n})")
    if n == 3:
        exact = chromatic_index(families.helm(3))
        raise ConstructionInfeasibleError(
            f"the n-color helm rule is infeasible at n=3: max degree is 4 and the "
            f"exact chromatic index is {exact.num_colors}, not 3", exact)
    color_of = {}
    for j in range(n):
        rim = j + 1
        color_of[(0, rim)] = j
        a, b = rim, rim % n + 1
        color_of[(min(a, b), max(a, b))] = (j + 2) % n
        color_of[(rim, n + rim)] = (j + 3) % n
    return EdgeColoring(color_of, n)


def edge_color_fan(n: int) -> EdgeColoring:
    """Color fan(n) with n colors; requires n >= 3.

    Spoke to path position j gets color j; the path edge from position j
    to j+1 gets color (j+2) mod n.  fan(2) is K_3 and needs 3 colors, not
    2, so it raises :class:`ConstructionInfeasibleError` with the exact
    coloring attached.
    """
    if n < 2:
        raise DomainError(f"edge_color_fan requires n >= 2 (got n={n})")
    if n == 2:
        exact = chromatic_index(families.fan(2))
        raise ConstructionInfeasibleError(
            f"the n-color fan rule is infeasible at n=2: fan(2) is a triangle and the "
            f"exact chromatic index is {exact.num_colors}, not 2", exact)
    color_of = {}
    for j in range(n):
        color_of[(0, j + 1)] = j
        if j < n - 1:
            color_of[(j + 1, j + 2)] = (j + 2) % n
    return EdgeColoring(color_of, n)


def edge_color_misra_gries(g: Graph) -> EdgeColoring:
    """Color any nonempty graph with at most max_degree(g) + 1 colors.

    Classic fan/rotation scheme.  An edge whose endpoints share a free
    color takes the smallest such color directly; otherwise grow a
    maximal fan at u, make a color free at u by inverting the alternating
    cd-path through u, then rotate a fan prefix whose tip has that color
    free.  Deterministic given the canonical edge order (all scans are
    ascending).  Used colors are remapped to a contiguous range at the end.
    """
    if not g.edges:
        raise DomainError("edge_color_misra_gries requires at least one edge")
    palette = max_degree(g) + 1
    partner = [[-1] * palette for _ in range(g.order)]
    color_of: dict[tuple[int, int], int] = {}

    def set_color(x: int, y: int, c: int) -> None:
        color_of[(x, y) if x < y else (y, x)] = c
        partner[x][c] = y
        partner[y][c] = x

    def unset_color(x: int, y: int) -> int:
        c = color_of.pop((x, y) if x < y else (y, x))
        partner[x][c] = -1
        partner[y][c] = -1
        return c

    def smallest_free(x: int) -> int:
        return next(c for c in range(palette) if partner[x][c] < 0)

    def invert_cd_path(u: int, c: int, d: int) -> None:
        # maximal path from u alternating d, c, d, ...; u has no c edge
        path = []
        x, col = u, d
        while partner[x][col] >= 0:
            y = partner[x][col]
            path.append((x, y, col))
            x, col = y, (c if col == d else d)
        for x, y, col in path:
            unset_color(x, y)
        for x, y, col in path:
            set_color(x, y, c if col == d else d)

    for u, v in g.edges:
        common = next((c for c in range(palette)
                       if partner[u][c] < 0 and partner[v][c] < 0), None)
        if common is not None:
            set_color(u, v, common)
            continue
        # maximal fan of u starting at v: each next edge's color is free
        # at the previous fan vertex; extend by the smallest such color
        fan = [v]
        in_fan = {v}
        while True:
            last = fan[-1]
            ext = -1
            for c in range(palette):
                if partner[last][c] < 0:
                    x = partner[u][c]
                    if x >= 0 and x not in in_fan:
                        ext = x
                        break
            if ext < 0:
                break
            fan.append(ext)
            in_fan.add(ext)
        c = smallest_free(u)
        d = smallest_free(fan[-1])
        if c != d:
            invert_cd_path(u, c, d)
        # d is now free at u; pick the first fan vertex with d free whose
        # prefix is still a fan under the current colors, then rotate
        w_index = -1
        for i, x in enumerate(fan):
            if i > 0:
                key = (u, x) if u < x else (x, u)
                if partner[fan[i - 1]][color_of[key]] >= 0:
                    break  # prefix fan property broken by the inversion
            if partner[x][d] < 0:
                w_index = i
                break
        assert w_index >= 0, "fan rotation invariant violated"
        for j in range(w_index):
            moved = unset_color(u, fan[j + 1])
            set_color(u, fan[j], moved)
        set_color(u, fan[w_index], d)

    used = sorted(set(color_of.values()))
    remap = {old: new for new, old in enumerate(used)}
    return EdgeColoring({e: remap[c] for e, c in color_of.items()}, len(used))
