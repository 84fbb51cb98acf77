"""Deterministic generators for the named graph families.

Labeling conventions (fixed so colorings are reproducible):

* ``complete(n)``            -- K_n on vertices 0..n-1.
* ``complete_bipartite(m,n)``-- X = 0..m-1, Y = m..m+n-1.
* ``star(n)``                -- center 0, leaves 1..n (equals K_{1,n}).
* ``bistar(m,n)``            -- centers 0 and 1 adjacent; pendants 2..m+1
                                at 0 and m+2..m+n+1 at 1.
* ``path(n)``                -- 0-1-...-(n-1).
* ``cycle(n)``               -- path plus the edge (0, n-1); needs n >= 3.
* ``wheel(n)``               -- hub 0 joined to the cycle 1..n-1 (n vertices
                                total, so wheel(4) = K_4); needs n >= 4.
* ``helm(n)``                -- hub 0, rim cycle 1..n, pendant n+i attached
                                to rim vertex i; 2n+1 vertices, 3n edges.
* ``fan(n)``                 -- hub 0 joined to the path 1..n (n+1 vertices,
                                2n-1 edges); needs n >= 2, so fan(2) = K_3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graphs import Graph, join

FAMILY_PARAM_MINS: dict[str, tuple[int, ...]] = {
    "complete": (1,),
    "complete_bipartite": (1, 1),
    "star": (1,),
    "bistar": (1, 1),
    "path": (1,),
    "cycle": (3,),
    "wheel": (4,),
    "helm": (3,),
    "fan": (2,),
}

FAMILY_PARAM_NAMES: dict[str, tuple[str, ...]] = {
    "complete": ("n",),
    "complete_bipartite": ("m", "n"),
    "star": ("n",),
    "bistar": ("m", "n"),
    "path": ("n",),
    "cycle": ("n",),
    "wheel": ("n",),
    "helm": ("n",),
    "fan": ("n",),
}

FAMILIES = tuple(FAMILY_PARAM_MINS)


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its parameters, validated against the domain table."""

    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILY_PARAM_MINS:
            raise DomainError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        mins = FAMILY_PARAM_MINS[self.family]
        names = FAMILY_PARAM_NAMES[self.family]
        if len(self.params) != len(mins):
            raise DomainError(f"{self.family} takes {len(mins)} parameter(s) "
                              f"({', '.join(names)}), got {len(self.params)}")
        for name, lo, value in zip(names, mins, self.params):
            if not isinstance(value, int) or value < lo:
                raise DomainError(f"{self.family} requires {name} >= {lo} (got {name}={value})")


def complete(n: int) -> Graph:
    _check("complete", n)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    _check("complete_bipartite", m, n)
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(n: int) -> Graph:
    _check("star", n)
    return complete_bipartite(1, n)


def bistar(m: int, n: int) -> Graph:
    _check("bistar", m, n)
    edges = [(0, 1)]
    edges += [(0, k) for k in range(2, m + 2)]
    edges += [(1, k) for k in range(m + 2, m + n + 2)]
    return Graph(m + n + 2, edges)


def path(n: int) -> Graph:
    _check("path", n)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _check("cycle", n)
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def wheel(n: int) -> Graph:
    _check("wheel", n)
    return join(Graph(1), cycle(n - 1))


def helm(n: int) -> Graph:
    _check("helm", n)
    edges = [(0, i) for i in range(1, n + 1)]                 # spokes
    edges += [(i, i % n + 1) for i in range(1, n + 1)]        # rim cycle
    edges += [(i, n + i) for i in range(1, n + 1)]            # pendants
    return Graph(2 * n + 1, edges)


def fan(n: int) -> Graph:
    _check("fan", n)
    return join(Graph(1), path(n))


_GENERATORS = {
    "complete": complete,
    "complete_bipartite": complete_bipartite,
    "star": star,
    "bistar": bistar,
    "path": path,
    "cycle": cycle,
    "wheel": wheel,
    "helm": helm,
    "fan": fan,
}


def generate(spec: FamilySpec) -> Graph:
    """Build the graph a validated spec describes."""
    return _GENERATORS[spec.family](*spec.params)


def make(family: str, *params: int) -> Graph:
    """Shorthand for ``generate(FamilySpec(family, params))``."""
    return generate(FamilySpec(family, tuple(params)))


def _check(family: str, *params: int) -> None:
    FamilySpec(family, tuple(params))
