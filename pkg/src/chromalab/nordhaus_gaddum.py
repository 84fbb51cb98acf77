"""Sum/product bounds on the chromatic numbers of a graph and its complement.

For a graph of order n the classical bounds are

    2*sqrt(n) <= chi(G) + chi(comp(G)) <= n + 1
    n <= chi(G) * chi(comp(G)) <= (n + 1)^2 / 4

and every pair (a, b) satisfying them is realized by some graph of order
n.  The irrational and rational bounds are never evaluated in floating
point: ``sum >= 2*sqrt(n)`` is checked as ``sum^2 >= 4n`` and
``product <= (n+1)^2/4`` as ``4*product <= (n+1)^2``, so verdicts are
bit-exact.

``ng_construct`` realizes a feasible pair (a, b) as a disjoint union of b
cliques with largest size a: the chromatic number of a clique union is
its largest clique, and the complement is a complete b-partite graph
with chromatic number b.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import SearchBudget, chromatic_number
from .errors import DomainError
from .families import complete
from .graphs import Graph, complement, disjoint_union


@dataclass(frozen=True)
class NgReport:
    """Exact chromatic data for a graph/complement pair plus bound verdicts."""

    order: int
    chi: int
    chi_comp: int
    chi_sum: int
    chi_product: int
    sum_lower_ok: bool       # chi_sum^2 >= 4 * order
    sum_upper_ok: bool       # chi_sum <= order + 1
    product_lower_ok: bool   # chi_product >= order
    product_upper_ok: bool   # 4 * chi_product <= (order + 1)^2

    @property
    def all_bounds_ok(self) -> bool:
        return (self.sum_lower_ok and self.sum_upper_ok
                and self.product_lower_ok and self.product_upper_ok)


def ng_check(g: Graph, budget: int | SearchBudget | None = None) -> NgReport:
    """Compute chi(g) and chi(complement(g)) exactly and check all four bounds."""
    n = g.order
    if n == 0:
        raise DomainError("ng_check requires a graph of order >= 1")
    chi = chromatic_number(g, budget).num_colors
    chi_comp = chromatic_number(complement(g), budget).num_colors
    s = chi + chi_comp
    p = chi * chi_comp
    return NgReport(
        order=n, chi=chi, chi_comp=chi_comp, chi_sum=s, chi_product=p,
        sum_lower_ok=s * s >= 4 * n,
        sum_upper_ok=s <= n + 1,
        product_lower_ok=p >= n,
        product_upper_ok=4 * p <= (n + 1) ** 2,
    )


def ng_feasible(n: int, a: int, b: int) -> bool:
    """True iff some graph of order n has chi(G) = a and chi(comp(G)) = b.

    Checking ``a + b <= n + 1`` and ``a * b >= n`` suffices: the other two
    bounds follow from the AM-GM inequality (a+b)^2 >= 4ab >= 4n and
    4ab <= (a+b)^2 <= (n+1)^2.
    """
    if n < 1 or a < 1 or b < 1:
        raise DomainError(f"ng_feasible requires n, a, b >= 1 (got n={n}, a={a}, b={b})")
    return a + b <= n + 1 and a * b >= n


def ng_construct(n: int, a: int, b: int) -> Graph:
    """Build a graph of order n with chi = a and chi of the complement = b.

    The graph is a disjoint union of b cliques with sizes filled greedily
    largest-first (the first clique has size exactly a).  Infeasible
    triples raise :class:`DomainError` naming the violated inequality.
    """
    if n < 1 or a < 1 or b < 1:
        raise DomainError(f"ng_construct requires n, a, b >= 1 (got n={n}, a={a}, b={b})")
    if a + b > n + 1:
        raise DomainError(f"infeasible: a + b = {a + b} violates a + b <= n + 1 = {n + 1}")
    if a * b < n:
        raise DomainError(f"infeasible: a * b = {a * b} violates a * b >= n = {n}")
    sizes = []
    remaining = n
    for i in range(b):
        parts_left = b - i
        take = min(a, remaining - (parts_left - 1))
        sizes.append(take)
        remaining -= take
    return disjoint_union([complete(s) for s in sizes])
