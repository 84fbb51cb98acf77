import pytest

from chromalab.coloring import chromatic_number
from chromalab.enumeration import graph_from_mask, vertex_pairs


@pytest.fixture(scope="session")
def chi_pairs_leq6():
    """(order, mask) -> (chi(G), chi(complement)) for every labeled graph of order <= 6.

    The complement of mask m is full ^ m in the shared pair order, so one
    solver pass per order covers both sides.
    """
    table = {}
    for n in range(1, 7):
        full = (1 << len(vertex_pairs(n))) - 1
        chi_by_mask = [0] * (full + 1)
        for mask in range(full + 1):
            chi_by_mask[mask] = chromatic_number(graph_from_mask(n, mask)).num_colors
        for mask in range(full + 1):
            table[(n, mask)] = (chi_by_mask[mask], chi_by_mask[full ^ mask])
    return table
