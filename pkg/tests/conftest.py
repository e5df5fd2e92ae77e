"""Shared graphs and independent brute-force oracles."""

from fractions import Fraction
from itertools import product

import pytest

from homcomplex.graph import (
    bowtie_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    theta_graph,
)


def brute_homs(G, H):
    """All maps V(G) -> V(H) preserving edges, by exhaustive search."""
    return [
        f for f in product(range(H.n), repeat=G.n)
        if all(H.has_edge(f[u], f[v]) for u, v in G.edges)
    ]


def brute_multihoms(G, H):
    """All assignments of nonempty subsets with every cross pair an edge.

    Exhaustive over subsets, checking each edge once both ends are assigned.
    """
    def compatible(m1, m2):
        return all(H.has_edge(a, b) for a in range(H.n) if m1 >> a & 1
                   for b in range(H.n) if m2 >> b & 1)

    out = []

    def extend(masks):
        x = len(masks)
        if x == G.n:
            out.append(tuple(masks))
            return
        for m in range(1, 1 << H.n):
            if all(compatible(masks[u] if u < x else m, m)
                   for u in G.adj[x] if u <= x):
                extend(masks + [m])

    extend([])
    return sorted(out)


def rational_rank(rows):
    """Rank over Q by fraction-exact Gaussian elimination."""
    A = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for i in range(len(A)):
            if i != rank and A[i][c]:
                q = A[i][c] / A[rank][c]
                A[i] = [a - q * b for a, b in zip(A[i], A[rank])]
        rank += 1
    return rank


SUITE_G = {
    "K2": complete_graph(2),
    "P3": path_graph(3),
    "C4": cycle_graph(4),
    "C5": cycle_graph(5),
    "C6": cycle_graph(6),
    "K3": complete_graph(3),
    "K4": complete_graph(4),
}

# theta(3,3,3) replaces theta(2,2,2), which contains a 4-cycle.
SUITE_H = {
    "K2": complete_graph(2),
    "K3": complete_graph(3),
    "C5": cycle_graph(5),
    "C6": cycle_graph(6),
    "C7": cycle_graph(7),
    "P4": path_graph(4),
    "theta333": theta_graph(3, 3, 3),
    "bowtie": bowtie_graph(),
}


@pytest.fixture(scope="session")
def suite_reports():
    from homcomplex.classify import classify_pair

    return {
        (g, h): classify_pair(G, H, g_name=g, h_name=h)
        for g, G in SUITE_G.items()
        for h, H in SUITE_H.items()
    }


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        passed, detail = results[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if passed else 'FAIL'}  {detail}")
