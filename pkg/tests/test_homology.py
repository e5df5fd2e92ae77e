import random

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from conftest import rational_rank
from homcomplex.complex import FinitePoset, build_component_poset, order_complex
from homcomplex.graph import bowtie_graph, complete_graph, cycle_graph, theta_graph
from homcomplex.homology import (
    ChainComplex,
    IntMatrix,
    boundary_matrices,
    cellular_chain_complex,
    homology_profile,
    smith_normal_form,
)
from homcomplex.homs import reconfig_components


def simplex_poset(n):
    """Face poset of the full simplex on n vertices, as a FinitePoset."""
    from itertools import combinations

    faces = [frozenset(c) for k in range(1, n + 1) for c in combinations(range(n), k)]
    return FinitePoset({i: {j for j, g in enumerate(faces) if f < g} for i, f in enumerate(faces)})


def simplicial(simplices_by_dim):
    """Chain complex of an explicit simplicial complex given by sorted vertex tuples."""
    from homcomplex.complex import OrderComplex

    return boundary_matrices(OrderComplex(simplices_by_dim, len(simplices_by_dim) - 1, False))


def sympy_factors(rows):
    D = sympy_snf(Matrix(rows), domain=ZZ)
    diag = [abs(int(D[i, i])) for i in range(min(D.shape))]
    return [d for d in diag if d]


def test_snf_examples():
    assert smith_normal_form([[2, 0], [0, 3]]) == (2, [1, 6])
    assert smith_normal_form([[0, 0], [0, 0]]) == (0, [])
    assert smith_normal_form([[1, 0], [0, 1]]) == (2, [1, 1])
    assert smith_normal_form([[2, 4], [6, 8]])[1] == sympy_factors([[2, 4], [6, 8]])


def test_single_edge_boundary():
    C = simplicial([[(0,), (1,)], [(0, 1)]])
    assert C.boundaries[1].to_dense() == [[-1], [1]]


def test_hollow_triangle_and_full_simplex():
    hollow = simplicial([[(0,), (1,), (2,)], [(0, 1), (0, 2), (1, 2)]])
    assert smith_normal_form(hollow.boundaries[1])[0] == 2
    full = simplicial([[(0,), (1,), (2,)], [(0, 1), (0, 2), (1, 2)], [(0, 1, 2)]])
    assert full.check_dd_zero()
    assert full.boundaries[1].compose(full.boundaries[2]).to_dense() == [[0]] * 3
    prof = homology_profile(full)
    assert prof.betti == [1, 0, 0] and prof.chi == 1 and prof.torsion_free


def test_hexagon_and_disjoint_points():
    hexagon = simplicial([[(i,) for i in range(6)],
                          sorted((min(i, (i + 1) % 6), max(i, (i + 1) % 6)) for i in range(6))])
    prof = homology_profile(hexagon)
    assert prof.betti == [1, 1] and prof.chi == 0 and prof.torsion_free
    two = homology_profile(simplicial([[(0,), (1,)]]))
    assert two.betti == [2]


def test_projective_plane_torsion():
    # 6-vertex triangulation of RP^2
    tri = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
           (1, 2, 4), (2, 3, 5), (1, 3, 4), (2, 4, 5), (1, 3, 5)]
    tri = sorted(tuple(sorted(t)) for t in tri)
    edges = sorted({e for t in tri for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2]))})
    C = simplicial([[(i,) for i in range(6)], edges, tri])
    prof = homology_profile(C)
    assert prof.betti == [1, 0, 0] and prof.torsion == [[], [2], []]


def test_simplex_via_order_complex():
    X = order_complex(simplex_poset(3), max_dim=2)
    prof = homology_profile(boundary_matrices(X))
    assert prof.betti == [1, 0, 0] and prof.chi == 1


@pytest.mark.parametrize("seed", range(100))
def test_snf_random_vs_oracles(seed):
    rnd = random.Random(seed)
    m, n = rnd.randint(1, 20), rnd.randint(1, 20)
    density = rnd.choice([0.1, 0.3, 0.7])
    rows = [[rnd.randint(-6, 6) if rnd.random() < density else 0 for _ in range(n)] for _ in range(m)]
    rank, factors = smith_normal_form(rows)
    assert rank == rational_rank(rows)
    assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
    if max(m, n) <= 10:
        assert factors == sympy_factors(rows)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4), min_size=1, max_size=6))
def test_snf_matches_sympy_on_small_matrices(rows):
    assert smith_normal_form(rows)[1] == sympy_factors(rows)


def test_int_matrix_roundtrip_and_compose():
    A = IntMatrix.from_dense([[1, 2], [0, -1]])
    assert A.to_dense() == [[1, 2], [0, -1]] and A.nnz() == 3
    assert A.compose(A).to_dense() == [[1, 0], [0, 1]]
    with pytest.raises(ValueError):
        A.compose(IntMatrix.from_dense([[1, 2, 3]]))


def test_no_overflow_on_large_entries():
    big = 2 ** 80 + 1
    assert smith_normal_form([[big, 0], [0, big * 3]]) == (2, [big, 3 * big])


COMPONENT_CASES = [
    (complete_graph(2), complete_graph(3)),
    (complete_graph(2), cycle_graph(6)),
    (cycle_graph(6), complete_graph(3)),
    (cycle_graph(5), complete_graph(3)),
    (complete_graph(2), theta_graph(3, 3, 3)),
    (complete_graph(2), bowtie_graph()),
]


@pytest.mark.parametrize("G,H", COMPONENT_CASES)
def test_dd_zero_on_hom_complexes(G, H):
    rg = reconfig_components(G, H)
    for i in rg.representatives():
        P = build_component_poset(G, H, rg.homs[i], rg=rg)
        assert cellular_chain_complex(P, max_dim=10).check_dd_zero()
        X = order_complex(P, max_dim=3)
        assert boundary_matrices(X).check_dd_zero()


@pytest.mark.parametrize("G,H", COMPONENT_CASES)
def test_cellular_matches_order_complex(G, H):
    rg = reconfig_components(G, H)
    for i in rg.representatives():
        P = build_component_poset(G, H, rg.homs[i], rg=rg)
        cell = homology_profile(cellular_chain_complex(P, max_dim=10))
        X = order_complex(P, max_dim=max(P.dims))
        simp = homology_profile(boundary_matrices(X))
        assert cell.betti == simp.betti and cell.torsion == simp.torsion and cell.chi == simp.chi


def test_truncated_complex_reports_lower_degrees_only():
    P = build_component_poset(cycle_graph(6), complete_graph(3), (0, 1, 0, 1, 0, 1))
    assert max(P.dims) == 3
    full = homology_profile(cellular_chain_complex(P, max_dim=10))
    cut = cellular_chain_complex(P, max_dim=2)
    assert not cut.complete
    prof = homology_profile(cut)
    assert prof.chi is None and prof.betti == full.betti[:2] == [1, 1]


def test_chain_complex_top():
    C = ChainComplex([3], {})
    assert C.top == 0 and homology_profile(C).betti == [3]
