import pytest

from conftest import brute_multihoms
from homcomplex.complex import (
    FinitePoset,
    atoms_below,
    build_component_poset,
    cell_dim,
    cell_leq,
    euler_characteristic_cells,
    order_complex,
    poset_from_atoms,
)
from homcomplex.graph import complete_graph, cycle_graph
from homcomplex.homs import ResourceLimitError, is_multihom, reconfig_components

K2, K3 = complete_graph(2), complete_graph(3)


def disjoint_pair_count(n):
    # ordered pairs (A, B) of disjoint nonempty subsets of an n-set
    return 3 ** n - 2 * 2 ** n + 1


def test_k2_k3_has_twelve_cells():
    P = build_component_poset(K2, K3, (0, 1))
    assert len(P) == disjoint_pair_count(3) == 12
    assert sorted(P.dims) == [0] * 6 + [1] * 6
    assert euler_characteristic_cells(P) == 0
    assert all(is_multihom(K2, K3, c) for c in P.cells)


def test_k2_k2_single_cell():
    P = build_component_poset(K2, K2, (0, 1))
    assert len(P) == 1 and euler_characteristic_cells(P) == 1


def test_c5_c5_identity_matches_brute_force():
    G = H = cycle_graph(5)
    rg = reconfig_components(G, H)
    ident = (0, 1, 2, 3, 4)
    comp = {rg.homs[i] for i in rg.component(rg.component_of(ident))}
    expected = {m for m in brute_multihoms(G, H) if set(atoms_below(m)) <= comp}
    P = build_component_poset(G, H, ident, rg=rg)
    assert set(P.cells) == expected


@pytest.mark.parametrize("G,H", [(K2, K3), (cycle_graph(6), K3), (K2, cycle_graph(6))])
def test_every_multihom_lies_in_exactly_one_component(G, H):
    rg = reconfig_components(G, H)
    total = 0
    for i in rg.representatives():
        P = build_component_poset(G, H, rg.homs[i], rg=rg)
        comp = {rg.homs[j] for j in rg.component(rg.component_id[i])}
        assert all(set(atoms_below(c)) <= comp for c in P.cells)
        total += len(P)
    assert total == len(brute_multihoms(G, H))


def test_covers_and_order():
    P = build_component_poset(cycle_graph(6), K3, (0, 1, 0, 1, 0, 1))
    for i, cov in enumerate(P.covers):
        for j in cov:
            assert P.dims[j] == P.dims[i] + 1 and P.leq(i, j) and i < j
    assert cell_leq((1, 2), (3, 2)) and not cell_leq((3, 2), (1, 2))
    assert cell_dim((3, 4)) == 1


def test_cell_cap():
    with pytest.raises(ResourceLimitError):
        poset_from_atoms(cycle_graph(6), K3, [(0, 1, 0, 1, 0, 1)], max_cells=5)


def test_order_complex_of_hexagon():
    P = build_component_poset(K2, K3, (0, 1))
    X = order_complex(P, max_dim=2)
    assert X.counts == [12, 12]
    assert X.euler_characteristic() == 0 and not X.truncated


def test_order_complex_small_posets():
    X = order_complex(FinitePoset({0: set()}))
    assert X.counts == [1]
    X = order_complex(FinitePoset({0: {1, 2}, 1: {2}, 2: set()}))
    assert X.counts == [3, 3, 1] and X.euler_characteristic() == 1


def test_order_complex_truncation_and_cap():
    chain = FinitePoset({i: set(range(i + 1, 6)) for i in range(6)})
    X = order_complex(chain, max_dim=2)
    assert X.truncated and X.counts == [6, 15, 20]
    with pytest.raises(ResourceLimitError):
        order_complex(chain, max_dim=5, max_simplices=30)


@pytest.mark.parametrize("G,H,seed", [
    (K2, cycle_graph(6), (0, 1)),
    (K2, cycle_graph(6), (1, 0)),
    (cycle_graph(6), K3, (0, 1, 0, 1, 0, 1)),
    (cycle_graph(5), K3, (0, 1, 0, 1, 2)),
])
def test_cell_chi_equals_order_complex_chi(G, H, seed):
    P = build_component_poset(G, H, seed)
    X = order_complex(P, max_dim=max(P.dims))
    assert not X.truncated
    assert euler_characteristic_cells(P) == X.euler_characteristic()
