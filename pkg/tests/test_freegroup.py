import pytest
from hypothesis import given, settings, strategies as st

from homcomplex.freegroup import (
    SubgroupClass,
    commutes,
    coset_count,
    even_part,
    fold,
    format_word,
    gen,
    induced_map,
    inverse,
    member,
    multiply,
    pi1_presentation,
    power,
    reduce_word,
    stallings_classify,
    walk_to_word,
    word_to_walk,
)
from homcomplex.graph import (
    bowtie_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    theta_graph,
)

a, b = gen(0), gen(1)


def words(num_gens, max_len=6):
    letters = st.sampled_from([k for i in range(1, num_gens + 1) for k in (i, -i)])
    return st.lists(letters, max_size=max_len).map(reduce_word)


def test_word_basics():
    assert reduce_word((1, -1, 2)) == (2,)
    assert multiply(a, inverse(a)) == ()
    assert power(a, -2) == (-1, -1)
    assert format_word(()) == "1" and format_word((1, -2)) == "g0 g1^-1"


def test_presentation_examples():
    P = pi1_presentation(cycle_graph(5), 0)
    assert P.rank == 1 and P.parities == [1]
    assert pi1_presentation(path_graph(4), 0).rank == 0
    T = pi1_presentation(theta_graph(2, 2, 2), 0)
    assert T.rank == 2 and T.parities == [0, 0]


def test_presentation_rank_formula():
    for G in (petersen_graph(), bowtie_graph(), theta_graph(3, 3, 3), complete_graph(4)):
        P = pi1_presentation(G, 0)
        assert P.rank == G.num_edges - G.n + 1
        for i in range(P.rank):
            loop = P.generator_loop(i)
            assert (len(loop) - 1) % 2 == P.parity(i)
            assert walk_to_word(P, loop) == gen(i)


def test_presentation_rejects_bad_graphs():
    from homcomplex.graph import Graph, looped_vertex

    with pytest.raises(ValueError):
        pi1_presentation(looped_vertex(), 0)
    with pytest.raises(ValueError):
        pi1_presentation(Graph.from_edges(2, []), 0)


def test_walk_to_word_examples():
    P = pi1_presentation(cycle_graph(5), 0)
    assert walk_to_word(P, [0, 1, 0]) == ()
    assert walk_to_word(P, [0, 1, 2, 3, 4, 0]) in ((1,), (-1,))
    loop = [0, 1, 2, 3, 4, 0]
    assert walk_to_word(P, loop + loop[::-1][1:]) == ()
    with pytest.raises(ValueError):
        walk_to_word(P, [0, 1, 2])


@settings(max_examples=60, deadline=None)
@given(words(3))
def test_word_walk_roundtrip(w):
    P = pi1_presentation(complete_graph(4), 0)
    assert walk_to_word(P, word_to_walk(P, w)) == w


def test_induced_map_examples():
    C5 = cycle_graph(5)
    P = pi1_presentation(C5, 0)
    assert induced_map((0, 1, 2, 3, 4), P, P) == [gen(0)]
    K2, K3 = complete_graph(2), complete_graph(3)
    assert induced_map((0, 1), pi1_presentation(K2, 0), pi1_presentation(K3, 0)) == []
    C6 = cycle_graph(6)
    PG, PH = pi1_presentation(C6, 0), pi1_presentation(K3, 0)
    image = induced_map((0, 1, 2, 0, 1, 2), PG, PH)
    assert len(image) == 1 and image[0] in (power(gen(0), 2), power(gen(0), -2))


def test_classify_examples():
    assert stallings_classify([])[0] is SubgroupClass.TRIVIAL
    assert stallings_classify([a])[0] is SubgroupClass.INFINITE_CYCLIC
    cls, sub = stallings_classify([power(a, 2), b])
    assert cls is SubgroupClass.NONABELIAN_FREE and sub.rank == 2
    assert stallings_classify([multiply(a, b), multiply(a, b, a, b)])[0] is SubgroupClass.INFINITE_CYCLIC


def test_even_part_examples():
    assert even_part(pi1_presentation(cycle_graph(6), 0)) == [gen(0)]
    assert even_part(pi1_presentation(complete_graph(3), 0)) == [power(gen(0), 2)]
    P = pi1_presentation(bowtie_graph(), 0)
    assert P.parities == [1, 1]
    E = even_part(P)
    assert len(E) == 3 and fold(E).rank == 3


@pytest.mark.parametrize("H", [complete_graph(3), bowtie_graph(), complete_graph(4), petersen_graph(), cycle_graph(7)])
def test_even_part_is_index_two_and_even(H):
    P = pi1_presentation(H, 0)
    E = even_part(P)
    assert all(P.word_parity(w) == 0 for w in E)
    sub = fold(E)
    assert sub.rank == 2 * P.rank - 1
    assert coset_count(sub, P.rank) == 2
    for i in range(P.rank):
        assert member(sub, gen(i)) == (P.parity(i) == 0)


def test_commutes_examples():
    assert commutes(a, power(a, 2))
    assert not commutes(a, b)
    ab = multiply(a, b)
    assert commutes(ab, multiply(ab, ab))


def test_member_examples():
    _, sub = stallings_classify([power(a, 2)])
    assert member(sub, ())
    assert member(sub, power(a, 2))
    assert not member(sub, a)


def nielsen(gens, moves):
    gens = list(gens)
    for kind, i, j in moves:
        i %= len(gens)
        j %= len(gens)
        if kind == 0:
            gens[i] = inverse(gens[i])
        elif kind == 1:
            gens[i], gens[j] = gens[j], gens[i]
        elif i != j:
            gens[i] = multiply(gens[i], gens[j] if kind == 2 else inverse(gens[j]))
    return gens


@settings(max_examples=200, deadline=None)
@given(
    st.lists(words(2), min_size=1, max_size=3),
    st.lists(st.tuples(st.integers(0, 3), st.integers(0, 5), st.integers(0, 5)), max_size=8),
)
def test_class_invariant_under_nielsen_moves(gens, moves):
    cls, sub = stallings_classify(gens)
    moved = nielsen(gens, moves)
    cls2, sub2 = stallings_classify(moved)
    assert cls is cls2 and sub.rank == sub2.rank
    assert all(member(sub, w) for w in moved) and all(member(sub2, w) for w in gens)


@settings(max_examples=150, deadline=None)
@given(st.lists(words(3, 8), max_size=4))
def test_fold_output_is_folded_core(gens):
    sub = fold(gens)
    assert sub.is_folded() and sub.is_core()
    assert all(member(sub, w) for w in gens)
    assert sub.rank <= sum(1 for w in gens if w)


@settings(max_examples=100, deadline=None)
@given(words(2, 5), st.integers(-3, 3))
def test_powers_commute(w, k):
    assert commutes(w, power(w, k))
