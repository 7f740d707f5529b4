import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from azindex.families import construct_psi
from azindex.graph import (
    MAX_ORDER,
    Graph,
    GraphError,
    complement,
    complete_graph,
    cycle_graph,
    cyclomatic,
    degree_profile,
    from_edges,
    is_chemical,
    is_connected,
    isomorphic,
    n3_prime,
    path_graph,
    star_graph,
)

PAW = from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return from_edges(n, chosen)


def test_from_edges():
    tri = from_edges(3, [(0, 1), (1, 2), (0, 2)])
    assert tri.m == 3 and tri.degrees == (2, 2, 2)
    assert path_graph(4).edges() == [(0, 1), (1, 2), (2, 3)]
    with pytest.raises(GraphError, match="duplicate"):
        from_edges(4, [(0, 1), (0, 1)])
    with pytest.raises(GraphError, match="duplicate"):
        from_edges(4, [(0, 1), (1, 0)])
    with pytest.raises(GraphError, match="self-loop"):
        from_edges(3, [(1, 1)])
    with pytest.raises(GraphError, match="outside"):
        from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(MAX_ORDER + 1)


def test_graph_is_immutable():
    g = path_graph(3)
    with pytest.raises(AttributeError):
        g.n = 4


def test_complement_examples():
    assert isomorphic(complement(path_graph(4)), path_graph(4))
    assert isomorphic(complement(cycle_graph(5)), cycle_graph(5))
    cp3 = complement(path_graph(3))
    assert cp3.m == 1 and not is_connected(cp3)


def test_connectivity():
    assert is_connected(cycle_graph(5))
    assert not is_connected(from_edges(4, [(0, 1), (2, 3)]))


def test_degree_profile_paw():
    pr = degree_profile(PAW)
    assert sorted(pr.degrees, reverse=True) == [3, 2, 2, 1]
    assert pr.pendant_count == 1
    assert pr.x(2, 3) == 2 and pr.x(2, 2) == 1 and pr.x(1, 3) == 1
    assert pr.min_nonpendant_degree == 2 and pr.max_degree == 3 and pr.min_degree == 1


def test_degree_profile_cycle_and_psi():
    pr = degree_profile(cycle_graph(6))
    assert pr.n_deg(2) == 6 and pr.x(2, 2) == 6 and pr.pendant_count == 0
    assert pr.min_nonpendant_degree == 2
    psi = degree_profile(construct_psi(7, "bicyclic"))
    assert (psi.n_deg(4), psi.n_deg(2), psi.n_deg(1)) == (2, 3, 2)
    assert psi.x(2, 4) == 6 and psi.x(1, 4) == 2


def test_min_nonpendant_undefined():
    assert degree_profile(path_graph(2)).min_nonpendant_degree is None
    assert degree_profile(star_graph(4)).min_nonpendant_degree == 4


def test_n3_prime():
    assert n3_prime(complete_graph(4)) == 4
    assert n3_prime(star_graph(3)) == 0
    assert n3_prime(PAW) == 0


def test_cyclomatic():
    assert cyclomatic(cycle_graph(7)) == 1
    # two branch vertices 0, 1 joined by paths of lengths 1, 2, 2
    theta = from_edges(4, [(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)])
    assert theta.m - theta.n + 1 == 2 and cyclomatic(theta) == 2
    assert cyclomatic(path_graph(9)) == 0
    with pytest.raises(GraphError):
        cyclomatic(from_edges(4, [(0, 1), (2, 3)]))


def test_is_chemical():
    assert is_chemical(complete_graph(5))
    assert not is_chemical(complete_graph(6))
    assert not is_chemical(from_edges(4, [(0, 1), (2, 3)]))


def test_isomorphic_examples():
    assert isomorphic(path_graph(4), complement(path_graph(4)))
    c4 = cycle_graph(4)
    k3_plus = from_edges(4, [(0, 1), (1, 2), (0, 2)])
    assert not isomorphic(c4, k3_plus)


@settings(max_examples=200)
@given(graphs(), st.randoms())
def test_relabel_is_isomorphic(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert isomorphic(g, g.relabel(perm))


@settings(max_examples=200)
@given(graphs())
def test_handshake_and_involution(g):
    assert sum(g.degrees) == 2 * g.m
    assert complement(complement(g)) == g


@given(graphs(8))
def test_cyclomatic_classes(g):
    if is_connected(g):
        r = cyclomatic(g)
        assert (r == 1) == (g.m == g.n) and (r == 2) == (g.m == g.n + 1)


def test_degree_profile_identities_random():
    rnd = random.Random(20240601)
    for n in range(4, 11):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for _ in range(1000):
            p = rnd.random()
            g = from_edges(n, [e for e in pairs if rnd.random() < p])
            pr = degree_profile(g)
            assert sum(pr.vertex_counts) == n
            assert sum(i * c for i, c in enumerate(pr.vertex_counts)) == 2 * g.m
            assert sum(pr.edge_counts.values()) == g.m
            assert pr.pendant_count == pr.n_deg(1)
            assert pr.min_nonpendant_degree is None or pr.min_nonpendant_degree >= 2


def test_isomorphic_equivalence_sample():
    rnd = random.Random(7)
    sample = []
    for _ in range(40):
        n = 5
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        sample.append(from_edges(n, [e for e in pairs if rnd.random() < 0.5]))
    for a in sample:
        assert isomorphic(a, a)
        for b in sample:
            assert isomorphic(a, b) == isomorphic(b, a)
            if isomorphic(a, b):
                for c in sample:
                    if isomorphic(b, c):
                        assert isomorphic(a, c)
