import random

import pytest

from azindex.families import (
    attach_f_delta,
    attach_p2_path,
    construct_b_prime,
    construct_lemma1,
    smooth_degree2,
    smooth_f_delta,
    subdivide_edge,
    subdivide_f_delta,
)
from azindex.graph import GraphError, cycle_graph, from_edges, is_connected, isomorphic
from azindex.indices import f_bicyclic, f_functional, theta_tilde


def _random_connected(rnd, n, extra):
    edges = set()
    for v in range(1, n):
        edges.add((rnd.randrange(v), v))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
    rnd.shuffle(pairs)
    edges.update(pairs[:extra])
    return from_edges(n, sorted(edges))


def test_examples():
    assert isomorphic(subdivide_edge(cycle_graph(3), 0, 1), cycle_graph(4))
    assert isomorphic(smooth_degree2(cycle_graph(4), 0), cycle_graph(3))
    tad = attach_p2_path(cycle_graph(3), 0)
    assert sorted(tad.degrees) == [1, 2, 2, 2, 3]
    with pytest.raises(GraphError):
        subdivide_edge(cycle_graph(4), 0, 2)
    with pytest.raises(GraphError):
        smooth_degree2(cycle_graph(3), 0)
    k15 = from_edges(5, [(0, i) for i in range(1, 5)])
    with pytest.raises(GraphError):
        attach_p2_path(k15, 0, chemical=True)


def test_subdivide_random():
    rnd = random.Random(101)
    for _ in range(100):
        g = _random_connected(rnd, rnd.randint(3, 12), rnd.randint(0, 6))
        u, v = rnd.choice(g.edges())
        h = subdivide_edge(g, u, v)
        assert h.n == g.n + 1 and h.m == g.m + 1
        assert f_functional(h) - f_functional(g) == subdivide_f_delta(g, u, v)


def test_attach_random():
    rnd = random.Random(202)
    for _ in range(100):
        g = _random_connected(rnd, rnd.randint(3, 12), rnd.randint(0, 6))
        u = rnd.randrange(g.n)
        h = attach_p2_path(g, u)
        assert h.n == g.n + 2 and h.m == g.m + 2 and is_connected(h)
        assert f_functional(h) - f_functional(g) == attach_f_delta(g, u)


def test_smooth_random():
    rnd = random.Random(303)
    done = 0
    while done < 100:
        g = _random_connected(rnd, rnd.randint(4, 12), rnd.randint(0, 4))
        cands = [u for u in range(g.n) if g.degree(u) == 2 and not g.has_edge(*g.neighbors(u))]
        if not cands:
            continue
        u = rnd.choice(cands)
        h = smooth_degree2(g, u)
        assert h.n == g.n - 1 and h.m == g.m - 1
        assert f_functional(h) - f_functional(g) == smooth_f_delta(g, u)
        done += 1


def test_smooth_invariant_when_neighbour_has_degree_two():
    # a degree-2 vertex next to another degree-2 vertex can be smoothed for free
    rnd = random.Random(404)
    done = 0
    while done < 50:
        g = _random_connected(rnd, rnd.randint(5, 12), rnd.randint(1, 3))
        if g.m != g.n + 1:
            continue
        cands = [
            u for u in range(g.n)
            if g.degree(u) == 2 and not g.has_edge(*g.neighbors(u))
            and 2 in (g.degree(x) for x in g.neighbors(u))
        ]
        if not cands:
            continue
        u = rnd.choice(cands)
        assert f_bicyclic(smooth_degree2(g, u)) == f_bicyclic(g)
        done += 1


def test_subdivision_at_degree_two_is_free():
    # subdividing an edge with a degree-2 end never changes F
    g = construct_lemma1("theta", 4, 3, 2)
    for u, v in g.edges():
        if 2 in (g.degree(u), g.degree(v)):
            assert f_bicyclic(subdivide_edge(g, u, v)) == f_bicyclic(g)


def test_growing_b_prime_by_one_step():
    # B'(k+1) is B'(k) with one more core vertex; its F changes by one theta~(4,4) plus two pendant paths
    a, b = construct_b_prime(0), construct_b_prime(1)
    assert f_bicyclic(b) - f_bicyclic(a) == theta_tilde(4, 4)
