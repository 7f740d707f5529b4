from fractions import Fraction

import pytest

from azindex.families import (
    FamilyError,
    FamilySpec,
    biregular,
    construct_b_prime,
    construct_lemma1,
    construct_psi,
    construct_u_prime,
    phi1_member,
    phi2_member,
    psi_member,
    psi_membership,
)
from azindex.graph import (
    complete_graph,
    cycle_graph,
    cyclomatic,
    degree_profile,
    from_edges,
    is_chemical,
    is_connected,
    n3_prime,
    star_graph,
)
from azindex.indices import azi, wang_lower_bound

PAW = from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def _induced(g, vs):
    vs = list(vs)
    idx = {v: i for i, v in enumerate(vs)}
    return from_edges(len(vs), [(idx[u], idx[v]) for u, v in g.edges() if u in idx and v in idx])


@pytest.mark.parametrize("k", range(0, 11))
def test_b_prime_structure(k):
    g = construct_b_prime(k)
    pr = degree_profile(g)
    assert g.n == 5 * k + 26 and g.m == g.n + 1
    assert is_chemical(g) and cyclomatic(g) == 2
    assert pr.x(4, 4) == pr.n_deg(4) + 1
    assert pr.n_deg(1) == pr.n_deg(2)
    assert set(pr.edge_counts) == {(4, 4), (2, 4), (1, 2)}
    assert azi(g) == (4 * k + 20) * 8 + (k + 7) * Fraction(8, 3) ** 3


@pytest.mark.parametrize("k", range(0, 11))
def test_u_prime_structure(k):
    g = construct_u_prime(k)
    pr = degree_profile(g)
    assert g.n == 5 * k + 15 and g.m == g.n
    assert is_chemical(g) and cyclomatic(g) == 1
    assert pr.x(4, 4) == pr.n_deg(4) == k + 3
    core = _induced(g, [v for v in range(g.n) if g.degree(v) == 4])
    assert is_connected(core) and cyclomatic(core) == 1
    assert azi(g) == (4 * k + 12) * 8 + (k + 3) * Fraction(8, 3) ** 3


def test_family_examples():
    assert azi(construct_b_prime(1)) == Fraction(9280, 27)
    assert azi(construct_u_prime(0)) == Fraction(4128, 27)
    assert azi(construct_u_prime(2)) == Fraction(6880, 27)
    with pytest.raises(FamilyError):
        construct_b_prime(-1)
    with pytest.raises(FamilyError):
        construct_u_prime(-1)
    assert FamilySpec("b-prime", (0,)).build() == construct_b_prime(0)


def test_psi_examples():
    g7 = construct_psi(7, "bicyclic")
    pr = degree_profile(g7)
    assert g7.m == 8 and azi(g7) == Fraction(1424, 27)
    assert pr.n_deg(4) == 2 and pr.n_deg(2) == 3 and pr.n_deg(1) == 2
    g8 = construct_psi(8, "unicyclic")
    assert azi(g8) == Fraction(1120, 27)
    assert azi(construct_psi(12, "unicyclic")) == Fraction(1680, 27) == wang_lower_bound(12, 12, 4)
    for bad in [(6, "bicyclic"), (8, "bicyclic"), (3, "bicyclic"), (6, "unicyclic"), (4, "unicyclic")]:
        with pytest.raises(FamilyError):
            construct_psi(*bad)


@pytest.mark.parametrize("n", [7, 11, 15, 19, 23])
def test_psi_bicyclic_attains_lower_bound(n):
    g = construct_psi(n, "bicyclic")
    assert is_chemical(g) and cyclomatic(g) == 2 and psi_membership(g) == (True, 4)
    assert azi(g) == Fraction(4, 27) * (35 * n + 111)


@pytest.mark.parametrize("n", [8, 12, 16, 20, 24])
def test_psi_unicyclic_attains_lower_bound(n):
    g = construct_psi(n, "unicyclic")
    assert is_chemical(g) and cyclomatic(g) == 1 and psi_membership(g) == (True, 4)
    assert azi(g) == Fraction(140 * n, 27)


def test_membership_predicates():
    assert psi_member(construct_psi(7, "bicyclic"))
    assert psi_membership(cycle_graph(6)) == (True, 2)
    assert not psi_member(construct_b_prime(0))
    assert phi1_member(PAW)
    assert phi2_member(cycle_graph(5))
    assert not phi1_member(complete_graph(4)) and not phi2_member(complete_graph(4))
    assert biregular(star_graph(4)) == (1, 4)
    assert biregular(cycle_graph(6)) is None
    assert biregular(PAW) is None


def test_lemma1_shapes():
    theta_adj = construct_lemma1("theta", 2, 2, 1)
    assert theta_adj.n == 4 and azi(theta_adj) == 32 + Fraction(729, 64)
    bowtie = construct_lemma1("shared-vertex-cycles", 3, 3)
    assert bowtie.n == 5 and azi(bowtie) == 48
    bridged = construct_lemma1("bridged-cycles", 3, 3, 1)
    assert bridged.n == 6 and azi(bridged) == 8 * 6 + Fraction(729, 64)
    assert azi(construct_lemma1("bridged-cycles", 3, 3, 2)) == 8 * 8
    assert azi(construct_lemma1("theta", 3, 2, 2)) == 8 * 7
    for g in (theta_adj, bowtie, bridged):
        assert cyclomatic(g) == 2 and 1 not in g.degrees
    with pytest.raises(FamilyError):
        construct_lemma1("theta", 1, 1, 3)
    with pytest.raises(FamilyError):
        construct_lemma1("bridged-cycles", 3, 3, 0)
    with pytest.raises(FamilyError):
        construct_lemma1("shared-vertex-cycles", 2, 3)


@pytest.mark.parametrize("a,b,c", [(2, 2, 1), (3, 3, 1), (5, 2, 1), (4, 3, 2), (3, 3, 3), (6, 2, 2)])
def test_theta_n3_prime(a, b, c):
    g = construct_lemma1("theta", a, b, c)
    adjacent = c == 1
    assert azi(g) == (8 * g.n + Fraction(729, 64) if adjacent else 8 * (g.n + 1))
    # each branch vertex sees at most one other vertex of degree > 2
    assert n3_prime(g) == 0
    assert n3_prime(construct_b_prime(0)) == 0
