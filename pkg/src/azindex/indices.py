"""Degree-based indices and closed-form bounds.

AZI and everything compared against it are exact rationals.  ABC involves
square roots and is the only floating-point quantity here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Optional

from .graph import Graph, GraphError, complement, cyclomatic, degree_profile, is_connected


class DegenerateEdge(GraphError):
    """An edge joins two pendant vertices, so its AZI weight divides by zero."""


class IndexDomainError(GraphError):
    """Bound or index evaluated outside the domain where it is defined."""


@lru_cache(maxsize=None)
def theta(i: int, j: int) -> Fraction:
    """AZI edge weight (ij / (i + j - 2))^3 for an edge between degrees i and j."""
    if i < 1 or j < 1:
        raise IndexDomainError(f"degrees must be positive, got ({i}, {j})")
    if i == 1 and j == 1:
        raise DegenerateEdge("theta(1, 1) is undefined (edge between two pendant vertices)")
    if i > j:
        return theta(j, i)
    return Fraction(i * j, i + j - 2) ** 3


def theta_tilde(i: int, j: int) -> Fraction:
    """Deficiency 8 - theta(i, j); zero whenever one endpoint has degree 2."""
    return 8 - theta(i, j)


def _edge_degrees(g: Graph):
    deg = g.degrees
    return [(deg[u], deg[v]) for u, v in g.edges()]


def azi(g: Graph) -> Fraction:
    """Augmented Zagreb index, exact."""
    pairs = _edge_degrees(g)
    if not pairs:
        raise IndexDomainError("AZI of a graph without edges is undefined")
    total = Fraction(0)
    for a, b in pairs:
        if a == 1 and b == 1:
            raise DegenerateEdge("edge between two pendant vertices (a K2 component)")
        total += theta(a, b)
    return total


def azi_from_profile(profile) -> Fraction:
    """Class-sum form: sum of x_{i,j} * theta(i, j)."""
    return sum((c * theta(i, j) for (i, j), c in profile.edge_counts.items()), Fraction(0))


def abc(g: Graph) -> float:
    """Atom-bond connectivity index (floating point)."""
    pairs = _edge_degrees(g)
    if not pairs:
        raise IndexDomainError("ABC of a graph without edges is undefined")
    return math.fsum(math.sqrt((a + b - 2) / (a * b)) for a, b in pairs)


def f_functional(g: Graph) -> Fraction:
    """Sum of theta_tilde over the edges, i.e. 8m - AZI."""
    total = Fraction(0)
    deg = g.degrees
    for u, v in g.edges():
        total += theta_tilde(deg[u], deg[v])
    return total


def f_bicyclic(g: Graph) -> Fraction:
    """F(B) = 8(n + 1) - AZI(B) for a connected bicyclic graph."""
    if g.n == 0 or not is_connected(g) or cyclomatic(g) != 2:
        raise IndexDomainError("f_bicyclic needs a connected bicyclic graph")
    value = f_functional(g)
    check = 8 * (g.n + 1) - azi(g)
    if value != check:  # pragma: no cover - algebraic identity
        raise AssertionError(f"edge-sum F {value} differs from 8(n+1) - AZI = {check}")
    return value


# closed-form bounds ---------------------------------------------------------

def wang_lower_bound(n: int, m: int, max_degree: int) -> Fraction:
    """Lower bound on AZI of a connected graph from order, size and Δ."""
    d = max_degree
    if d < 2:
        raise IndexDomainError(f"bound needs max degree >= 2, got {d}")
    if n < 3 or d > n - 1:
        raise IndexDomainError(f"bound needs n >= 3 and Δ <= n - 1 (n={n}, Δ={d})")
    q = Fraction(2 * m, d)
    return Fraction(d, d - 1) ** 3 * (2 * n - m - q) + 8 * (2 * m - 2 * n + q)


def huang_upper_bound(m: int, max_degree: int) -> Fraction:
    """Upper bound m Δ^6 / (8 (Δ - 1)^3)."""
    d = max_degree
    if d <= 1:
        raise IndexDomainError(f"bound needs max degree >= 2, got {d}")
    if m < 2:
        raise IndexDomainError(f"bound needs m >= 2, got {m}")
    return Fraction(m * d**6, 8 * (d - 1) ** 3)


def _regular_weight(d: int) -> Fraction:
    return Fraction(d * d, 2 * d - 2) ** 3


def wang_pendant_lower_bound(m: int, p: int, max_degree: int, min_nonpendant: Optional[int]) -> Fraction:
    """Pendant-aware lower bound p (Δ/(Δ-1))^3 + (m - p) (δ1²/(2δ1 - 2))^3.

    When every edge is pendant (m == p) the second term is taken as 0 and
    ``min_nonpendant`` may be None; otherwise it must be at least 2.
    """
    if not 0 <= p <= m:
        raise IndexDomainError(f"need 0 <= p <= m (p={p}, m={m})")
    if max_degree < 2:
        raise IndexDomainError(f"bound needs max degree >= 2, got {max_degree}")
    head = p * Fraction(max_degree, max_degree - 1) ** 3
    if m == p:
        return head
    if min_nonpendant is None:
        raise IndexDomainError("minimum non-pendant degree is undefined")
    if min_nonpendant < 2:
        raise IndexDomainError(f"minimum non-pendant degree must be >= 2, got {min_nonpendant}")
    return head + (m - p) * _regular_weight(min_nonpendant)


@dataclass(frozen=True)
class NgInputs:
    """Statistics of a graph/complement pair feeding the two-sided sum bound."""

    n: int
    p: int
    p_bar: int
    alpha: int
    beta: int

    @classmethod
    def from_graph(cls, g: Graph) -> "NgInputs":
        a = degree_profile(g)
        b = degree_profile(complement(g))
        if a.min_nonpendant_degree is None or b.min_nonpendant_degree is None:
            raise IndexDomainError("minimum non-pendant degree undefined for G or its complement")
        return cls(
            n=g.n,
            p=a.pendant_count,
            p_bar=b.pendant_count,
            alpha=min(a.min_nonpendant_degree, b.min_nonpendant_degree),
            beta=max(a.max_degree, b.max_degree),
        )


def ng_bounds(inp: NgInputs) -> tuple:
    """(lower, upper) bounds on AZI(G) + AZI(complement of G)."""
    n = inp.n
    if n <= 3:
        raise IndexDomainError(f"bound divides by n - 3; need n >= 4, got {n}")
    if inp.alpha < 2 or inp.beta < 2:
        raise IndexDomainError(f"need alpha, beta >= 2 (alpha={inp.alpha}, beta={inp.beta})")
    pairs = comb(n, 2)
    pendant_term = (
        (inp.p + inp.p_bar)
        * Fraction(n - 2, n - 3) ** 3
        * (1 - Fraction(n - 2, 2) ** 3)
    )
    lower = pendant_term + pairs * _regular_weight(inp.alpha)
    upper = pairs * _regular_weight(inp.beta)
    return lower, upper


def bicyclic_lower_bound(n: int) -> Fraction:
    return Fraction(4, 27) * (35 * n + 111)


def bicyclic_upper_bound(n: int) -> Fraction:
    return Fraction(1376, 135) * n + Fraction(416, 15)


def bicyclic_bounds(n: int) -> tuple:
    """Two-sided bound for chemical bicyclic graphs of order n."""
    if n < 4:
        raise IndexDomainError(f"no bicyclic graph has fewer than 4 vertices (n={n})")
    return bicyclic_lower_bound(n), bicyclic_upper_bound(n)


def bicyclic_lower_candidates(n: int) -> dict:
    """The general lower bound at m = n + 1 for each admissible chemical Δ."""
    return {d: wang_lower_bound(n, n + 1, d) for d in (3, 4) if d <= n - 1}


def unicyclic_bounds(n: int) -> tuple:
    """Two-sided bound for chemical unicyclic graphs of order n."""
    if n < 3:
        raise IndexDomainError(f"no unicyclic graph has fewer than 3 vertices (n={n})")
    return Fraction(140, 27) * n, Fraction(1376, 135) * n


# graph-level conveniences ----------------------------------------------------

def wang_lower_bound_of(g: Graph) -> Fraction:
    return wang_lower_bound(g.n, g.m, max(g.degrees))


def huang_upper_bound_of(g: Graph) -> Fraction:
    return huang_upper_bound(g.m, max(g.degrees))


def wang_pendant_lower_bound_of(g: Graph) -> Fraction:
    pr = degree_profile(g)
    return wang_pendant_lower_bound(pr.m, pr.pendant_count, pr.max_degree, pr.min_nonpendant_degree)
