"""Undirected simple graphs stored as per-vertex neighbour bitsets."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

MAX_ORDER = 1024


class GraphError(ValueError):
    """Invalid graph construction or an operation outside its domain."""


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``rows[u]`` is an int whose bit ``v`` is set iff ``uv`` is an edge.
    Equality and hashing are labelled (same n, same edge set); use
    :func:`isomorphic` for the unlabelled notion.
    """

    __slots__ = ("n", "rows", "_degrees")

    def __init__(self, n: int, rows: Iterable[int] = ()):
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside supported range 0..{MAX_ORDER}")
        rows = tuple(rows) if rows else (0,) * n
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for u, r in enumerate(rows):
            if r & ~full or r < 0:
                raise GraphError(f"row {u} references a vertex outside 0..{n - 1}")
            if (r >> u) & 1:
                raise GraphError(f"self-loop at vertex {u}")
            w = r
            while w:
                low = w & -w
                v = low.bit_length() - 1
                if not (rows[v] >> u) & 1:
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")
                w ^= low
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_degrees", tuple(r.bit_count() for r in rows))

    @classmethod
    def _trusted(cls, n: int, rows: tuple) -> "Graph":
        # skips validation; callers guarantee a symmetric, loop-free row tuple
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        object.__setattr__(g, "_degrees", tuple(r.bit_count() for r in rows))
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return (Graph._trusted, (self.n, self.rows))

    @property
    def m(self) -> int:
        return sum(self._degrees) // 2

    @property
    def degrees(self) -> tuple:
        return self._degrees

    def degree(self, u: int) -> int:
        return self._degrees[u]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, u: int) -> list:
        return list(_bits(self.rows[u]))

    def edges(self) -> list:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        out = []
        for u, r in enumerate(self.rows):
            for v in _bits(r >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def relabel(self, perm) -> "Graph":
        """Return the graph with vertex ``u`` renamed to ``perm[u]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        rows = [0] * self.n
        for u, r in enumerate(self.rows):
            pu = perm[u]
            acc = 0
            for v in _bits(r):
                acc |= 1 << perm[v]
            rows[pu] = acc
        return Graph._trusted(self.n, tuple(rows))


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def from_edges(n: int, edges: Iterable) -> Graph:
    """Build a graph from an explicit edge list, rejecting loops and repeats."""
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside supported range 0..{MAX_ORDER}")
    rows = [0] * n
    for e in edges:
        u, v = (int(x) for x in e)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if (rows[u] >> v) & 1:
            raise GraphError(f"duplicate edge ({u}, {v})")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(n, tuple(rows))


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full ^ (1 << u) for u in range(n)))


def star_graph(leaves: int) -> Graph:
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def circulant_graph(n: int, offsets: Iterable[int]) -> Graph:
    edges = set()
    for i in range(n):
        for d in offsets:
            j = (i + d) % n
            if i != j:
                edges.add((min(i, j), max(i, j)))
    return from_edges(n, sorted(edges))


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._trusted(g.n, tuple(full ^ r ^ (1 << u) for u, r in enumerate(g.rows)))


def component_mask(g: Graph, start: int = 0) -> int:
    """Bitmask of the vertices reachable from ``start``."""
    seen = 1 << start
    frontier = seen
    rows = g.rows
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= rows[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise GraphError("connectivity is undefined for the empty graph")
    return component_mask(g) == (1 << g.n) - 1


def cyclomatic(g: Graph) -> int:
    """Cycle rank ``m - n + 1`` of a connected graph."""
    if not is_connected(g):
        raise GraphError("cyclomatic number requires a connected graph")
    return g.m - g.n + 1


def is_chemical(g: Graph) -> bool:
    return g.n > 0 and is_connected(g) and max(g.degrees, default=0) <= 4


@dataclass(frozen=True)
class DegreeProfile:
    """Degree statistics consumed by the index and bound formulas.

    ``min_nonpendant_degree`` is ``None`` when no vertex has degree >= 2.
    ``vertex_counts[i]`` is the number of degree-i vertices, i = 0..Δ;
    ``edge_counts[(i, j)]`` (i <= j) the number of edges joining degrees i and j.
    """

    degrees: tuple
    max_degree: int
    min_degree: int
    min_nonpendant_degree: Optional[int]
    pendant_count: int
    vertex_counts: tuple
    edge_counts: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    def n_deg(self, i: int) -> int:
        return self.vertex_counts[i] if 0 <= i < len(self.vertex_counts) else 0

    def x(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        return self.edge_counts.get((i, j), 0)


def degree_profile(g: Graph) -> DegreeProfile:
    deg = g.degrees
    top = max(deg, default=0)
    counts = [0] * (top + 1)
    for d in deg:
        counts[d] += 1
    nonpendant = [d for d in deg if d >= 2]
    edge_counts = Counter()
    for u, v in g.edges():
        a, b = deg[u], deg[v]
        edge_counts[(a, b) if a <= b else (b, a)] += 1
    return DegreeProfile(
        degrees=deg,
        max_degree=top,
        min_degree=min(deg, default=0),
        min_nonpendant_degree=min(nonpendant) if nonpendant else None,
        pendant_count=counts[1] if top >= 1 else 0,
        vertex_counts=tuple(counts),
        edge_counts=dict(sorted(edge_counts.items())),
    )


def n3_prime(g: Graph) -> int:
    """Count degree-3 vertices with at least two neighbours of degree > 2."""
    deg = g.degrees
    total = 0
    for u in range(g.n):
        if deg[u] == 3 and sum(1 for v in _bits(g.rows[u]) if deg[v] > 2) >= 2:
            total += 1
    return total


def isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m or sorted(a.degrees) != sorted(b.degrees):
        return False
    from .canon import canonical_code

    return canonical_code(a) == canonical_code(b)
