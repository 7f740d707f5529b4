"""Extremal graph families, family membership tests and the local moves
(subdivision, pendant-path attachment, smoothing) with their F deltas."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from .graph import Graph, GraphError, _bits, from_edges
from .indices import theta_tilde


class FamilyError(GraphError):
    """Parameters outside a constructor's domain."""


class Family(str, Enum):
    B_PRIME = "b-prime"
    U_PRIME = "u-prime"
    PSI_UNICYCLIC = "psi-unicyclic"
    PSI_BICYCLIC = "psi-bicyclic"
    THETA_GRAPH = "theta"
    TWO_CYCLES_BRIDGED = "bridged-cycles"
    TWO_CYCLES_SHARED_VERTEX = "shared-vertex-cycles"


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: tuple = field(default_factory=tuple)

    def build(self) -> Graph:
        f = Family(self.family)
        if f is Family.B_PRIME:
            return construct_b_prime(*self.params)
        if f is Family.U_PRIME:
            return construct_u_prime(*self.params)
        if f is Family.PSI_UNICYCLIC:
            return construct_psi(*self.params, "unicyclic")
        if f is Family.PSI_BICYCLIC:
            return construct_psi(*self.params, "bicyclic")
        return construct_lemma1(f, *self.params)


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges = []

    def vertex(self) -> int:
        self.n += 1
        return self.n - 1

    def edge(self, u: int, v: int):
        self.edges.append((u, v))

    def path_from(self, u: int, length: int) -> int:
        """Hang a path with ``length`` new vertices off u; return its far end."""
        for _ in range(length):
            w = self.vertex()
            self.edge(u, w)
            u = w
        return u

    def graph(self) -> Graph:
        return from_edges(self.n, self.edges)


def _dress_core(b: _Builder, core: list, core_degree: dict):
    for v in core:
        for _ in range(4 - core_degree[v]):
            b.path_from(v, 2)


def construct_b_prime(k: int) -> Graph:
    """Bicyclic graph on 5k + 26 vertices attaining the bicyclic upper bound.

    Core: two triangles joined by a path with k internal vertices, so k + 6
    degree-4 core vertices and k + 7 core edges; every core vertex is then
    filled up to degree 4 with pendant two-vertex paths.
    """
    if k < 0:
        raise FamilyError(f"k must be >= 0, got {k}")
    b = _Builder()
    t1 = [b.vertex() for _ in range(3)]
    t2 = [b.vertex() for _ in range(3)]
    for tri in (t1, t2):
        b.edge(tri[0], tri[1])
        b.edge(tri[1], tri[2])
        b.edge(tri[0], tri[2])
    inner = [b.vertex() for _ in range(k)]
    chain = [t1[0]] + inner + [t2[0]]
    for u, v in zip(chain, chain[1:]):
        b.edge(u, v)
    core = t1 + t2 + inner
    deg = {v: 2 for v in core}
    deg[t1[0]] = deg[t2[0]] = 3
    _dress_core(b, core, deg)
    return b.graph()


def construct_u_prime(k: int) -> Graph:
    """Unicyclic graph on 5k + 15 vertices attaining the unicyclic upper bound.

    Core: a cycle of k + 3 vertices, each carrying two pendant two-vertex paths.
    """
    if k < 0:
        raise FamilyError(f"k must be >= 0, got {k}")
    b = _Builder()
    core = [b.vertex() for _ in range(k + 3)]
    for i, v in enumerate(core):
        b.edge(v, core[(i + 1) % len(core)])
    _dress_core(b, core, {v: 2 for v in core})
    return b.graph()


def construct_psi(n: int, cls: str) -> Graph:
    """A member of Psi_{n,m,4} (m = n or n + 1) built as a chain of degree-4 hubs.

    Solving hubs*4 = m, 2*connectors + pendants = m, hubs + connectors +
    pendants = n gives m/4 hubs and (m - n) + m/4 degree-2 connectors.
    Unicyclic: hubs on a ring, consecutive hubs sharing one connector.
    Bicyclic: first two hubs share three connectors, the rest form a chain.
    """
    if cls == "unicyclic":
        if n % 4 != 0 or n < 8:
            raise FamilyError(f"unicyclic Psi needs n ≡ 0 (mod 4) and n >= 8, got {n}")
        m = n
    elif cls == "bicyclic":
        if n % 4 != 3 or n < 7:
            raise FamilyError(f"bicyclic Psi needs n ≡ 3 (mod 4) and n >= 7, got {n}")
        m = n + 1
    else:
        raise FamilyError(f"class must be 'unicyclic' or 'bicyclic', got {cls!r}")
    hubs_count = m // 4
    b = _Builder()
    hubs = [b.vertex() for _ in range(hubs_count)]
    used = {h: 0 for h in hubs}

    def connect(x, y):
        c = b.vertex()
        b.edge(x, c)
        b.edge(c, y)
        used[x] += 1
        used[y] += 1

    if cls == "unicyclic":
        for i, h in enumerate(hubs):
            connect(h, hubs[(i + 1) % hubs_count])
    else:
        for _ in range(3):
            connect(hubs[0], hubs[1])
        for x, y in zip(hubs[1:], hubs[2:]):
            connect(x, y)
    for h in hubs:
        for _ in range(4 - used[h]):
            b.path_from(h, 1)
    g = b.graph()
    assert g.n == n and g.m == m
    return g


def psi_membership(g: Graph) -> tuple:
    """(verdict, Δ): every edge joins a degree-Δ vertex to a degree-1-or-2 vertex."""
    deg = g.degrees
    top = max(deg, default=0)
    if g.m == 0:
        return False, top
    for u, v in g.edges():
        a, b = deg[u], deg[v]
        if not ((a == top and b in (1, 2)) or (b == top and a in (1, 2))):
            return False, top
    return True, top


def psi_member(g: Graph) -> bool:
    return psi_membership(g)[0]


def phi1_member(g: Graph) -> bool:
    """Pendant edges meet maximum-degree vertices; other edges touch degree 2."""
    deg = g.degrees
    top = max(deg, default=0)
    if g.m == 0:
        return False
    for u, v in g.edges():
        a, b = sorted((deg[u], deg[v]))
        if a == 1:
            if b != top:
                return False
        elif a != 2 and b != 2:
            return False
    return True


def phi2_member(g: Graph) -> bool:
    """No pendant vertices and every edge has an end of degree 2."""
    deg = g.degrees
    if g.m == 0 or 1 in deg:
        return False
    return all(deg[u] == 2 or deg[v] == 2 for u, v in g.edges())


def biregular(g: Graph) -> Optional[tuple]:
    """(δ, Δ) when exactly two distinct degrees occur, else None."""
    ds = sorted(set(g.degrees))
    return (ds[0], ds[1]) if len(ds) == 2 else None


def construct_lemma1(shape, *params) -> Graph:
    """Pendant-free bicyclic shapes.

    THETA_GRAPH(a, b, c): two branch vertices joined by internally disjoint
    paths of lengths a >= b >= c >= 1 (at most one of length 1).
    TWO_CYCLES_BRIDGED(a, b, k): cycles C_a, C_b joined by a path of length k >= 1.
    TWO_CYCLES_SHARED_VERTEX(a, b): cycles C_a, C_b sharing one vertex.
    """
    shape = Family(shape)
    b = _Builder()
    if shape is Family.THETA_GRAPH:
        if len(params) != 3:
            raise FamilyError("theta graph takes three path lengths")
        a, bb, c = sorted(params, reverse=True)
        if c < 1 or bb < 2:
            raise FamilyError(f"path lengths {params} would create a multi-edge or loop")
        x, y = b.vertex(), b.vertex()
        for length in (a, bb, c):
            if length == 1:
                b.edge(x, y)
            else:
                end = b.path_from(x, length - 1)
                b.edge(end, y)
        return b.graph()
    if shape is Family.TWO_CYCLES_BRIDGED:
        if len(params) != 3:
            raise FamilyError("bridged cycles take (a, b, k)")
        ca, cb, k = params
        if ca < 3 or cb < 3 or k < 1:
            raise FamilyError(f"need cycle lengths >= 3 and bridge length >= 1, got {params}")
        x = _cycle(b, ca)
        y = _cycle(b, cb)
        end = b.path_from(x, k - 1)
        b.edge(end, y)
        return b.graph()
    if shape is Family.TWO_CYCLES_SHARED_VERTEX:
        if len(params) != 2:
            raise FamilyError("shared-vertex cycles take (a, b)")
        ca, cb = params
        if ca < 3 or cb < 3:
            raise FamilyError(f"need cycle lengths >= 3, got {params}")
        hub = _cycle(b, ca)
        end = b.path_from(hub, cb - 1)
        b.edge(end, hub)
        return b.graph()
    raise FamilyError(f"{shape} is not a pendant-free bicyclic shape")


def _cycle(b: _Builder, length: int) -> int:
    first = b.vertex()
    end = b.path_from(first, length - 1)
    b.edge(end, first)
    return first


# local moves ------------------------------------------------------------------

def _rows_with(g: Graph, extra: int) -> list:
    return list(g.rows) + [0] * extra


def _add(rows, u, v):
    rows[u] |= 1 << v
    rows[v] |= 1 << u


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    """Replace edge uv by a path u - w - v through a new vertex w = n."""
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    rows = _rows_with(g, 1)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    _add(rows, u, g.n)
    _add(rows, v, g.n)
    return Graph._trusted(g.n + 1, tuple(rows))


def attach_p2_path(g: Graph, u: int, chemical: bool = False) -> Graph:
    """Append the path u - u1 - u2 with new vertices n and n + 1."""
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} out of range")
    if chemical and g.degree(u) >= 4:
        raise GraphError(f"vertex {u} already has degree {g.degree(u)}; result would not be chemical")
    rows = _rows_with(g, 2)
    _add(rows, u, g.n)
    _add(rows, g.n, g.n + 1)
    return Graph._trusted(g.n + 2, tuple(rows))


def smooth_degree2(g: Graph, u: int) -> Graph:
    """Remove a degree-2 vertex u and join its two (non-adjacent) neighbours."""
    if not 0 <= u < g.n or g.degree(u) != 2:
        raise GraphError(f"vertex {u} does not have degree 2")
    v, w = g.neighbors(u)
    if g.has_edge(v, w):
        raise GraphError(f"neighbours {v} and {w} of {u} are already adjacent")
    keep = [x for x in range(g.n) if x != u]
    index = {x: i for i, x in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in g.edges() if u not in (a, b)]
    edges.append((index[v], index[w]))
    return from_edges(g.n - 1, edges)


def subdivide_f_delta(g: Graph, u: int, v: int) -> Fraction:
    """Change of the edge sum of theta_tilde caused by subdividing uv."""
    du, dv = g.degree(u), g.degree(v)
    return theta_tilde(du, 2) + theta_tilde(2, dv) - theta_tilde(du, dv)


def attach_f_delta(g: Graph, u: int) -> Fraction:
    """Change of the theta_tilde sum caused by attach_p2_path at u."""
    deg = g.degrees
    d = deg[u]
    delta = theta_tilde(d + 1, 2) + theta_tilde(2, 1)
    for x in _bits(g.rows[u]):
        delta += theta_tilde(d + 1, deg[x]) - theta_tilde(d, deg[x])
    return delta


def smooth_f_delta(g: Graph, u: int) -> Fraction:
    """Change of the theta_tilde sum caused by smoothing the degree-2 vertex u."""
    v, w = g.neighbors(u)
    dv, dw = g.degree(v), g.degree(w)
    return theta_tilde(dv, dw) - theta_tilde(2, dv) - theta_tilde(2, dw)
