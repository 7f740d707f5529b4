"""Canonical labelling by partition refinement and backtracking.

The search individualises vertices of the first smallest non-singleton cell
of an equitable ordered partition, refines, and recurses.  Each leaf fixes a
vertex order; the canonical order is the one whose graph6-ordered adjacency
bit string is lexicographically smallest.  Automorphisms found when two
leaves give the same string prune siblings lying in a common orbit.
"""

from __future__ import annotations

from .graph import Graph, GraphError

MAX_CANON_ORDER = 16


def _refine(rows, cells):
    """Refine an ordered partition until equitable.

    ``cells`` is a list of tuples.  Splitting is label-invariant: a cell is
    cut by the vector of neighbour counts into every current cell, and the
    pieces are placed in increasing order of that vector.
    """
    while True:
        masks = []
        for c in cells:
            mk = 0
            for v in c:
                mk |= 1 << v
            masks.append(mk)
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups = {}
            for v in c:
                r = rows[v]
                sig = tuple((r & mk).bit_count() for mk in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
                continue
            split = True
            for sig in sorted(groups):
                out.append(tuple(groups[sig]))
        cells = out
        if not split:
            return cells


def _leaf_code(rows, order):
    n = len(order)
    code = 0
    for j in range(1, n):
        rj = rows[order[j]]
        for i in range(j):
            code = (code << 1) | ((rj >> order[i]) & 1)
    return code


def _orbit_roots(gens, n, fixed):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        if any(g[v] != v for v in fixed):
            continue
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return find


def canonical_labeling(g: Graph):
    """Return ``(order, code, generators)`` for ``g``.

    ``order[i]`` is the vertex placed at canonical position i, ``code`` the
    adjacency bit string of the relabelled graph as an int, and
    ``generators`` a list of automorphisms (tuples mapping v -> image) found
    during the search.
    """
    n = g.n
    rows = g.rows
    if n == 0:
        return (), 0, []
    start = _refine(rows, _split_by_degree(g))
    best = [None, None]
    seen = {}
    gens = []

    def search(cells, prefix):
        # returns the depth to resume at when a whole subtree proved redundant
        if len(cells) == n:
            order = tuple(c[0] for c in cells)
            code = _leaf_code(rows, order)
            prev = seen.get(code)
            if prev is not None:
                # equal codes: prev_order[i] -> order[i] is an automorphism
                prev_order, prev_path = prev
                auto = [0] * n
                for a, b in zip(prev_order, order):
                    auto[a] = b
                gens.append(tuple(auto))
                d = 0
                while d < len(prefix) and prefix[d] == prev_path[d]:
                    d += 1
                return d
            seen[code] = (order, prefix)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return None
        depth = len(prefix)
        idx = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        target = cells[idx]
        tried = []
        for v in target:
            if tried:
                find = _orbit_roots(gens, n, prefix)
                rv = find(v)
                if any(find(w) == rv for w in tried):
                    continue
            tried.append(v)
            rest = tuple(w for w in target if w != v)
            child = cells[:idx] + [(v,), rest] + cells[idx + 1:]
            jump = search(_refine(rows, child), prefix + (v,))
            if jump is not None and jump < depth:
                return jump
        return None

    search(start, ())
    return best[1], best[0], gens


def _split_by_degree(g: Graph):
    by = {}
    for v, d in enumerate(g.degrees):
        by.setdefault(d, []).append(v)
    return [tuple(by[d]) for d in sorted(by)]


def canonical_code(g: Graph):
    """Relabelling-invariant ``(n, code)`` pair; no order limit."""
    _, code, _ = canonical_labeling(g)
    return (g.n, code)


def canonical_graph(g: Graph) -> Graph:
    order, _, _ = canonical_labeling(g)
    perm = [0] * g.n
    for i, v in enumerate(order or ()):
        perm[v] = i
    return g.relabel(perm)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-class key: the graph6 bytes of the canonical relabelling.

    Keys of equal order compare like the adjacency bit strings they encode.
    """
    if g.n > MAX_CANON_ORDER:
        raise GraphError(f"canonical_form supports n <= {MAX_CANON_ORDER}, got {g.n}")
    from .report import to_graph6

    return to_graph6(canonical_graph(g)).encode("ascii")


def automorphism_generators(g: Graph) -> list:
    return canonical_labeling(g)[2]


def orbits(g: Graph) -> list:
    """Vertex orbits of the automorphism group, as sorted tuples."""
    find = _orbit_roots(automorphism_generators(g), g.n, ())
    groups = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(tuple(c) for c in groups.values())
