"""Isomorph-free generation of small graphs by vertex augmentation.

Every graph on k+1 vertices arises from some graph on k vertices by adding
one vertex: any vertex for unrestricted graphs, a non-cut vertex when only
connected graphs are wanted.  Both the degree cap and the cycle rank can only
shrink under such deletions, so the constraints prune every level.  Each
level is deduplicated by canonical code, which keeps the output one graph per
isomorphism class regardless of how the work is split among processes.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional, Union

from .canon import MAX_CANON_ORDER, canonical_form, canonical_graph, canonical_labeling
from .graph import Graph, GraphError, complement, is_connected

MAX_ENUM_ORDER = MAX_CANON_ORDER


@dataclass(frozen=True)
class EnumSpec:
    """Constraints for one enumeration run.

    ``m`` is an exact edge count, an inclusive ``(lo, hi)`` range, or None.
    ``max_degree`` None means no cap.
    """

    n: int
    m: Union[int, tuple, None] = None
    max_degree: Optional[int] = None
    connected_only: bool = True
    complement_connected: bool = False

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ENUM_ORDER:
            raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUM_ORDER}, got {self.n}")
        lo, hi = self.edge_range
        if lo > hi:
            raise GraphError(f"empty edge range {self.m!r}")
        if self.connected_only and hi < self.n - 1:
            raise GraphError(f"no connected graph on {self.n} vertices has at most {hi} edges")
        if self.max_degree is not None and self.max_degree < 0:
            raise GraphError("max_degree must be non-negative")

    @property
    def edge_range(self) -> tuple:
        top = self.n * (self.n - 1) // 2
        if self.m is None:
            return (0, top)
        if isinstance(self.m, int):
            return (self.m, self.m)
        lo, hi = self.m
        return (max(0, lo), min(top, hi))

    @property
    def degree_cap(self) -> int:
        return self.n - 1 if self.max_degree is None else min(self.max_degree, self.n - 1)


def _children(args):
    """Canonical children of a batch of parents: list of (code, rows)."""
    parents, k, cap, e_hi, rank_hi, connected = args
    out = {}
    for rows in parents:
        deg = [r.bit_count() for r in rows]
        e = sum(deg) // 2
        open_vs = [v for v in range(k) if deg[v] < cap]
        budget = min(cap, e_hi - e, len(open_vs))
        if connected:
            rank = e - k + 1
            budget = min(budget, rank_hi - rank + 1)
        lo = 1 if connected else 0
        for size in range(lo, budget + 1):
            for nbrs in combinations(open_vs, size):
                new = list(rows)
                mask = 0
                for v in nbrs:
                    new[v] |= 1 << k
                    mask |= 1 << v
                new.append(mask)
                g = Graph._trusted(k + 1, tuple(new))
                order, code, _ = canonical_labeling(g)
                if code in out:
                    continue
                perm = [0] * (k + 1)
                for i, v in enumerate(order):
                    perm[v] = i
                out[code] = g.relabel(perm).rows
    return out


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("AZINDEX_WORKERS", "1")))
    except ValueError:
        return 1


@lru_cache(maxsize=64)
def _enumerate_cached(spec: EnumSpec, workers: int) -> tuple:
    n = spec.n
    cap = spec.degree_cap
    lo, hi = spec.edge_range
    rank_hi = hi - n + 1
    connected = spec.connected_only
    level = {0: (0,)}  # K1
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for k in range(1, n):
            parents = [level[c] for c in sorted(level)]
            chunks = _chunk(parents, workers * 4 if pool else 1)
            jobs = [(chunk, k, cap, hi, rank_hi, connected) for chunk in chunks]
            results = pool.map(_children, jobs) if pool else map(_children, jobs)
            merged = {}
            for part in results:
                for code, rows in part.items():
                    merged.setdefault(code, rows)
            level = merged
    finally:
        if pool:
            pool.shutdown()
    out = []
    for code in sorted(level):
        g = Graph._trusted(n, level[code])
        if not lo <= g.m <= hi:
            continue
        if connected and not is_connected(g):
            continue
        if spec.complement_connected and not is_connected(complement(g)):
            continue
        out.append(g)
    return tuple(out)


def _chunk(items, parts):
    parts = max(1, min(parts, len(items)))
    size = -(-len(items) // parts) if items else 1
    return [items[i:i + size] for i in range(0, len(items), size)] or [[]]


def enumerate_graphs(spec: EnumSpec, workers: Optional[int] = None) -> Iterator[Graph]:
    """Yield one canonically labelled representative per isomorphism class.

    Output is sorted by canonical key and does not depend on ``workers``.
    Each call returns a fresh iterator over the same sequence.
    """
    if workers is None:
        workers = _default_workers()
    return iter(_enumerate_cached(spec, max(1, int(workers))))


def count_graphs(spec: EnumSpec, workers: Optional[int] = None) -> int:
    return sum(1 for _ in enumerate_graphs(spec, workers))


def chemical_class(n: int, cyclomatic_number: int, workers: Optional[int] = None) -> list:
    """All chemical graphs (connected, Δ <= 4) on n vertices with the given cycle rank."""
    return list(enumerate_graphs(EnumSpec(n, n - 1 + cyclomatic_number, 4), workers))


def unicyclic_chemical(n: int, workers: Optional[int] = None) -> list:
    return chemical_class(n, 1, workers)


def bicyclic_chemical(n: int, workers: Optional[int] = None) -> list:
    return chemical_class(n, 2, workers)


def connected_graphs(n: int, workers: Optional[int] = None) -> list:
    return list(enumerate_graphs(EnumSpec(n), workers))


__all__ = [
    "EnumSpec",
    "enumerate_graphs",
    "count_graphs",
    "canonical_form",
    "canonical_graph",
    "chemical_class",
    "unicyclic_chemical",
    "bicyclic_chemical",
    "connected_graphs",
]
