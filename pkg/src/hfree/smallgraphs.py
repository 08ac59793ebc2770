"""Exhaustive small-graph enumeration, up to isomorphism, plus targeted
searches over degree-constrained families.

Enumeration works level by level: every n-vertex graph arises from some
(n-1)-vertex graph by attaching one new vertex, so each level extends the
previous one and dedupes with a color-refinement signature followed by an
exact isomorphism check inside each signature bucket.  Everything is
deterministic, so the enumeration order (and any "first hit" search over
it) is stable across runs.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator

from .graphs import Graph, are_isomorphic, edge, t_diamond


def refinement_signature(g: Graph) -> tuple:
    """Isomorphism-invariant bucket key via iterated degree refinement."""
    colors = list(g.degrees)
    for _ in range(g.n):
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in g.adj[v]))) for v in g.vertices
        ]
        palette = {key: i for i, key in enumerate(sorted(set(keys)))}
        new = [palette[k] for k in keys]
        if new == colors:
            break
        colors = new
    return (g.n, g.m, tuple(sorted(colors)))


@lru_cache(maxsize=None)
def graphs_with_vertex_count(n: int) -> tuple[Graph, ...]:
    """All graphs on exactly n vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError("need at least 1 vertex")
    if n == 1:
        return (Graph(1),)
    out: list[Graph] = []
    buckets: dict[tuple, list[Graph]] = {}
    for base in graphs_with_vertex_count(n - 1):
        for r in range(n):
            for attach in itertools.combinations(range(n - 1), r):
                g = Graph(n, base.edges | {(u, n - 1) for u in attach})
                sig = refinement_signature(g)
                bucket = buckets.setdefault(sig, [])
                if not any(are_isomorphic(g, seen) for seen in bucket):
                    bucket.append(g)
                    out.append(g)
    return tuple(out)


def graphs_up_to(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from graphs_with_vertex_count(n)


def realizations(degrees: tuple[int, ...]) -> Iterator[Graph]:
    """All labeled graphs with the exact degree sequence (vertex i gets
    degrees[i]).  Plain backtracking; meant for small n."""
    n = len(degrees)
    residual = list(degrees)
    chosen: list[tuple[int, int]] = []

    def rec(v: int) -> Iterator[Graph]:
        if v == n:
            if all(x == 0 for x in residual):
                yield Graph(n, frozenset(chosen))
            return
        need = residual[v]
        if need == 0:
            yield from rec(v + 1)
            return
        cands = [u for u in range(v + 1, n) if residual[u] > 0]
        if need > len(cands):
            return
        for combo in itertools.combinations(cands, need):
            for u in combo:
                residual[u] -= 1
            residual[v] = 0
            chosen.extend((v, u) for u in combo)
            yield from rec(v + 1)
            del chosen[-need:]
            residual[v] = need
            for u in combo:
                residual[u] += 1

    yield from rec(0)


def _capped_two_class_realizations(
    n: int, low: int, high: int, high_count: int, cap_high: int, cap_low: int
) -> Iterator[Graph]:
    # Vertices 0..high_count-1 get degree `high`, the rest `low`; prune any
    # partial graph whose within-class edge counts exceed the caps.
    degrees = [high] * high_count + [low] * (n - high_count)
    residual = list(degrees)
    chosen: list[tuple[int, int]] = []
    counts = {"high": 0, "low": 0}

    def cls(v: int) -> str:
        return "high" if v < high_count else "low"

    def rec(v: int) -> Iterator[Graph]:
        if v == n:
            if all(x == 0 for x in residual):
                yield Graph(n, frozenset(chosen))
            return
        need = residual[v]
        if need == 0:
            yield from rec(v + 1)
            return
        cands = [u for u in range(v + 1, n) if residual[u] > 0]
        if need > len(cands):
            return
        for combo in itertools.combinations(cands, need):
            same = [u for u in combo if cls(u) == cls(v)]
            bump = len(same)
            if bump and counts[cls(v)] + bump > (cap_high if cls(v) == "high" else cap_low):
                continue
            counts[cls(v)] += bump
            for u in combo:
                residual[u] -= 1
            residual[v] = 0
            chosen.extend((v, u) for u in combo)
            yield from rec(v + 1)
            del chosen[-need:]
            residual[v] = need
            for u in combo:
                residual[u] += 1
            counts[cls(v)] -= bump

    yield from rec(0)


@lru_cache(maxsize=None)
def find_sparse_witness(
    edges_in_high: int,
    edges_in_low: int,
    exclude_t_diamond: bool = False,
    max_n: int = 8,
) -> Graph:
    """First graph (in a fixed exhaustive order) whose degrees take exactly
    two values h > l >= 2, whose degree classes carry exactly the requested
    within-class edge counts, optionally excluding the t-diamond family.

    Only graphs with two-valued degree sequences can qualify, so the search
    enumerates exactly those, smallest vertex count first.
    """
    from .classify import recognize_sparse_lh

    for n in range(4, max_n + 1):
        for low in range(2, n - 1):
            for high in range(low + 1, n):
                for high_count in range(1, n):
                    if (high * high_count + low * (n - high_count)) % 2:
                        continue
                    for g in _capped_two_class_realizations(
                        n, low, high, high_count, edges_in_high, edges_in_low
                    ):
                        shape = recognize_sparse_lh(g)
                        if shape is None:
                            continue
                        if (
                            shape.edges_in_high != edges_in_high
                            or shape.edges_in_low != edges_in_low
                        ):
                            continue
                        if exclude_t_diamond and are_isomorphic(g, t_diamond(g.n - 2)):
                            continue
                        return g
    raise LookupError(
        f"no two-valued-degree graph up to {max_n} vertices with "
        f"{edges_in_high} high-class and {edges_in_low} low-class edges"
    )
