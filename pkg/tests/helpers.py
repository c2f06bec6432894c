"""Shared test utilities: independent reference oracles and generators.

Everything here is deliberately written against the definitions, not
against the package's algorithms, so tests compare two independent routes.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations

from grundy import Graph


def relabel(g: Graph, seed: int) -> Graph:
    """Randomly permute vertex ids (structure-preserving)."""
    rng = random.Random(seed)
    perm = list(range(g.n))
    rng.shuffle(perm)
    return Graph(g.n, [(perm[a], perm[b]) for a, b in g.edges])


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph(
        n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    )


def subdivide_tree(tree: Graph, max_extra: int, seed: int) -> Graph:
    """Replace each edge by a path with 0..max_extra interior vertices."""
    rng = random.Random(seed)
    out = []
    nxt = tree.n
    for a, b in tree.edges:
        prev = a
        for _ in range(rng.randint(0, max_extra)):
            out.append((prev, nxt))
            prev = nxt
            nxt += 1
        out.append((prev, b))
    return Graph(nxt, out)


def girth_by_cycle_enumeration(g: Graph):
    """Shortest cycle by exhaustive DFS over simple paths (n <= 10)."""
    best = float("inf")
    n = g.n

    def extend(start, path, on_path):
        nonlocal best
        u = path[-1]
        for v in g.neighbors(u):
            if v == start and len(path) >= 3:
                best = min(best, len(path))
            elif v > start and not on_path[v]:
                on_path[v] = True
                path.append(v)
                extend(start, path, on_path)
                path.pop()
                on_path[v] = False

    for s in range(n):
        on_path = [False] * n
        on_path[s] = True
        extend(s, [s], on_path)
    return best


def max_list_sdr_bruteforce(sizes) -> int:
    """Largest t such that {1..t} has a system of distinct representatives
    among prefix lists of the given sizes, by trying all assignments."""
    k = len(sizes)
    for t in range(k, 0, -1):
        for combo in permutations(range(k), t):
            if all(sizes[combo[i]] >= i + 1 for i in range(t)):
                return t
    return 0


def peeling_partition(g: Graph, root: int):
    """Level partition computed literally: repeatedly remove the vertices
    that are not cut-vertices of the remaining graph (never the root)."""
    remaining = set(g.vertices())
    levels = []
    while remaining != {root}:
        sub, ids = g.induced_subgraph(sorted(remaining))
        from grundy.structure import _biconnected_components

        _, _, cut = _biconnected_components(sub)
        cut_old = {ids[v] for v in cut}
        level = sorted(v for v in remaining if v not in cut_old and v != root)
        if not level:
            raise AssertionError("peeling stalled; input is not a block graph?")
        levels.append(tuple(level))
        remaining -= set(level)
    levels.append((root,))
    return tuple(levels)


def mis_gamma(g: Graph, u: int | None = None) -> int:
    """Grundy number (or the largest color of u) by peeling color classes.

    The first color class of any Grundy coloring is a maximal independent
    set and the rest is a Grundy coloring of what remains, so the maximum
    unrolls over all maximal independent sets. Independent of First-Fit
    simulation and of the list engine.
    """
    n = g.n
    if n == 0:
        return 0
    adj = [0] * n
    for a, b in g.edges:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    full = (1 << n) - 1

    def max_ind_sets(mask):
        if mask == 0:
            yield 0
            return
        v = (mask & -mask).bit_length() - 1
        for s in max_ind_sets(mask & ~(1 << v) & ~adj[v]):
            yield s | (1 << v)
        if adj[v] & mask:
            for s in max_ind_sets(mask & ~(1 << v)):
                if s & adj[v]:
                    yield s

    if u is None:

        @lru_cache(maxsize=None)
        def best(mask):
            if mask == 0:
                return 0
            return max(1 + best(mask & ~s) for s in max_ind_sets(mask))

        return best(full)

    @lru_cache(maxsize=None)
    def best_at(mask):
        out = 1
        for s in max_ind_sets(mask):
            if not (s >> u) & 1:
                out = max(out, 1 + best_at(mask & ~s))
        return out

    return best_at(full)
