"""Deterministic graph generators for fixtures and randomized testing.

Random generators take an explicit seed; there is no hidden global state.
"""

from __future__ import annotations

import heapq
import random

from .graph import Graph


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def spider(legs: int, leg_len: int) -> Graph:
    """Center vertex 0 with `legs` paths of length `leg_len` attached."""
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(leg_len):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph(nxt, edges)


def petersen() -> Graph:
    """Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph(10, edges)


def worked_block_fixture() -> Graph:
    """14-vertex block graph used as a regression fixture.

    Blocks: triangles {6,11,12} and {1,5,6}, a K4 {0,1,2,3}, triangle
    {4,9,10}, and bridges 2-7, 3-8, 0-4, 10-13. Vertex 0 is the designated
    root: its Grundy value there is 5, which is also the Grundy number of
    the graph (the largest block only has 4 vertices).
    """
    edges = [
        # K4 block around the root
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
        # bridge blocks hanging off the K4
        (2, 7), (3, 8),
        # triangle chain on the left
        (1, 5), (1, 6), (5, 6), (6, 11), (6, 12), (11, 12),
        # right arm: bridge, triangle, pendant
        (0, 4), (4, 9), (4, 10), (9, 10), (10, 13),
    ]
    return Graph(14, edges)


WORKED_BLOCK_ROOT = 0

#: List sizes the engine assigns on the fixture rooted at WORKED_BLOCK_ROOT,
#: indexed by vertex.
WORKED_BLOCK_LIST_SIZES = (5, 4, 2, 3, 3, 1, 3, 1, 1, 1, 2, 1, 2, 1)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a random Pruefer sequence."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return Graph(n, edges)


def random_block_graph(n: int, max_block: int, seed: int) -> Graph:
    """Random connected block graph on exactly n vertices.

    Grows a tree of cliques: repeatedly glue a fresh clique of random size
    (2..max_block, capped by the remaining budget) onto a random existing
    vertex. Every block is a clique by construction.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if max_block < 2:
        raise ValueError("max_block must be >= 2")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    count = 1
    while count < n:
        anchor = rng.randrange(count)
        size = rng.randint(2, min(max_block, n - count + 1))
        fresh = list(range(count, count + size - 1))
        members = [anchor] + fresh
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                edges.append((u, v))
        count += size - 1
    return Graph(n, edges)
