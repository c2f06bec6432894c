"""Structural graph analyses: degrees, girth, BFS balls, blocks, clique blow-up."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .exceptions import DisconnectedInput
from .graph import Graph

INFINITE = math.inf


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degrees, the capped neighbor maximum delta_u, and delta2.

    delta_u[v] is the largest degree among neighbors w of v with
    d(w) <= d(v), or 0 when no neighbor qualifies. delta2 is the maximum
    of delta_u over all vertices; the Grundy number never exceeds delta2 + 1.
    """

    degree: tuple[int, ...]
    delta_u: tuple[int, ...]
    delta2: int

    @property
    def max_degree(self) -> int:
        return max(self.degree, default=0)


def degree_profile(g: Graph) -> DegreeProfile:
    deg = g.degrees()
    delta_u = []
    for v in g.vertices():
        best = 0
        for w in g.neighbors(v):
            if deg[w] <= deg[v] and deg[w] > best:
                best = deg[w]
        delta_u.append(best)
    return DegreeProfile(deg, tuple(delta_u), max(delta_u, default=0))


def girth(g: Graph):
    """Exact girth: one BFS per start vertex, O(n*m) total.

    Returns math.inf for forests. Each BFS aborts once its levels can no
    longer improve on the best cycle found so far.
    """
    best = INFINITE
    level = [-1] * g.n
    parent = [-1] * g.n
    for s in g.vertices():
        # reset only what the previous BFS touched
        queue = deque([s])
        touched = [s]
        level[s] = 0
        parent[s] = -1
        while queue:
            u = queue.popleft()
            if 2 * level[u] >= best - 1:
                break
            for v in g.neighbors(u):
                if level[v] == -1:
                    level[v] = level[u] + 1
                    parent[v] = u
                    touched.append(v)
                    queue.append(v)
                elif v != parent[u]:
                    # non-tree edge closes a cycle through s of this length or less
                    cand = level[u] + level[v] + 1
                    if cand < best:
                        best = cand
        for v in touched:
            level[v] = -1
    return best


def bfs_ball(g: Graph, u: int, r: int) -> tuple[list[int], dict[int, int], dict[int, int]]:
    """Vertices at distance <= r from u, with BFS-tree parents and levels.

    Returns (vertices in BFS order, parent map, level map); u has no parent
    entry. Levels are exact graph distances within the ball.
    """
    if r < 0:
        raise ValueError("radius must be >= 0")
    level = {u: 0}
    parent: dict[int, int] = {}
    order = [u]
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if level[x] == r:
            continue
        for y in g.neighbors(x):
            if y not in level:
                level[y] = level[x] + 1
                parent[y] = x
                order.append(y)
                queue.append(y)
    return order, parent, level


@dataclass(frozen=True)
class BlockCutTree:
    """Blocks, cut-vertices, and their bipartite incidence for a connected graph.

    Every edge lies in exactly one block; bridges appear as 2-vertex blocks.
    """

    blocks: tuple[frozenset[int], ...]
    block_edge_counts: tuple[int, ...]
    cut_vertices: frozenset[int]
    incidence: tuple[tuple[int, int], ...]  # (cut-vertex, block index)

    @property
    def beta(self) -> int:
        """Size of the largest block (1 for an edgeless graph)."""
        return max((len(b) for b in self.blocks), default=1)

    def blocks_of(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]

    def delta_tilde(self) -> int:
        """Max number of blocks through one cut-vertex (0 if no cut-vertex)."""
        counts: dict[int, int] = {}
        for v, _ in self.incidence:
            counts[v] = counts.get(v, 0) + 1
        return max(counts.values(), default=0)


def _biconnected_components(g: Graph):
    """Iterative Hopcroft-Tarjan. Works on disconnected graphs.

    Returns (blocks, block_edges, cut_vertices) where block_edges[i] lists
    the edges of block i. Isolated vertices belong to no block.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    edge_stack: list[tuple[int, int]] = []
    blocks: list[frozenset[int]] = []
    block_edges: list[list[tuple[int, int]]] = []
    cut: set[int] = set()
    timer = 0

    def pop_block(u, v):
        members: set[int] = set()
        taken: list[tuple[int, int]] = []
        while True:
            e = edge_stack.pop()
            members.update(e)
            taken.append(e)
            if e == (u, v):
                break
        blocks.append(frozenset(members))
        block_edges.append(taken)

    for root in g.vertices():
        if disc[root] != -1:
            continue
        root_children = 0
        # stack frames: (vertex, parent, iterator index over neighbors)
        stack = [(root, -1, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, pu, i = stack[-1]
            nbrs = g.neighbors(u)
            if i < len(nbrs):
                stack[-1] = (u, pu, i + 1)
                v = nbrs[i]
                if disc[v] == -1:
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, u, 0))
                elif v != pu and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            else:
                stack.pop()
                if not stack:
                    continue
                p = stack[-1][0]
                if low[u] < low[p]:
                    low[p] = low[u]
                if p == root:
                    root_children += 1
                if low[u] >= disc[p]:
                    if p != root:
                        cut.add(p)
                    pop_block(p, u)
        if root_children >= 2:
            cut.add(root)
    return blocks, block_edges, cut


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Block-cutpoint decomposition of a connected graph, linear time."""
    if not g.is_connected():
        raise DisconnectedInput("block_cut_tree requires a connected graph")
    blocks, block_edges, cut = _biconnected_components(g)
    incidence = tuple(
        (v, i) for i, b in enumerate(blocks) for v in sorted(b) if v in cut
    )
    counts = tuple(len(es) for es in block_edges)
    return BlockCutTree(tuple(blocks), counts, frozenset(cut), incidence)


def is_block_graph(g: Graph) -> bool:
    """True iff every block of every component induces a clique."""
    blocks, block_edges, _ = _biconnected_components(g)
    for b, es in zip(blocks, block_edges):
        s = len(b)
        if len(es) != s * (s - 1) // 2:
            return False
    return True


def clique_blowup(g: Graph) -> Graph:
    """Complete every block into a clique; the result is always a block graph.

    The vertex set is unchanged and the operation is idempotent.
    """
    blocks, _, _ = _biconnected_components(g)
    extra = []
    for b in blocks:
        members = sorted(b)
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                if not g.has_edge(u, v):
                    extra.append((u, v))
    return g.with_edges(extra)
