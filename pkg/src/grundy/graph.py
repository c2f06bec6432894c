"""Immutable simple undirected graph with dense 0..n-1 vertex ids.

Adjacency lists are stored sorted ascending, so every traversal in the
package is deterministic. Instances are safe to share across threads.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence


class Graph:
    """Simple undirected graph. No self-loops, no parallel edges."""

    __slots__ = ("_n", "_adj", "_adj_sets", "_edges", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        self._n = n
        adj_sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj_sets[u].add(v)
            adj_sets[v].add(u)
        self._adj_sets = tuple(frozenset(s) for s in adj_sets)
        self._adj = tuple(tuple(sorted(s)) for s in adj_sets)
        self._edges = tuple(
            (u, v) for u in range(n) for v in self._adj[u] if u < v
        )
        self._hash = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as (u, v) with u < v, lexicographically sorted."""
        return self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def vertices(self) -> range:
        return range(self._n)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted ascending, ordered by minimum vertex."""
        seen = [False] * self._n
        comps = []
        for s in range(self._n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for v in self._adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        queue.append(v)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self._n <= 1 or len(self.components()) == 1

    def is_tree(self) -> bool:
        return self._n >= 1 and self.m == self._n - 1 and self.is_connected()

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on `vertices`, relabeled to 0..k-1.

        Returns (subgraph, old_ids) where old_ids[new] = old. Vertices are
        relabeled in the given order; duplicates are rejected.
        """
        old_ids = tuple(vertices)
        if len(set(old_ids)) != len(old_ids):
            raise ValueError("duplicate vertices in induced_subgraph")
        index = {old: new for new, old in enumerate(old_ids)}
        sub_edges = []
        for new_u, old_u in enumerate(old_ids):
            for old_v in self._adj[old_u]:
                new_v = index.get(old_v)
                if new_v is not None and new_u < new_v:
                    sub_edges.append((new_u, new_v))
        return Graph(len(old_ids), sub_edges), old_ids

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        """New graph with `extra` edges added (duplicates ignored)."""
        return Graph(self._n, list(self._edges) + list(extra))

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self._n == other._n
            and self._edges == other._edges
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._edges))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.m})"
