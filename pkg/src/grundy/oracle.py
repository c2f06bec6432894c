"""Ground truth at desk scale: First-Fit simulation, validity checking, and
exhaustive computation of the Grundy number and per-vertex color spectra.

The exhaustive search walks every partial coloring reachable by some
First-Fit ordering, deduplicating states, so equivalent orderings are
explored once. Capped at ORACLE_DEFAULT_CAP vertices unless overridden by
the GRUNDY_ORACLE_CAP environment variable or an explicit argument.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping, Sequence

from .exceptions import NotAPermutation, TooLarge
from .graph import Graph

ORACLE_DEFAULT_CAP = 9


@dataclass(frozen=True)
class GrundyColoring:
    """A vertex coloring with colors 1..num_colors."""

    colors: tuple[int, ...]

    @property
    def num_colors(self) -> int:
        return max(self.colors, default=0)

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.colors))


@dataclass(frozen=True)
class ColorSpectrum:
    """All colors a vertex can receive across Grundy colorings."""

    vertex: int
    achievable: frozenset[int]

    @property
    def maximum(self) -> int:
        return max(self.achievable, default=0)


def first_fit(g: Graph, order: Sequence[int]) -> GrundyColoring:
    """Greedy coloring in the given vertex order (smallest available color)."""
    if sorted(order) != list(g.vertices()):
        raise NotAPermutation("order must be a permutation of 0..n-1")
    colors = [0] * g.n
    for v in order:
        used = {colors[w] for w in g.neighbors(v) if colors[w]}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return GrundyColoring(tuple(colors))


def _normalize_colors(g: Graph, coloring) -> tuple[int, ...]:
    if isinstance(coloring, GrundyColoring):
        colors = coloring.colors
    elif isinstance(coloring, Mapping):
        colors = tuple(coloring.get(v, 0) for v in g.vertices())
    else:
        colors = tuple(coloring)
    if len(colors) != g.n:
        raise ValueError("coloring must assign a color to every vertex")
    return colors


def is_grundy_coloring(g: Graph, coloring) -> bool:
    """True iff the coloring is proper and every vertex colored j has a
    neighbor of every color below j."""
    colors = _normalize_colors(g, coloring)
    if any(c < 1 for c in colors):
        return False
    for v in g.vertices():
        seen = set()
        for w in g.neighbors(v):
            if colors[w] == colors[v]:
                return False
            seen.add(colors[w])
        if not all(i in seen for i in range(1, colors[v])):
            return False
    return True


def extend_partial_coloring(g: Graph, partial: Mapping[int, int]) -> GrundyColoring:
    """First-Fit extension of a partial Grundy coloring to all of g.

    The partial vertices are replayed in ascending color order, which
    reproduces their colors exactly provided the partial coloring is proper
    and each of its vertices of color j already sees partial neighbors of
    all colors below j. The remaining vertices follow in ascending id order.
    """
    order = sorted(partial, key=lambda v: (partial[v], v))
    order += [v for v in g.vertices() if v not in partial]
    result = first_fit(g, order)
    for v, c in partial.items():
        if result.colors[v] != c:
            raise ValueError(
                f"partial coloring not reproduced at vertex {v}: "
                f"wanted {c}, First-Fit gave {result.colors[v]}"
            )
    return result


def resolve_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("GRUNDY_ORACLE_CAP")
    if env:
        return int(env)
    return ORACLE_DEFAULT_CAP


class _Exploration:
    """All reachable First-Fit colorings of a graph, deduplicated by state."""

    def __init__(self, achievable, best_coloring):
        self.achievable = achievable  # per-vertex frozenset of colors
        self.best_coloring = best_coloring  # a full coloring attaining the max

    @property
    def gamma(self) -> int:
        return max((max(a, default=0) for a in self.achievable), default=0)


_explore_cache: dict[Graph, _Exploration] = {}


def _explore(g: Graph) -> _Exploration:
    cached = _explore_cache.get(g)
    if cached is not None:
        return cached
    n = g.n
    adj = [g.neighbors(v) for v in range(n)]
    achievable: list[set[int]] = [set() for _ in range(n)]
    best_max = -1
    best: tuple[int, ...] = ()
    start = (0,) * n
    seen = {start}
    stack = [start]
    while stack:
        state = stack.pop()
        full = True
        for v in range(n):
            if state[v]:
                continue
            full = False
            used = {state[w] for w in adj[v]}
            c = 1
            while c in used:
                c += 1
            achievable[v].add(c)
            child = state[:v] + (c,) + state[v + 1:]
            if child not in seen:
                seen.add(child)
                stack.append(child)
        if full:
            m = max(state, default=0)
            if m > best_max:
                best_max = m
                best = state
    result = _Exploration(tuple(frozenset(a) for a in achievable), best)
    if len(_explore_cache) > 256:
        _explore_cache.clear()
    _explore_cache[g] = result
    return result


def _check_cap(g: Graph, cap: int | None):
    limit = resolve_cap(cap)
    if g.n > limit:
        raise TooLarge(f"n={g.n} exceeds the oracle cap {limit}")


def brute_force_gamma(g: Graph, cap: int | None = None) -> int:
    """Exact Grundy number by exhausting all First-Fit orderings."""
    _check_cap(g, cap)
    return _explore(g).gamma


def brute_force_gamma_witness(g: Graph, cap: int | None = None) -> GrundyColoring:
    """A Grundy coloring attaining brute_force_gamma(g)."""
    _check_cap(g, cap)
    ex = _explore(g)
    if not ex.best_coloring:
        return GrundyColoring(())
    return GrundyColoring(ex.best_coloring)


def brute_force_gamma_at(g: Graph, u: int, cap: int | None = None) -> int:
    """Exact maximum color vertex u can receive in any Grundy coloring."""
    _check_cap(g, cap)
    return max(_explore(g).achievable[u], default=0)


def color_spectrum(g: Graph, u: int, cap: int | None = None) -> ColorSpectrum:
    """Every color u attains across all First-Fit orderings."""
    _check_cap(g, cap)
    return ColorSpectrum(u, _explore(g).achievable[u])
