"""Exact Grundy number of block graphs via greedy list assignment.

A list here is always a prefix set {1,...,t} and is represented by the
integer t alone. Every vertex receives such a list from a single pass that
processes vertices level by level toward a root w; the root's list size
equals the largest color w can receive in any First-Fit coloring.

The levels are the peeling order of non-cut-vertices, encoded by the
bottom-up recurrence f(u) = 1 + max f over BFS-tree children; level i
holds the vertices that become non-cut once levels below i are removed.
Processing must follow this order, and inside one level adjacent vertices
(members of one block) must go up in ascending strength, where strength is
the list a vertex would get from its subtree alone. Both constraints
matter: plausible alternatives, such as deepest BFS level first, or
ascending vertex id inside a level, let a weak vertex inflate its list
with a strong same-block neighbor's list that the root also consumes,
promising that neighbor's colors twice (random fixtures refute both
against the brute-force oracle)."""

from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .exceptions import NoCutVertex, NotBlockGraph, NotCutVertex
from .graph import Graph
from .oracle import GrundyColoring, extend_partial_coloring, is_grundy_coloring
from .structure import BlockCutTree, bfs_ball, block_cut_tree, clique_blowup, is_block_graph


def assign_list(sizes: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Combine neighbor lists into the next prefix list.

    Given the multiset of list sizes seen in a vertex's processed
    neighborhood, finds the largest t such that {1,...,t} has a system of
    distinct representatives among the lists (value i taken from a list of
    size >= i), and returns (t+1, picked) where picked[i-1] is the index of
    the list representing value i. Counting sort keyed by size, stable on
    the input order, keeps this O(k) for k lists. Empty input yields (1, ()).
    """
    k = len(sizes)
    if k == 0:
        return 1, ()
    buckets: list[list[int]] = [[] for _ in range(k + 1)]
    for idx, s in enumerate(sizes):
        if s < 1:
            raise ValueError("list sizes must be >= 1")
        # sizes above k cannot matter: at most k values get picked
        buckets[min(s, k)].append(idx)
    value = 1
    picked: list[int] = []
    for bucket in buckets[1:]:
        for idx in bucket:
            if sizes[idx] >= value:
                picked.append(idx)
                value += 1
    return value, tuple(picked)


@dataclass(frozen=True)
class ListAssignment:
    """Full record of one list-assignment pass.

    sizes[v] is the size of the prefix list assigned to v. reps[v] holds the
    neighbors representing values 1..sizes[v]-1 in v's combined multiset,
    and consumed[v] the (neighbor, size) pairs v saw, in arrival order.
    """

    root: int
    order: tuple[int, ...]
    sizes: tuple[int, ...]
    reps: tuple[tuple[int, ...], ...]
    consumed: tuple[tuple[tuple[int, int], ...], ...]


@dataclass(frozen=True)
class LevelPartition:
    """Peeling partition of a connected block graph toward a root.

    levels[0] holds the non-cut-vertices of the graph, levels[i] the
    vertices that become non-cut once earlier levels are removed (the root
    always excluded), and the last level is the root alone. f_values[v] is
    the 1-based level index of v.
    """

    root: int
    f_values: tuple[int, ...]
    levels: tuple[tuple[int, ...], ...]


def _level_structure(g: Graph, root: int):
    """BFS levels from root plus the bottom-up f-value of every vertex."""
    order, parent, level = bfs_ball(g, root, g.n)
    children = defaultdict(list)
    for v, p in parent.items():
        children[p].append(v)
    f: dict[int, int] = {}
    for v in reversed(order):
        f[v] = 1 + max((f[c] for c in children[v]), default=0)
    return order, level, f


def _validated_bct(g: Graph, w: int, bct: BlockCutTree | None) -> BlockCutTree:
    if bct is None:
        bct = block_cut_tree(g)  # raises DisconnectedInput
        for b, mb in zip(bct.blocks, bct.block_edge_counts):
            s = len(b)
            if mb != s * (s - 1) // 2:
                raise NotBlockGraph("some block is not a clique")
    if w not in bct.cut_vertices:
        raise NotCutVertex(f"vertex {w} is not a cut-vertex")
    return bct


def level_partition(g: Graph, w: int, _bct: BlockCutTree | None = None) -> LevelPartition:
    """Peeling partition for (g, w): O(m) via one BFS and the f recurrence."""
    _validated_bct(g, w, _bct)
    _, _, f = _level_structure(g, w)
    k = f[w]
    levels: list[list[int]] = [[] for _ in range(k)]
    for v in g.vertices():
        if v != w and f[v] >= k:
            raise AssertionError("f-value of a non-root reached the root level")
        levels[f[v] - 1].append(v)
    return LevelPartition(
        root=w,
        f_values=tuple(f[v] for v in g.vertices()),
        levels=tuple(tuple(sorted(lv)) for lv in levels),
    )


def _run_list_engine(g: Graph, order: Sequence[int]) -> ListAssignment:
    """One pass of list assignment along an explicit order (root last).

    Each vertex combines the lists of its already-processed neighbors and
    broadcasts its own list to the unprocessed ones. O(m) overall.
    """
    n = g.n
    pos = [-1] * n
    for i, v in enumerate(order):
        pos[v] = i
    sizes = [0] * n
    reps: list[tuple[int, ...]] = [()] * n
    consumed: list[tuple[tuple[int, int], ...]] = [()] * n
    incoming: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for v in order:
        entries = incoming[v]
        size, picked = assign_list([s for _, s in entries])
        sizes[v] = size
        reps[v] = tuple(entries[i][0] for i in picked)
        consumed[v] = tuple(entries)
        for w in g.neighbors(v):
            if pos[w] > pos[v]:
                incoming[w].append((v, size))
    return ListAssignment(
        root=order[-1],
        order=tuple(order),
        sizes=tuple(sizes),
        reps=tuple(reps),
        consumed=tuple(consumed),
    )


def _leveled_run(g: Graph, root: int) -> ListAssignment:
    """List assignment in peeling order with strength-sorted levels.

    Before a level is processed, each of its members gets a provisional
    strength: the list it would receive from its current entries, all of
    which come from strictly lower levels. Members then run in ascending
    (strength, id) order, exchanging lists inside their blocks as they go.
    """
    _, _, f = _level_structure(g, root)
    if len(f) != g.n:
        raise AssertionError("list engine requires a connected graph")
    levels: dict[int, list[int]] = {}
    for v, fv in f.items():
        levels.setdefault(fv, []).append(v)
    n = g.n
    done = [False] * n
    sizes = [0] * n
    reps: list[tuple[int, ...]] = [()] * n
    consumed: list[tuple[tuple[int, int], ...]] = [()] * n
    incoming: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    order: list[int] = []
    for fv in sorted(levels):
        members = levels[fv]
        strength = {v: assign_list([s for _, s in incoming[v]])[0] for v in members}
        for v in sorted(members, key=lambda v: (strength[v], v)):
            entries = incoming[v]
            size, picked = assign_list([s for _, s in entries])
            sizes[v] = size
            reps[v] = tuple(entries[i][0] for i in picked)
            consumed[v] = tuple(entries)
            done[v] = True
            order.append(v)
            for w in g.neighbors(v):
                if not done[w]:
                    incoming[w].append((v, size))
    return ListAssignment(
        root=root,
        order=tuple(order),
        sizes=tuple(sizes),
        reps=tuple(reps),
        consumed=tuple(consumed),
    )


def grundy_block(
    g: Graph,
    w: int,
    _bct: BlockCutTree | None = None,
    _order: Sequence[int] | None = None,
) -> tuple[int, ListAssignment]:
    """Largest color the cut-vertex w can receive in a First-Fit coloring
    of the connected block graph g, with the full list assignment."""
    _validated_bct(g, w, _bct)
    if _order is not None:
        order = list(_order)
        if order[-1] != w:
            raise ValueError("processing order must end at the root")
        asg = _run_list_engine(g, order)
    else:
        asg = _leveled_run(g, w)
    return asg.sizes[w], asg


def _sdr_covers(own_sizes: list[int], wanted: list[int]) -> bool:
    """Can prefix lists of the given sizes represent every value in `wanted`?

    Both inputs sorted ascending. Greedy matching of each wanted value to
    the smallest unused list that can hold it.
    """
    idx = 0
    for value in wanted:
        while idx < len(own_sizes) and own_sizes[idx] < value:
            idx += 1
        if idx == len(own_sizes):
            return False
        idx += 1
    return True


_DEMAND_SEARCH_BUDGET = 200_000


def _solve_round(needed: list[int], cands: list[dict]):
    """Color some candidate neighbors so every needed color appears.

    Candidates carry the block id of their edge to the demander; members of
    one block are mutually adjacent, so a color placed in a block covers
    that need for its other members. A member's remaining needs must either
    come from its private lists (entries outside the shared block) or be
    arranged by coloring further co-members at smaller values (assists),
    recursively. Backtracking search over all of it, needed colors
    ascending; returns the list of placements or None.
    """
    budget = [_DEMAND_SEARCH_BUDGET]
    by_group: dict[int, list[dict]] = {}
    for c in cands:
        by_group.setdefault(c["group"], []).append(c)
    group_vals: dict[int, set[int]] = {grp: set() for grp in by_group}
    placed: list[dict] = []

    def undo_to(mark):
        while len(placed) > mark:
            c = placed.pop()
            group_vals[c["group"]].discard(c["value"])
            c["used"] = False
            c["value"] = None

    def gaps_of(c, value):
        in_group = group_vals[c["group"]]
        cover = c["cover"]
        return [i for i in range(1, value) if i not in in_group and i not in cover]

    def enable(c, value):
        """Place `value` on c and arrange everything c then needs below it."""
        if c["used"]:
            return False
        if budget[0] <= 0:
            raise AssertionError("witness search budget exhausted")
        budget[0] -= 1
        mark = len(placed)
        c["used"] = True
        c["value"] = value
        group_vals[c["group"]].add(value)
        placed.append(c)
        if cover_gaps(c, gaps_of(c, value), 0, []):
            return True
        undo_to(mark)
        return False

    def cover_gaps(c, gaps, idx, own_set):
        if idx == len(gaps):
            return True
        i = gaps[idx]
        if i in group_vals[c["group"]]:  # an assist below already placed it
            return cover_gaps(c, gaps, idx + 1, own_set)
        # serve i from c's private lists
        own_set.append(i)
        if _sdr_covers(c["own"], own_set) and cover_gaps(c, gaps, idx + 1, own_set):
            return True
        own_set.pop()
        # or color a free co-member i
        for x in by_group[c["group"]]:
            if x is c or x["used"]:
                continue
            mark = len(placed)
            if enable(x, i):
                if cover_gaps(c, gaps, idx + 1, own_set):
                    return True
                undo_to(mark)
        return False

    def dfs(idx):
        if idx == len(needed):
            return True
        value = needed[idx]
        if any(value in vals for vals in group_vals.values()):
            return dfs(idx + 1)  # an assist already colored a neighbor `value`
        options = sorted(
            (c for c in cands if not c["used"]),
            key=lambda c: (len(gaps_of(c, value)), c["capacity"], c["pos"]),
        )
        for c in options:
            mark = len(placed)
            if enable(c, value):
                if dfs(idx + 1):
                    return True
                undo_to(mark)
        return False

    if dfs(0):
        return placed
    return None


def _witness_partial(g: Graph, asg: ListAssignment, target: int) -> dict[int, int]:
    """Partial Grundy coloring giving the root color `target`.

    Walks demands from the root downward in reverse processing order. Each
    demanded vertex reuses already-colored neighbors for the colors they
    carry and distributes the remaining colors over its consumed lists,
    respecting the block structure. Already-colored vertices are never
    recolored, which keeps overlapping demand branches consistent.
    """
    from .structure import _biconnected_components

    root = asg.root
    if not (1 <= target <= asg.sizes[root]):
        raise ValueError(f"target {target} outside the root list of size {asg.sizes[root]}")
    pos = {v: i for i, v in enumerate(asg.order)}
    edge_block: dict[tuple[int, int], int] = {}
    _, block_edges, _ = _biconnected_components(g)
    for bi, es in enumerate(block_edges):
        for a, b in es:
            edge_block[(a, b)] = bi
            edge_block[(b, a)] = bi
    colors = {root: target}
    heap = [(-pos[root], root)]
    while heap:
        _, v = heapq.heappop(heap)
        j = colors[v]
        if j == 1:
            continue
        covered = {colors[x] for x in g.neighbors(v) if x in colors and colors[x] < j}
        needed = [i for i in range(1, j) if i not in covered]
        if not needed:
            continue
        cands = []
        for u, size in asg.consumed[v]:
            if u in colors:
                continue
            group = edge_block[(v, u)]
            own = sorted(
                s
                for x, s in asg.consumed[u]
                if x not in colors and edge_block[(u, x)] != group
            )
            cover = {colors[x] for x in g.neighbors(u) if x in colors}
            capacity = assign_list(own)[0] - 1 if own else 0
            cands.append(
                {
                    "u": u,
                    "group": group,
                    "own": own,
                    "cover": cover,
                    "capacity": capacity,
                    "pos": pos[u],
                    "used": False,
                    "value": None,
                }
            )
        chosen = _solve_round(needed, cands)
        if chosen is None:
            raise AssertionError(f"no feasible demand assignment at vertex {v}")
        for c in chosen:
            colors[c["u"]] = c["value"]
            heapq.heappush(heap, (-pos[c["u"]], c["u"]))
    return colors


def witness_coloring_block(g: Graph, w: int, assignment: ListAssignment) -> GrundyColoring:
    """Grundy coloring of g giving w its maximal color assignment.sizes[w]."""
    partial = _witness_partial(g, assignment, assignment.sizes[w])
    coloring = extend_partial_coloring(g, partial)
    if not is_grundy_coloring(g, coloring):
        raise AssertionError("extracted witness failed validation")
    return coloring


def gamma_block_graph(g: Graph, threads: int = 1) -> tuple[int, dict[int, int]]:
    """Grundy number of a block graph plus the per-vertex table.

    The table maps every vertex v to the largest color v can receive: cut
    vertices run the list-assignment pass rooted at them, non-cut vertices
    get the size of their unique block. Gamma is the maximum of the largest
    block size and all cut-vertex values. Components are handled
    independently; an empty graph yields (0, {}). The per-cut-vertex runs
    are independent and may execute concurrently (threads > 1).
    """
    if not is_block_graph(g):
        raise NotBlockGraph("input has a non-clique block")
    gamma = 0
    table: dict[int, int] = {}
    for comp in g.components():
        if len(comp) == 1:
            table[comp[0]] = 1
            gamma = max(gamma, 1)
            continue
        sub, ids = g.induced_subgraph(comp)
        bct = block_cut_tree(sub)
        gamma = max(gamma, bct.beta)
        block_size: dict[int, int] = {}
        for b in bct.blocks:
            for v in b:
                if v not in bct.cut_vertices:
                    block_size[v] = len(b)
        cut = sorted(bct.cut_vertices)
        if threads > 1 and cut:
            from concurrent.futures import ThreadPoolExecutor

            with ThreadPoolExecutor(max_workers=threads) as pool:
                values = list(pool.map(lambda w: grundy_block(sub, w, _bct=bct)[0], cut))
            cut_value = dict(zip(cut, values))
        else:
            cut_value = {w: grundy_block(sub, w, _bct=bct)[0] for w in cut}
        for v in range(sub.n):
            value = cut_value[v] if v in cut_value else block_size[v]
            table[ids[v]] = value
            gamma = max(gamma, value)
    return gamma, table


def witness_for_block_gamma(g: Graph) -> GrundyColoring:
    """Grundy coloring of a block graph using exactly gamma_block_graph(g) colors."""
    gamma, table = gamma_block_graph(g)
    if g.n == 0:
        return GrundyColoring(())
    for comp in g.components():
        sub, ids = g.induced_subgraph(comp)
        if len(comp) > 1:
            bct = block_cut_tree(sub)
            for v in sorted(bct.cut_vertices):
                if table[ids[v]] == gamma:
                    _, asg = grundy_block(sub, v, _bct=bct)
                    partial = _witness_partial(sub, asg, gamma)
                    lifted = {ids[x]: c for x, c in partial.items()}
                    return extend_partial_coloring(g, lifted)
            # gamma attained by a largest block: color it 1..beta in id order
            for b in bct.blocks:
                if len(b) == gamma:
                    lifted = {ids[x]: i + 1 for i, x in enumerate(sorted(b))}
                    return extend_partial_coloring(g, lifted)
        elif gamma == 1:
            return extend_partial_coloring(g, {ids[0]: 1})
    raise AssertionError("no component attains the computed gamma")


def bound_block_cutpoint(g: Graph) -> int:
    """Upper bound (beta-1)*delta_tilde + 1 on the Grundy number of a
    connected graph with at least one cut-vertex."""
    bct = block_cut_tree(g)
    if not bct.cut_vertices:
        raise NoCutVertex("graph is 2-connected; use delta2+1 instead")
    return (bct.beta - 1) * bct.delta_tilde() + 1


def upper_bound_via_blowup(g: Graph) -> int:
    """Certified upper bound: Grundy number of the clique blow-up of g."""
    gamma, _ = gamma_block_graph(clique_blowup(g))
    return gamma


def generate_clique_family(t: int, p: int) -> Graph:
    """Extremal block-graph family: start from K_p and, t-1 times, attach a
    fresh K_p at every existing vertex. Grundy number t*(p-1)+1."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if p < 2:
        raise ValueError("p must be >= 2")
    edges = [(i, j) for i in range(p) for j in range(i + 1, p)]
    count = p
    for _ in range(t - 1):
        current = count
        for u in range(current):
            fresh = list(range(count, count + p - 1))
            members = [u] + fresh
            for i, a in enumerate(members):
                for b in members[i + 1:]:
                    edges.append((a, b))
            count += p - 1
    return Graph(count, edges)
