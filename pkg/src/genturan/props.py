"""Exact structural predicates: diameter, colourings, cliques, K_r-freeness of blow-ups."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .graphcore import Graph, WeightedGraph, bfs_distances

__all__ = [
    "INFINITY",
    "ColoringSummary",
    "diameter",
    "is_k_colorable",
    "chromatic_number",
    "count_proper_colorings_as_partitions",
    "clique_number",
    "is_Kr_free_blowup",
    "false_twin_classes",
]

#: Returned by :func:`diameter` for disconnected graphs.
INFINITY = math.inf


@dataclass(frozen=True)
class ColoringSummary:
    """Result of counting proper colourings with colours unlabelled.

    ``count_partitions`` is capped at ``limit`` when a limit was requested;
    ``witness`` is the first colouring found, as classes sorted by least vertex.
    """

    k: int
    count_partitions: int
    witness: Optional[tuple[tuple[int, ...], ...]]
    limit: Optional[int] = None


def diameter(g: Graph) -> int | float:
    if g.n < 1:
        raise ValueError("diameter of the empty graph is undefined")
    best = 0
    for u in range(g.n):
        dist = bfs_distances(g, u)
        if min(dist) < 0:
            return INFINITY
        best = max(best, max(dist))
    return best


def false_twin_classes(g: Graph) -> list[list[int]]:
    """Group vertices with identical open neighbourhoods (such vertices are never adjacent)."""
    groups: dict[frozenset[int], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v], []).append(v)
    return sorted(groups.values())


def _coloring_order(g: Graph) -> list[int]:
    """Static order: greedy max-saturation by already-ordered neighbours, false twins kept consecutive."""
    twins = {v: cls for cls in false_twin_classes(g) for v in cls}
    placed = [False] * g.n
    hits = [0] * g.n
    order: list[int] = []
    while len(order) < g.n:
        v = max(
            (u for u in range(g.n) if not placed[u]),
            key=lambda u: (hits[u], g.degree(u), -u),
        )
        for t in twins[v]:
            if not placed[t]:
                placed[t] = True
                order.append(t)
                for w in g.adj[t]:
                    hits[w] += 1
    return order


def count_proper_colorings_as_partitions(
    g: Graph, k: int, limit: Optional[int] = None
) -> ColoringSummary:
    """Count partitions of V(g) into at most ``k`` independent sets.

    Colours are assigned with symmetry breaking (a vertex may open colour ``c``
    only if colours ``0..c-1`` are in use), so each partition is counted once.
    With ``limit`` the search stops as soon as that many partitions are found.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = g.n
    if n == 0:
        return ColoringSummary(k, 1, (), limit)
    order = _coloring_order(g)
    adj = [list(a) for a in g.adj]
    color = [-1] * n
    forbidden = [[0] * k for _ in range(n)]
    count = 0
    witness: Optional[list[int]] = None

    def wiped_out(v: int, used: int) -> bool:
        # an uncoloured neighbour with every colour blocked and no fresh colour left
        for u in adj[v]:
            if color[u] < 0 and used == k and all(forbidden[u][c] for c in range(k)):
                return True
        return False

    def rec(i: int, used: int) -> bool:
        nonlocal count, witness
        if i == n:
            count += 1
            if witness is None:
                witness = color[:]
            return limit is not None and count >= limit
        v = order[i]
        options = [c for c in range(used) if not forbidden[v][c]]
        if used < k:
            options.append(used)
        for c in options:
            color[v] = c
            for u in adj[v]:
                forbidden[u][c] += 1
            new_used = max(used, c + 1)
            stop = False
            if not wiped_out(v, new_used):
                stop = rec(i + 1, new_used)
            for u in adj[v]:
                forbidden[u][c] -= 1
            color[v] = -1
            if stop:
                return True
        return False

    rec(0, 0)
    classes = None
    if witness is not None:
        by_color: dict[int, list[int]] = {}
        for v, c in enumerate(witness):
            by_color.setdefault(c, []).append(v)
        classes = tuple(sorted(tuple(cls) for cls in by_color.values()))
    return ColoringSummary(k, count, classes, limit)


def is_k_colorable(g: Graph, k: int) -> bool:
    """DSATUR-style exact decision: branch on the uncoloured vertex of maximum saturation."""
    n = g.n
    if n == 0:
        return True
    if k < 1:
        return False
    adj = [list(a) for a in g.adj]
    color = [-1] * n
    forbidden = [[0] * k for _ in range(n)]
    saturation = [0] * n

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if color[v] < 0:
                kv = (saturation[v], len(adj[v]), -v)
                if key is None or kv > key:
                    best, key = v, kv
        return best

    def rec(colored: int, used: int) -> bool:
        if colored == n:
            return True
        v = pick()
        options = [c for c in range(used) if not forbidden[v][c]]
        if used < k:
            options.append(used)
        for c in options:
            color[v] = c
            for u in adj[v]:
                if forbidden[u][c] == 0:
                    saturation[u] += 1
                forbidden[u][c] += 1
            ok = rec(colored + 1, max(used, c + 1))
            for u in adj[v]:
                forbidden[u][c] -= 1
                if forbidden[u][c] == 0:
                    saturation[u] -= 1
            color[v] = -1
            if ok:
                return True
        return False

    return rec(0, 0)


def chromatic_number(g: Graph) -> int:
    if g.n < 1:
        raise ValueError("chromatic number needs at least one vertex")
    k = clique_number(g)
    while not is_k_colorable(g, k):
        k += 1
    return k


def clique_number(g: Graph) -> int:
    """Maximum clique size by branch and bound with greedy-colouring upper bounds."""
    if g.n == 0:
        return 0
    adj = g.adj
    best = 0

    def color_bound(cands: list[int]) -> tuple[list[int], list[int]]:
        # greedy sequential colouring; returns vertices ordered by colour and their colour numbers
        classes: list[list[int]] = []
        for v in cands:
            for cls in classes:
                if not any(u in adj[v] for u in cls):
                    cls.append(v)
                    break
            else:
                classes.append([v])
        order, bounds = [], []
        for i, cls in enumerate(classes, 1):
            order.extend(cls)
            bounds.extend([i] * len(cls))
        return order, bounds

    def expand(size: int, cands: list[int]) -> None:
        nonlocal best
        order, bounds = color_bound(cands)
        for idx in range(len(order) - 1, -1, -1):
            if size + bounds[idx] <= best:
                return
            v = order[idx]
            new = [u for u in order[:idx] if u in adj[v]]
            if new:
                expand(size + 1, new)
            elif size + 1 > best:
                best = size + 1

    expand(0, sorted(range(g.n), key=lambda v: (-g.degree(v), v)))
    return best


def is_Kr_free_blowup(w: WeightedGraph, r: int) -> bool:
    """Blow-up parts are independent sets, so a clique meets each part at most once."""
    if r < 2:
        raise ValueError("r must be >= 2")
    support = [v for v, x in enumerate(w.weights) if x > 0]
    return clique_number(w.base.induced(support)) < r
