"""Exact labelled and unlabelled copy counting.

Two independent routes are provided:

* :func:`count_embeddings_naive` walks injective maps vertex by vertex;
* :func:`count_in_blowup` never expands the host.  It maps false-twin classes
  of the pattern to parts of the blow-up and finishes with one falling
  factorial per part.

All arithmetic is on Python integers.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .graphcore import Graph, PatternWithDemands, WeightedGraph, complete

__all__ = [
    "CountResult",
    "BudgetExceeded",
    "falling_factorial",
    "compositions",
    "count_embeddings_naive",
    "automorphism_count",
    "count_copies",
    "twin_classes",
    "load_profile",
    "count_in_blowup",
    "count_from_profile",
    "count_in_complete_multipartite",
]


class BudgetExceeded(RuntimeError):
    """Raised by the naive counter when its node budget runs out."""


@dataclass(frozen=True)
class CountResult:
    labelled: int
    aut: int
    unlabelled: int

    def __post_init__(self) -> None:
        if self.aut < 1:
            raise ValueError("automorphism count must be positive")
        if self.labelled != self.unlabelled * self.aut:
            raise ArithmeticError("labelled != unlabelled * aut")

    def to_json(self) -> dict[str, str]:
        return {"labelled": str(self.labelled), "aut": str(self.aut), "unlabelled": str(self.unlabelled)}


def falling_factorial(w: int, k: int) -> int:
    """``w (w-1) ... (w-k+1)``; zero when ``k > w``."""
    if k > w:
        return 0
    return math.perm(w, k)


def compositions(m: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``m`` into ``parts`` ordered parts, in lexicographic order."""
    if parts == 0:
        if m == 0:
            yield ()
        return
    if parts == 1:
        yield (m,)
        return
    for first in range(m + 1):
        for rest in compositions(m - first, parts - 1):
            yield (first,) + rest


# -- naive route --------------------------------------------------------------


def count_embeddings_naive(pattern: Graph, host: Graph, node_limit: Optional[int] = None) -> int:
    """Number of injective maps V(pattern) -> V(host) sending edges to edges.

    Backtracking in a static order (descending degree) with the image of each
    vertex restricted to common host-neighbours of its mapped pattern-neighbours.
    """
    if pattern.n < 1:
        raise ValueError("pattern must have at least one vertex")
    if pattern.n > host.n:
        return 0
    order = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
    back = [[j for j in range(i) if order[j] in pattern.adj[order[i]]] for i in range(len(order))]
    hadj = host.adj
    everything = frozenset(range(host.n))
    image = [0] * len(order)
    used: set[int] = set()
    last = len(order) - 1
    nodes = 0

    def rec(i: int) -> int:
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise BudgetExceeded(f"more than {node_limit} search nodes")
        if back[i]:
            cands = hadj[image[back[i][0]]]
            for j in back[i][1:]:
                cands = cands & hadj[image[j]]
        else:
            cands = everything
        if i == last:
            return sum(1 for c in cands if c not in used)
        total = 0
        for c in cands:
            if c in used:
                continue
            image[i] = c
            used.add(c)
            total += rec(i + 1)
            used.discard(c)
        return total

    return rec(0)


# -- automorphisms ------------------------------------------------------------


def _twin_partition(g: Graph) -> list[tuple[list[int], bool]]:
    """Classes of false twins (same open neighbourhood) and true twins (same
    closed neighbourhood); the flag is True for true-twin cliques."""
    by_open: dict[frozenset[int], list[int]] = defaultdict(list)
    for v in range(g.n):
        by_open[g.adj[v]].append(v)
    classes: list[tuple[list[int], bool]] = []
    leftovers = []
    for members in by_open.values():
        if len(members) > 1:
            classes.append((members, False))
        else:
            leftovers.extend(members)
    by_closed: dict[frozenset[int], list[int]] = defaultdict(list)
    for v in leftovers:
        by_closed[g.adj[v] | {v}].append(v)
    classes.extend((members, len(members) > 1) for members in by_closed.values())
    return sorted(classes)


def _colored_automorphisms(adj: list[set[int]], colors: list[tuple]) -> int:
    """Count colour-preserving automorphisms of a small graph by backtracking."""
    n = len(adj)
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    image = [-1] * n
    used = [False] * n

    def rec(i: int) -> int:
        if i == n:
            return 1
        v = order[i]
        total = 0
        for c in range(n):
            if used[c] or colors[c] != colors[v] or len(adj[c]) != len(adj[v]):
                continue
            if any((image[u] in adj[c]) != (u in adj[v]) for u in order[:i]):
                continue
            image[v] = c
            used[c] = True
            total += rec(i + 1)
            used[c] = False
            image[v] = -1
        return total

    return rec(0)


def automorphism_count(g: Graph) -> int:
    """``|Aut(g)|``.

    Twin classes are permuted freely inside themselves, so the count is the
    product of their factorials times the automorphisms of the class quotient
    that respect class size and kind.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    classes = _twin_partition(g)
    where = {v: i for i, (members, _) in enumerate(classes) for v in members}
    qadj: list[set[int]] = [set() for _ in classes]
    for u, v in g.edges:
        a, b = where[u], where[v]
        if a != b:
            qadj[a].add(b)
            qadj[b].add(a)
    colors = [(len(members), kind) for members, kind in classes]
    factor = 1
    for members, _ in classes:
        factor *= math.factorial(len(members))
    return factor * _colored_automorphisms(qadj, colors)


def count_copies(pattern: Graph | PatternWithDemands, host: Graph | WeightedGraph) -> CountResult:
    """Labelled count, ``|Aut|`` of the (expanded) pattern, and unlabelled count."""
    if isinstance(pattern, PatternWithDemands) or isinstance(host, WeightedGraph):
        p = pattern if isinstance(pattern, PatternWithDemands) else PatternWithDemands(pattern)
        w = host if isinstance(host, WeightedGraph) else WeightedGraph(host, (1,) * host.n)
        labelled = count_in_blowup(p, w)
        aut = automorphism_count(p.expand())
    else:
        labelled = count_embeddings_naive(pattern, host)
        aut = automorphism_count(pattern)
    unlabelled, rem = divmod(labelled, aut)
    if rem:
        raise ArithmeticError(f"labelled count {labelled} not divisible by |Aut| = {aut}")
    return CountResult(labelled, aut, unlabelled)


# -- compressed route ---------------------------------------------------------


def twin_classes(pattern: PatternWithDemands) -> tuple[list[int], list[set[int]]]:
    """Merge base vertices with equal open neighbourhoods.

    Returns class sizes (summed demands) and the class-level adjacency.
    """
    base = pattern.base
    groups: dict[frozenset[int], list[int]] = {}
    for v in range(base.n):
        groups.setdefault(base.adj[v], []).append(v)
    members = sorted(groups.values())
    where = {v: i for i, ms in enumerate(members) for v in ms}
    sizes = [sum(pattern.demands[v] for v in ms) for ms in members]
    cadj: list[set[int]] = [set() for _ in members]
    for u, v in base.edges:
        cadj[where[u]].add(where[v])
        cadj[where[v]].add(where[u])
    return sizes, cadj


def _class_order(sizes: list[int], cadj: list[set[int]]) -> list[int]:
    """Most-constrained-first: prefer classes with many placed neighbours, then small size."""
    k = len(sizes)
    placed: list[int] = []
    seen = [False] * k
    while len(placed) < k:
        best = max(
            (c for c in range(k) if not seen[c]),
            key=lambda c: (sum(seen[d] for d in cadj[c]), -sizes[c], len(cadj[c]), -c),
        )
        seen[best] = True
        placed.append(best)
    return placed


def load_profile(
    pattern: PatternWithDemands, host: Graph, caps: Optional[Sequence[int]] = None
) -> dict[tuple[int, ...], int]:
    """Map each load vector to its multiplicity over valid class placements.

    A placement sends every expanded pattern vertex to a host vertex so that
    adjacent pattern vertices land on adjacent host vertices.  Vertices of a
    twin class are interchangeable, so each distribution of a class of size
    ``m`` with part counts ``k_b`` stands for ``m! / prod(k_b!)`` placements.
    With ``caps``, branches loading a part beyond its cap are cut.
    """
    sizes, cadj = twin_classes(pattern)
    order = _class_order(sizes, cadj)
    pos = {c: i for i, c in enumerate(order)}
    earlier = [[d for d in cadj[c] if pos[d] < pos[c]] for c in order]
    hadj = host.adj
    all_parts = frozenset(range(host.n))
    if caps is not None:
        all_parts = frozenset(b for b in all_parts if caps[b] > 0)
    support: dict[int, tuple[int, ...]] = {}
    loads = [0] * host.n
    profile: dict[tuple[int, ...], int] = defaultdict(int)

    def rec(i: int, mult: int) -> None:
        if i == len(order):
            profile[tuple(loads)] += mult
            return
        c = order[i]
        allowed = all_parts
        for d in earlier[i]:
            for b in support[d]:
                allowed = allowed & hadj[b]
        parts = sorted(allowed)
        m = sizes[c]
        for comp in compositions(m, len(parts)):
            if caps is not None and any(loads[b] + x > caps[b] for b, x in zip(parts, comp)):
                continue
            coeff = math.factorial(m)
            used = []
            for b, x in zip(parts, comp):
                if x:
                    coeff //= math.factorial(x)
                    loads[b] += x
                    used.append(b)
            support[c] = tuple(used)
            rec(i + 1, mult * coeff)
            for b, x in zip(parts, comp):
                loads[b] -= x
        support.pop(c, None)

    rec(0, 1)
    return dict(profile)


def count_from_profile(profile: dict[tuple[int, ...], int], weights: Sequence[int]) -> int:
    total = 0
    for load, mult in profile.items():
        term = mult
        for w, k in zip(weights, load):
            if k:
                term *= falling_factorial(w, k)
                if not term:
                    break
        total += term
    return total


def count_in_blowup(pattern: PatternWithDemands, host: WeightedGraph) -> int:
    """Labelled copies of ``pattern.expand()`` in ``host.expand()``, without expanding."""
    if pattern.order > host.order:
        return 0
    profile = load_profile(pattern, host.base, caps=host.weights)
    return count_from_profile(profile, host.weights)


def count_in_complete_multipartite(pattern: PatternWithDemands, parts: Sequence[int]) -> int:
    return count_in_blowup(pattern, WeightedGraph(complete(len(parts)), tuple(parts)))
