"""Simple undirected graphs and the construction algebra built on them.

Vertices are always ``0..n-1``.  Composite constructions use a fixed
labelling so that counts and emitted files are reproducible:

* ``join``/``disjoint_union`` keep the first graph's labels and shift the
  second graph's labels by ``g1.n``;
* ``blowup`` lists all clones of vertex 0 first, then those of vertex 1, ...;
* ``contract_nonadjacent`` keeps the smaller label and deletes the larger one,
  shifting later labels down by one.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

__all__ = [
    "Graph",
    "WeightedGraph",
    "PatternWithDemands",
    "complete",
    "empty",
    "path",
    "cycle",
    "join",
    "disjoint_union",
    "power",
    "blowup",
    "contract_nonadjacent",
    "expand",
    "bfs_distances",
    "graph_to_json",
    "graph_from_json",
    "from_graph6",
    "to_graph6",
    "to_dot",
    "load_graph_file",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph stored as a sorted tuple of edges ``(u, v)``, ``u < v``."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        normalized = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= self.n:
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            normalized.add((u, v))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def _edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self._edge_set

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled in increasing order of the kept vertices."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph(
            len(keep),
            tuple((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> Graph:
        nodes = sorted(g.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls(len(nodes), tuple((index[u], index[v]) for u, v in g.edges()))


def _check_vector(name: str, values: Sequence[int], n: int, minimum: int) -> tuple[int, ...]:
    vals = tuple(int(x) for x in values)
    if len(vals) != n:
        raise ValueError(f"{name} has length {len(vals)}, expected {n}")
    bad = [x for x in vals if x < minimum]
    if bad:
        raise ValueError(f"{name} entries must be >= {minimum}, got {bad[0]}")
    return vals


@dataclass(frozen=True)
class WeightedGraph:
    """A base graph with a nonnegative integer part size per vertex (the blow-up B[w])."""

    base: Graph
    weights: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", _check_vector("weights", self.weights, self.base.n, 0))

    @property
    def order(self) -> int:
        return sum(self.weights)

    def expand(self) -> Graph:
        return blowup(self.base, self.weights)


@dataclass(frozen=True)
class PatternWithDemands:
    """A base pattern with a positive demand per vertex; it stands for ``blowup(base, demands)``."""

    base: Graph
    demands: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        demands = self.demands if self.demands else (1,) * self.base.n
        object.__setattr__(self, "demands", _check_vector("demands", demands, self.base.n, 1))

    @property
    def order(self) -> int:
        return sum(self.demands)

    def expand(self) -> Graph:
        return blowup(self.base, self.demands)


# -- builders -----------------------------------------------------------------


def empty(k: int) -> Graph:
    return Graph(k, ())


def complete(k: int) -> Graph:
    if k < 0:
        raise ValueError("complete(k) needs k >= 0")
    return Graph(k, tuple(combinations(range(k), 2)))


def path(m: int) -> Graph:
    """Path on ``m`` vertices with endpoints 0 and m-1."""
    if m < 1:
        raise ValueError("path(m) needs m >= 1")
    return Graph(m, tuple((i, i + 1) for i in range(m - 1)))


def cycle(m: int) -> Graph:
    if m < 3:
        raise ValueError(f"cycle(m) needs m >= 3, got {m}")
    return Graph(m, tuple((i, (i + 1) % m) for i in range(m)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    s = g1.n
    return Graph(g1.n + g2.n, g1.edges + tuple((u + s, v + s) for u, v in g2.edges))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    s = g1.n
    cross = tuple((u, v + s) for u in range(g1.n) for v in range(g2.n))
    return Graph(g1.n + g2.n, g1.edges + tuple((u + s, v + s) for u, v in g2.edges) + cross)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Shortest-path distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def power(g: Graph, k: int) -> Graph:
    """Join every pair of vertices at distance between 1 and ``k``."""
    if k < 1:
        raise ValueError("power(g, k) needs k >= 1")
    edges = []
    for u in range(g.n):
        dist = bfs_distances(g, u)
        edges.extend((u, v) for v in range(u + 1, g.n) if 1 <= dist[v] <= k)
    return Graph(g.n, tuple(edges))


def blowup(g: Graph, weights: Sequence[int]) -> Graph:
    """Replace vertex ``v`` by an independent set of ``weights[v]`` clones.

    Clones of ``u`` and ``v`` are completely joined iff ``uv`` is an edge.
    """
    weights = _check_vector("weights", weights, g.n, 0)
    offsets = [0]
    for w in weights:
        offsets.append(offsets[-1] + w)
    edges = []
    for u, v in g.edges:
        for i in range(offsets[u], offsets[u + 1]):
            for j in range(offsets[v], offsets[v + 1]):
                edges.append((i, j))
    return Graph(offsets[-1], tuple(edges))


def expand(pattern: PatternWithDemands) -> Graph:
    return blowup(pattern.base, pattern.demands)


def contract_nonadjacent(g: Graph, u: int, v: int) -> Graph:
    """Identify nonadjacent ``u`` and ``v`` into one vertex with neighbourhood ``N(u) | N(v)``.

    The merged vertex takes the smaller of the two labels.
    """
    if u == v:
        raise ValueError("cannot contract a vertex with itself")
    if g.has_edge(u, v):
        raise ValueError(f"vertices {u} and {v} are adjacent")
    keep, drop = min(u, v), max(u, v)

    def relabel(w: int) -> int:
        if w == drop:
            return keep
        return w - 1 if w > drop else w

    edges = {tuple(sorted((relabel(a), relabel(b)))) for a, b in g.edges}
    return Graph(g.n - 1, tuple(edges))


# -- serialization ------------------------------------------------------------


def graph_to_json(obj: Graph | WeightedGraph | PatternWithDemands) -> dict:
    """JSON object ``{"n", "edges"}`` plus ``weights`` or ``demands`` for the annotated types."""
    g = obj if isinstance(obj, Graph) else obj.base
    out: dict = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if isinstance(obj, WeightedGraph):
        out["weights"] = list(obj.weights)
    elif isinstance(obj, PatternWithDemands):
        out["demands"] = list(obj.demands)
    return out


def graph_from_json(data: dict | str) -> Graph | WeightedGraph | PatternWithDemands:
    if isinstance(data, str):
        data = json.loads(data)
    if "n" not in data or "edges" not in data:
        raise ValueError("graph JSON needs keys 'n' and 'edges'")
    g = Graph(int(data["n"]), tuple(tuple(e) for e in data["edges"]))
    if "weights" in data:
        return WeightedGraph(g, tuple(data["weights"]))
    if "demands" in data:
        return PatternWithDemands(g, tuple(data["demands"]))
    return g


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    text = text.strip()
    if text.startswith(b">>graph6<<"):
        text = text[len(b">>graph6<<"):]
    return Graph.from_networkx(nx.from_graph6_bytes(text))


def to_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


def to_dot(
    obj: Graph | WeightedGraph,
    name: str = "G",
    highlight: Iterable[int] = (),
    bold_edges: Iterable[tuple[int, int]] = (),
) -> str:
    """Undirected DOT text.  Weighted graphs label each part with its size and
    scale node width with it, so a dominant part is drawn larger."""
    g = obj if isinstance(obj, Graph) else obj.base
    weights = obj.weights if isinstance(obj, WeightedGraph) else None
    highlight = set(highlight)
    bold = {tuple(sorted(e)) for e in bold_edges}
    lines = [f"graph {name} {{", "  node [shape=circle, style=filled, fillcolor=gray85];"]
    top = max(weights) if weights else 1
    for v in range(g.n):
        attrs = []
        if weights is not None:
            width = 0.3 + 0.9 * (weights[v] / top if top else 0)
            attrs.append(f'label="{v}:{weights[v]}"')
            attrs.append(f"width={width:.2f}")
        else:
            attrs.append(f'label="{v}"')
        if v in highlight:
            attrs.append("fillcolor=white, penwidth=2")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.edges:
        suffix = " [penwidth=3]" if (u, v) in bold else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_graph_file(path: str) -> Graph | WeightedGraph | PatternWithDemands:
    """Read graph JSON, or a graph6 string when the file does not parse as JSON."""
    with open(path, encoding="ascii") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        return from_graph6(text)
    return graph_from_json(data)
