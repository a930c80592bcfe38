"""Immutable simple undirected graphs with truncated-BFS primitives.

Vertex ids are dense 0-based integers. All constructions that add vertices
append fresh ids at the end so that original ids survive, and every
tie-break in the package is "minimum vertex id".
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import InputError

INF = math.inf


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise InputError("adjacency length does not match vertex count")
        if self.labels is not None and len(self.labels) != self.n:
            raise InputError("label count does not match vertex count")
        for u, nbrs in enumerate(self.adjacency):
            prev = -1
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise InputError(f"edge endpoint {v} out of range")
                if v == u:
                    raise InputError(f"self-loop at {u}")
                if v <= prev:
                    raise InputError(f"adjacency of {u} not strictly increasing")
                prev = v
                if u not in self.adjacency[v]:
                    raise InputError(f"edge {u}-{v} not symmetric")

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in self.vertices for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else ""

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex id {v} out of range [0, {self.n})")


def from_edges(n: int, edges: Iterable[tuple[int, int]],
               labels: Optional[Sequence[str]] = None) -> Graph:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u},{v}) out of range")
        if u == v:
            raise InputError(f"self-loop at {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in adj),
                 tuple(labels) if labels is not None else None)


class GraphBuilder:
    """Mutable accumulator for gadget constructions; ids are append-only."""

    def __init__(self, base: Optional[Graph] = None):
        if base is None:
            self._adj: list[set[int]] = []
            self._labels: list[str] = []
            self._labelled = False
        else:
            self._adj = [set(a) for a in base.adjacency]
            self._labelled = base.labels is not None
            self._labels = list(base.labels) if base.labels else [""] * base.n

    @property
    def n(self) -> int:
        return len(self._adj)

    def add_vertex(self, label: str = "") -> int:
        self._adj.append(set())
        self._labels.append(label)
        if label:
            self._labelled = True
        return len(self._adj) - 1

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise InputError(f"self-loop at {u}")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise InputError(f"edge ({u},{v}) out of range")
        self._adj[u].add(v)
        self._adj[v].add(u)

    def add_path(self, u: int, v: int, length: int) -> list[int]:
        """Connect u to v by a path of `length`, inserting length-1 fresh
        internal vertices; returns the fresh ids in path order."""
        if length < 1:
            raise InputError("path length must be >= 1")
        created = []
        prev = u
        for _ in range(length - 1):
            w = self.add_vertex()
            created.append(w)
            self.add_edge(prev, w)
            prev = w
        self.add_edge(prev, v)
        return created

    def build(self) -> Graph:
        labels = tuple(self._labels) if self._labelled else None
        return Graph(self.n, tuple(tuple(sorted(s)) for s in self._adj), labels)


def bfs_distances(g: Graph, sources: Iterable[int], *, radius: Optional[int] = None,
                  forbidden: frozenset[int] | set[int] = frozenset(),
                  no_expand: frozenset[int] | set[int] = frozenset()) -> dict[int, int]:
    """Multi-source BFS. `forbidden` vertices are never visited; `no_expand`
    vertices get a distance but their neighbourhoods are not explored."""
    dist: dict[int, int] = {}
    queue: deque[int] = deque()
    for s in sources:
        g._check_vertex(s)
        if s in forbidden:
            raise InputError(f"BFS source {s} is forbidden")
        if s not in dist:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        d = dist[u]
        if radius is not None and d >= radius:
            continue
        if u in no_expand and d > 0:
            continue
        for w in g.adjacency[u]:
            if w in dist or w in forbidden:
                continue
            dist[w] = d + 1
            queue.append(w)
    return dist


def ball(g: Graph, v: int, r: int) -> set[int]:
    """Closed ball: all vertices at distance <= r from v, including v."""
    if r < 0:
        raise InputError("radius must be >= 0")
    return set(bfs_distances(g, [v], radius=r))


def bounded_distance(g: Graph, u: int, v: int, cap: int):
    """Exact distance if <= cap, else INF."""
    g._check_vertex(v)
    dist = bfs_distances(g, [u], radius=cap)
    return dist.get(v, INF)


@dataclass(frozen=True)
class PathAttachment:
    graph: Graph
    created: tuple[int, ...]
    endpoint: int
    noop: bool = False


def attach_path(g: Graph, u: int, v: Optional[int], length: int) -> PathAttachment:
    """Attach a u-v path of `length` edges; v=None creates a fresh endpoint.

    For length 1 with the edge already present this is a reported no-op.
    """
    g._check_vertex(u)
    if length < 1:
        raise InputError("path length must be >= 1")
    if v is not None:
        g._check_vertex(v)
        if length == 1 and g.has_edge(u, v):
            return PathAttachment(g, (), v, noop=True)
    b = GraphBuilder(g)
    endpoint = b.add_vertex() if v is None else v
    internals = b.add_path(u, endpoint, length)
    created = internals + ([endpoint] if v is None else [])
    return PathAttachment(b.build(), tuple(created), endpoint)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int], dict[int, int]]:
    """Subgraph induced on s, plus maps old->new and new->old."""
    kept = sorted(set(s))
    for v in kept:
        g._check_vertex(v)
    to_new = {v: i for i, v in enumerate(kept)}
    to_old = {i: v for i, v in enumerate(kept)}
    adj = tuple(
        tuple(to_new[w] for w in g.adjacency[v] if w in to_new) for v in kept
    )
    labels = tuple(g.label(v) for v in kept) if g.labels is not None else None
    return Graph(len(kept), adj, labels), to_new, to_old


def greedy_separated(g: Graph, candidates: Iterable[int], separation: int, *,
                     forbidden: frozenset[int] | set[int] = frozenset()) -> list[int]:
    """Greedy maximal subset with pairwise distance > separation in
    g - forbidden; candidates scanned in increasing id order."""
    chosen: list[int] = []
    chosen_set: set[int] = set()
    for v in sorted(set(candidates)):
        if v in forbidden:
            continue
        dist = bfs_distances(g, [v], radius=separation, forbidden=forbidden)
        if any(w in dist for w in chosen_set):
            continue
        chosen.append(v)
        chosen_set.add(v)
    return chosen


def greedy_scattered(g: Graph, x: Iterable[int], r: int) -> list[int]:
    """Greedy maximal r-scattered subset of x (pairwise distance > 2r)."""
    if r < 0:
        raise InputError("radius must be >= 0")
    return greedy_separated(g, x, 2 * r)


def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Repeatedly remove a minimum-degree vertex (ties by id). Returns the
    removal order and the degeneracy of that ordering."""
    degs = [g.degree(v) for v in g.vertices]
    alive = set(g.vertices)
    order: list[int] = []
    degeneracy = 0
    for _ in range(g.n):
        v = min(alive, key=lambda u: (degs[u], u))
        degeneracy = max(degeneracy, degs[v])
        order.append(v)
        alive.remove(v)
        for w in g.adjacency[v]:
            if w in alive:
                degs[w] -= 1
    return order, degeneracy


def degeneracy(g: Graph) -> int:
    return degeneracy_order(g)[1]


def wcol_upper_bound(g: Graph, r: int) -> tuple[int, list[int]]:
    """Upper bound on the weak r-colouring number under the degeneracy-style
    ordering. A reporting aid only; never used for correctness."""
    if r < 1:
        raise InputError("radius must be >= 1")
    order, _ = degeneracy_order(g)
    pos = {v: i for i, v in enumerate(order)}
    # u is weakly r-reachable from v if a path of length <= r exists from v
    # to u using only vertices at or after u in the ordering.
    reach_count = [1] * g.n  # every vertex weakly reaches itself
    for u in g.vertices:
        later = {w for w in g.vertices if pos[w] >= pos[u]}
        forbidden = set(g.vertices) - later
        dist = bfs_distances(g, [u], radius=r, forbidden=forbidden)
        for v in dist:
            if v != u:
                reach_count[v] += 1
    return max(reach_count), order


# --- text format: `p <n> <m>` header, `e <u> <v>` edges, `c` comments ---

def parse_graph(text: str) -> Graph:
    n = None
    m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise InputError(f"line {lineno}: duplicate header")
            try:
                n, m = int(parts[1]), int(parts[2])
            except (IndexError, ValueError):
                raise InputError(f"line {lineno}: bad header {line!r}")
        elif parts[0] == "e":
            if n is None:
                raise InputError(f"line {lineno}: edge before header")
            try:
                u, v = int(parts[1]), int(parts[2])
            except (IndexError, ValueError):
                raise InputError(f"line {lineno}: bad edge {line!r}")
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise InputError(f"line {lineno}: invalid edge ({u},{v})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InputError(f"line {lineno}: duplicate edge ({u},{v})")
            seen.add(key)
            edges.append((u, v))
        elif parts[0] == "l":
            try:
                labels[int(parts[1])] = parts[2]
            except (IndexError, ValueError):
                raise InputError(f"line {lineno}: bad label {line!r}")
        else:
            raise InputError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise InputError("missing header line")
    if m is not None and m != len(edges):
        raise InputError(f"header declares {m} edges, found {len(edges)}")
    label_seq = None
    if labels:
        label_seq = [labels.get(v, "") for v in range(n)]
    return from_edges(n, edges, label_seq)


def serialize_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    if g.labels is not None:
        lines += [f"l {v} {g.labels[v]}" for v in g.vertices if g.labels[v]]
    return "\n".join(lines) + "\n"
