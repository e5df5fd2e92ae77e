"""Finite graphs with optional loops, standard constructors and walks.

Vertices are dense integers ``0..n-1``. An edge is stored once as a sorted
pair ``(u, v)`` with ``u <= v``; a loop is ``(v, v)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional, Sequence


class GraphError(ValueError):
    """Invalid graph data or constructor parameters."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset
    labels: Optional[tuple] = None

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        norm = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels must have one entry per vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, labels=None) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges), tuple(labels) if labels else None)

    @cached_property
    def adj(self) -> tuple:
        nb = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return tuple(frozenset(s) for s in nb)

    @cached_property
    def nbr_mask(self) -> tuple:
        """Neighbourhood of each vertex as an int bitmask."""
        return tuple(sum(1 << w for w in s) for s in self.adj)

    def neighbors(self, v: int) -> list:
        return sorted(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def has_loop(self, v: int) -> bool:
        return (v, v) in self.edges

    @property
    def loops(self) -> list:
        return sorted(u for u, v in self.edges if u == v)

    def is_simple(self) -> bool:
        return not self.loops

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_list(self) -> list:
        return sorted(self.edges)

    def euler_characteristic(self) -> int:
        return self.n - len(self.edges)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    def subgraph(self, keep: Sequence[int]) -> tuple:
        """Induced subgraph on ``keep``; returns (graph, old->new index map)."""
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        labels = [self.label(v) for v in keep] if self.labels else None
        return Graph.from_edges(len(keep), edges, labels), index


# -- constructors ---------------------------------------------------------

def path_graph(n: int) -> Graph:
    """P_n: the path with n + 1 vertices and n edges."""
    if n < 1:
        raise GraphError(f"path length must be >= 1, got {n}")
    return Graph.from_edges(n + 1, [(i, i + 1) for i in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle length must be >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def interval_graph(n: int) -> Graph:
    """I_n: vertices 0..n, i ~ j iff |i - j| <= 1 (every vertex looped)."""
    if n < 0:
        raise GraphError(f"interval length must be >= 0, got {n}")
    edges = [(i, i) for i in range(n + 1)] + [(i, i + 1) for i in range(n)]
    return Graph.from_edges(n + 1, edges)


def theta_graph(a: int, b: int, c: int) -> Graph:
    """Two poles 0 and 1 joined by three internally disjoint paths of lengths a, b, c."""
    arms = (a, b, c)
    if min(arms) < 1:
        raise GraphError(f"theta arms must be >= 1, got {arms}")
    if sum(1 for k in arms if k == 1) > 1:
        raise GraphError("at most one theta arm may have length 1 (no multi-edges)")
    edges = []
    n = 2
    for k in arms:
        prev = 0
        for _ in range(k - 1):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, 1))
    return Graph.from_edges(n, edges)


def star_graph(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    if k < 1:
        raise GraphError(f"star needs k >= 1, got {k}")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def bowtie_graph() -> Graph:
    """Two triangles sharing vertex 0."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def looped_vertex() -> Graph:
    return Graph.from_edges(1, [(0, 0)])


_STANDARD = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "interval": interval_graph,
    "theta": theta_graph,
    "star": star_graph,
}


def make_standard(kind: str, *params: int) -> Graph:
    """Build a named graph: path, cycle, complete, interval, theta or star."""
    try:
        ctor = _STANDARD[kind]
    except KeyError:
        raise GraphError(f"unknown graph kind {kind!r}") from None
    try:
        return ctor(*params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {kind}: {params}") from exc


# -- predicates -----------------------------------------------------------

def components(G: Graph) -> list:
    """Vertex sets of the connected components, each sorted, in order of least vertex."""
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for w in G.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(G: Graph) -> bool:
    return len(components(G)) <= 1


def is_bipartite(G: Graph) -> tuple:
    """Return (bipartite?, colouring). The colouring is None when not bipartite."""
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.neighbors(u):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False, None
    return True, color


def find_square(G: Graph) -> Optional[tuple]:
    """First 4-cycle (a, b, c, d) of distinct vertices in lexicographic search order."""
    for a in range(G.n):
        for b in G.neighbors(a):
            if b == a:
                continue
            for c in G.neighbors(b):
                if c in (a, b):
                    continue
                for d in G.neighbors(c):
                    if d not in (a, b, c) and G.has_edge(d, a):
                        return (a, b, c, d)
    return None


def is_square_free(H: Graph) -> bool:
    """True iff H is simple and contains no 4-cycle subgraph."""
    return H.is_simple() and find_square(H) is None


def categorical_product(G: Graph, H: Graph) -> Graph:
    """G x H with vertex (x, y) stored at index x * H.n + y."""
    n = G.n * H.n
    edges = set()
    for x, x2 in G.edges:
        for y, y2 in H.edges:
            edges.add((x * H.n + y, x2 * H.n + y2))
            edges.add((x * H.n + y2, x2 * H.n + y))
    labels = [f"({G.label(x)},{H.label(y)})" for x in range(G.n) for y in range(H.n)]
    return Graph.from_edges(n, edges, labels)


def bfs_distances(G: Graph, source: int) -> list:
    """Distance from ``source`` to every vertex; None where unreachable."""
    dist = [None] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in G.neighbors(u):
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance(G: Graph, u: int, v: int) -> Optional[int]:
    """Shortest walk length from u to v, or None if unreachable."""
    return bfs_distances(G, u)[v]


def is_walk(G: Graph, walk: Sequence[int]) -> bool:
    if not walk:
        return False
    if any(not 0 <= v < G.n for v in walk):
        return False
    return all(G.has_edge(a, b) for a, b in zip(walk, walk[1:]))


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.is_simple() and is_connected(G) and G.num_edges == G.n - 1


def cycle_rank(G: Graph) -> int:
    """Rank of the free group pi_1 for a simple graph (summed over components)."""
    return G.num_edges - G.n + len(components(G))


# -- edge-list text format --------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``u v`` lines; ``#`` lines are comments."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise GraphError(f"line {lineno}: expected 'n <count>', got {line!r}")
            n = _parse_int(parts[1], lineno)
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((_parse_int(parts[0], lineno), _parse_int(parts[1], lineno)))
    if n is None:
        raise GraphError("missing 'n <count>' header")
    return Graph.from_edges(n, edges)


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphError(f"line {lineno}: not an integer: {tok!r}") from None


def format_edge_list(G: Graph) -> str:
    lines = [f"n {G.n}"] + [f"{u} {v}" for u, v in G.edge_list()]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())
