"""Graph homomorphisms, the x-homotopy relation and reconfiguration components.

A homomorphism G -> H is a tuple ``f`` with ``f[x]`` the image of vertex x.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .graph import Graph

DEFAULT_MAX_HOMS = 200_000


class ResourceLimitError(RuntimeError):
    """A configurable size cap was exceeded."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeded cap of {cap} (raise the cap to continue)")
        self.what = what
        self.cap = cap


def is_hom(G: Graph, H: Graph, f: Sequence[int]) -> bool:
    if len(f) != G.n or any(not 0 <= y < H.n for y in f):
        return False
    return all(H.has_edge(f[u], f[v]) for u, v in G.edges)


def is_multihom(G: Graph, H: Graph, masks: Sequence[int]) -> bool:
    """Check a multi-homomorphism given as one vertex bitmask per G-vertex."""
    if len(masks) != G.n or any(m <= 0 or m >> H.n for m in masks):
        return False
    nm = H.nbr_mask
    for u, v in G.edges:
        mv = masks[v]
        for a in _bits(masks[u]):
            if mv & ~nm[a]:
                return False
    return True


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _support(mask: int, nm: tuple) -> int:
    out = 0
    for a in _bits(mask):
        out |= nm[a]
    return out


def _propagate(G: Graph, H: Graph, dom: list) -> bool:
    """AC-3 on bitmask domains, in place. False on a wipe-out."""
    nm = H.nbr_mask
    queue = deque(range(G.n))
    queued = [True] * G.n
    while queue:
        x = queue.popleft()
        queued[x] = False
        sup = _support(dom[x], nm)
        for z in G.adj[x]:
            if z == x:
                # a looped vertex of G must go to a looped vertex of H
                keep = 0
                for a in _bits(dom[x]):
                    if nm[a] >> a & 1:
                        keep |= 1 << a
                new = keep
            else:
                new = dom[z] & sup
            if new != dom[z]:
                if not new:
                    return False
                dom[z] = new
                if not queued[z]:
                    queued[z] = True
                    queue.append(z)
    return True


def _search(G: Graph, H: Graph, domains: list, cap: int) -> list:
    dom = list(domains)
    if not _propagate(G, H, dom):
        return []
    out = []
    f = [0] * G.n

    def rec(x: int, dom: list):
        if x == G.n:
            out.append(tuple(f))
            if len(out) > cap:
                raise ResourceLimitError("homomorphism count", cap)
            return
        for a in _bits(dom[x]):
            child = list(dom)
            child[x] = 1 << a
            if _propagate(G, H, child):
                f[x] = a
                rec(x + 1, child)

    rec(0, dom)
    return out


def enumerate_homs(G: Graph, H: Graph, max_homs: int = DEFAULT_MAX_HOMS) -> list:
    """All homomorphisms G -> H in lexicographic order of image tuples."""
    full = (1 << H.n) - 1
    return _search(G, H, [full] * G.n, max_homs)


def xhomotopy_adjacent(G: Graph, H: Graph, f: Sequence[int], g: Sequence[int]) -> bool:
    """True iff x -> {f(x), g(x)} is a multi-homomorphism."""
    return all(
        H.has_edge(a, b)
        for u, v in G.edges
        for a in (f[u], g[u])
        for b in (f[v], g[v])
    )


def _neighbor_domains(G: Graph, H: Graph, f: Sequence[int]) -> list:
    # g ~ f iff g is a hom with g(x) adjacent to f(y) for every y in N(x)
    nm = H.nbr_mask
    full = (1 << H.n) - 1
    doms = []
    for x in range(G.n):
        d = full
        for y in G.adj[x]:
            d &= nm[f[y]]
        doms.append(d)
    return doms


def xhomotopy_neighbors(G: Graph, H: Graph, f: Sequence[int], cap: int = DEFAULT_MAX_HOMS) -> list:
    """All homs g != f with f u g a multi-homomorphism, lexicographically."""
    return [g for g in _search(G, H, _neighbor_domains(G, H, f), cap) if g != tuple(f)]


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller root wins, so roots are component minima
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass
class ReconfigGraph:
    """Homs as vertices, edges between x-homotopy-adjacent pairs."""

    G: Graph
    H: Graph
    homs: list
    edges: list
    component_id: list
    index: dict = field(repr=False, default_factory=dict)
    adj: list = field(repr=False, default_factory=list)

    @property
    def num_components(self) -> int:
        return len(set(self.component_id))

    def component(self, cid: int) -> list:
        """Indices of homs in component ``cid``."""
        return [i for i, c in enumerate(self.component_id) if c == cid]

    def component_of(self, f: Sequence[int]) -> int:
        return self.component_id[self.index[tuple(f)]]

    def representatives(self) -> list:
        """Lexicographically least hom index of each component, ordered by component id."""
        first = {}
        for i, c in enumerate(self.component_id):
            first.setdefault(c, i)
        return [first[c] for c in sorted(first)]


def reconfig_components(G: Graph, H: Graph, max_homs: int = DEFAULT_MAX_HOMS) -> ReconfigGraph:
    """Enumerate homs and partition them into x-homotopy classes.

    Component ids are 0, 1, ... in order of each component's least hom.
    """
    homs = enumerate_homs(G, H, max_homs)
    index = {f: i for i, f in enumerate(homs)}
    adj = [[] for _ in homs]
    edges = []
    uf = _UnionFind(len(homs))
    for i, f in enumerate(homs):
        for g in xhomotopy_neighbors(G, H, f, max_homs):
            j = index[g]
            adj[i].append(j)
            if i < j:
                edges.append((i, j))
                uf.union(i, j)
    roots = {}
    cid = []
    for i in range(len(homs)):
        cid.append(roots.setdefault(uf.find(i), len(roots)))
    return ReconfigGraph(G, H, homs, edges, cid, index, adj)


def find_xhomotopy_path(rg: ReconfigGraph, f: Sequence[int], g: Sequence[int]) -> Optional[list]:
    """Shortest sequence of homs from f to g with consecutive entries adjacent."""
    src, dst = rg.index[tuple(f)], rg.index[tuple(g)]
    if rg.component_id[src] != rg.component_id[dst]:
        return None
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            break
        for w in rg.adj[u]:
            if w not in prev:
                prev[w] = u
                queue.append(w)
    path = []
    u = dst
    while u is not None:
        path.append(rg.homs[u])
        u = prev[u]
    return path[::-1]


def is_xhomotopy(G: Graph, H: Graph, seq: Sequence[Sequence[int]]) -> bool:
    """A list of homs is an x-homotopy iff consecutive entries are adjacent."""
    return all(is_hom(G, H, f) for f in seq) and all(
        xhomotopy_adjacent(G, H, a, b) for a, b in zip(seq, seq[1:])
    )


def fold_reduce(H: Graph) -> tuple:
    """Repeatedly delete a vertex u with N(u) contained in N(w), w != u.

    Returns ``(reduced, vmap)`` where ``vmap[y]`` is the reduced-graph index
    that original vertex y retracts onto.
    """
    alive = list(range(H.n))
    target = list(range(H.n))
    current = H
    while True:
        hit = None
        nm = current.nbr_mask
        for u in range(current.n):
            for w in range(current.n):
                if w != u and nm[u] & ~nm[w] == 0:
                    hit = (u, w)
                    break
            if hit:
                break
        if hit is None:
            break
        u, w = hit
        gone, dest = alive[u], alive[w]
        for y in range(H.n):
            if target[y] == gone:
                target[y] = dest
        keep = [i for i in range(current.n) if i != u]
        current, _ = current.subgraph(keep)
        alive = [alive[i] for i in keep]
    pos = {v: i for i, v in enumerate(alive)}
    return current, [pos[target[y]] for y in range(H.n)]


__all__ = [
    "DEFAULT_MAX_HOMS",
    "ReconfigGraph",
    "ResourceLimitError",
    "enumerate_homs",
    "find_xhomotopy_path",
    "fold_reduce",
    "is_hom",
    "is_multihom",
    "is_xhomotopy",
    "reconfig_components",
    "xhomotopy_adjacent",
    "xhomotopy_neighbors",
]
