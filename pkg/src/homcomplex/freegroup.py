"""Free groups of graphs, Stallings foldings and the even part.

A word is a tuple of nonzero ints: ``k`` is generator ``k - 1`` and ``-k``
its inverse.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .graph import Graph, is_connected, is_walk


def reduce_word(word: Sequence[int]) -> tuple:
    out = []
    for a in word:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def inverse(word: Sequence[int]) -> tuple:
    return tuple(-a for a in reversed(word))


def multiply(*words: Sequence[int]) -> tuple:
    return reduce_word([a for w in words for a in w])


def power(word: Sequence[int], k: int) -> tuple:
    if k < 0:
        return power(inverse(word), -k)
    return reduce_word(list(word) * k)


def gen(i: int) -> tuple:
    """The word of generator ``i`` (0-based)."""
    return (i + 1,)


def format_word(word: Sequence[int]) -> str:
    if not word:
        return "1"
    return " ".join(f"g{abs(a) - 1}" + ("" if a > 0 else "^-1") for a in word)


def commutes(u: Sequence[int], w: Sequence[int]) -> bool:
    return not multiply(u, w, inverse(u), inverse(w))


# -- fundamental group presentations ---------------------------------------

@dataclass
class Pi1Presentation:
    """pi_1(G, basepoint) free on the non-tree edges of a BFS spanning tree.

    Generator ``i`` is the non-tree edge ``generators[i] = (a, b)`` with
    ``a < b``, read as the loop tree(v->a), a->b, tree(b->v).
    """

    graph: Graph
    basepoint: int
    parent: list
    depth: list
    generators: list
    edge_index: dict

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def tree_edges(self) -> list:
        return sorted(
            (min(v, p), max(v, p)) for v, p in enumerate(self.parent) if p is not None and p >= 0
        )

    def parity(self, i: int) -> int:
        a, b = self.generators[i]
        return (self.depth[a] + 1 + self.depth[b]) % 2

    @property
    def parities(self) -> list:
        return [self.parity(i) for i in range(self.rank)]

    def tree_path(self, x: int) -> list:
        """Vertices of the tree path from the basepoint to x."""
        out = [x]
        while self.parent[out[-1]] >= 0:
            out.append(self.parent[out[-1]])
        return out[::-1]

    def generator_loop(self, i: int) -> list:
        a, b = self.generators[i]
        return self.tree_path(a) + self.tree_path(b)[::-1]

    def word_parity(self, word: Sequence[int]) -> int:
        return sum(self.parity(abs(a) - 1) for a in word) % 2


def pi1_presentation(G: Graph, v: int) -> Pi1Presentation:
    if not G.is_simple():
        raise ValueError("pi1_presentation needs a simple graph")
    if not is_connected(G):
        raise ValueError("pi1_presentation needs a connected graph")
    parent = [None] * G.n
    depth = [0] * G.n
    parent[v] = -1
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in G.neighbors(u):
            if parent[w] is None:
                parent[w] = u
                depth[w] = depth[u] + 1
                queue.append(w)
    tree = {(min(x, p), max(x, p)) for x, p in enumerate(parent) if p >= 0}
    gens = sorted(e for e in G.edges if e not in tree)
    return Pi1Presentation(G, v, parent, depth, gens, {e: i for i, e in enumerate(gens)})


def walk_to_word(P: Pi1Presentation, walk: Sequence[int]) -> tuple:
    """Freely reduced word of a closed walk at the basepoint."""
    if not is_walk(P.graph, walk) or walk[0] != P.basepoint or walk[-1] != P.basepoint:
        raise ValueError("expected a closed walk at the basepoint")
    letters = []
    for a, b in zip(walk, walk[1:]):
        i = P.edge_index.get((min(a, b), max(a, b)))
        if i is not None:
            letters.append(i + 1 if a < b else -(i + 1))
    return reduce_word(letters)


def word_to_walk(P: Pi1Presentation, word: Sequence[int]) -> list:
    walk = [P.basepoint]
    for a in word:
        loop = P.generator_loop(abs(a) - 1)
        if a < 0:
            loop = loop[::-1]
        walk.extend(loop[1:])
    return walk


def induced_map(f: Sequence[int], PG: Pi1Presentation, PH: Pi1Presentation) -> list:
    """Image word in pi_1(H, f(v)) of each generator of pi_1(G, v)."""
    if f[PG.basepoint] != PH.basepoint:
        raise ValueError("f must send the basepoint of G to the basepoint of H")
    return [walk_to_word(PH, [f[x] for x in PG.generator_loop(i)]) for i in range(PG.rank)]


# -- Stallings graphs --------------------------------------------------------

class SubgroupClass(str, Enum):
    TRIVIAL = "Trivial"
    INFINITE_CYCLIC = "InfiniteCyclic"
    NONABELIAN_FREE = "NonabelianFree"


@dataclass
class SubgroupGraph:
    """Folded core graph; ``edges`` are (u, label > 0, w), basepoint is 0."""

    num_vertices: int
    edges: list
    generators: list

    @property
    def rank(self) -> int:
        return len(self.edges) - self.num_vertices + 1

    def transitions(self) -> dict:
        out = {}
        for u, lab, w in self.edges:
            out[(u, lab)] = w
            out[(w, -lab)] = u
        return out

    def is_folded(self) -> bool:
        seen = set()
        for u, lab, w in self.edges:
            for key in ((u, lab), (w, -lab)):
                if key in seen:
                    return False
                seen.add(key)
        return True

    def is_core(self) -> bool:
        deg = [0] * self.num_vertices
        for u, _, w in self.edges:
            deg[u] += 1
            deg[w] += 1
        return all(d >= 2 for d in deg[1:])

    @property
    def subgroup_class(self) -> SubgroupClass:
        if self.rank == 0:
            return SubgroupClass.TRIVIAL
        if self.rank == 1:
            return SubgroupClass.INFINITE_CYCLIC
        return SubgroupClass.NONABELIAN_FREE


def fold(words: Sequence[Sequence[int]]) -> SubgroupGraph:
    """Stallings graph of the subgroup generated by ``words``, folded and cored."""
    gens = [reduce_word(w) for w in words]
    raw = []
    n = 1
    for w in gens:
        if not w:
            continue
        prev = 0
        for k, a in enumerate(w):
            nxt = 0 if k == len(w) - 1 else n
            if nxt:
                n += 1
            raw.append((prev, a, nxt) if a > 0 else (nxt, -a, prev))
            prev = nxt

    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    changed = True
    while changed:
        changed = False
        out = {}
        for u, lab, w in raw:
            ru, rw = find(u), find(w)
            for key, dest in (((ru, lab), rw), ((rw, -lab), ru)):
                seen = out.get(key)
                if seen is None:
                    out[key] = dest
                else:
                    a, b = find(seen), find(dest)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
                        changed = True
    edges = sorted({(find(u), lab, find(w)) for u, lab, w in raw})

    # prune hanging trees, never the basepoint
    while True:
        deg = {}
        for u, _, w in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[w] = deg.get(w, 0) + 1
        leaves = {v for v, d in deg.items() if d == 1 and v != 0}
        if not leaves:
            break
        edges = [e for e in edges if e[0] not in leaves and e[2] not in leaves]

    verts = sorted({0} | {u for u, _, _ in edges} | {w for _, _, w in edges})
    relabel = {v: i for i, v in enumerate(verts)}
    edges = sorted((relabel[u], lab, relabel[w]) for u, lab, w in edges)
    sub = SubgroupGraph(len(verts), edges, gens)
    if not sub.is_folded():
        raise AssertionError("folding left a non-deterministic vertex")
    return sub


def stallings_classify(words: Sequence[Sequence[int]]) -> tuple:
    """(class, SubgroupGraph) of the subgroup generated by ``words``."""
    sub = fold(words)
    return sub.subgroup_class, sub


def member(sub: SubgroupGraph, word: Sequence[int]) -> bool:
    trans = sub.transitions()
    v = 0
    for a in reduce_word(word):
        nxt = trans.get((v, a))
        if nxt is None:
            return False
        v = nxt
    return v == 0


def coset_count(sub: SubgroupGraph, num_generators: int):
    """Index of the subgroup if its Stallings graph is a full cover, else None."""
    trans = sub.transitions()
    for v in range(sub.num_vertices):
        for g in range(1, num_generators + 1):
            if (v, g) not in trans or (v, -g) not in trans:
                return None
    return sub.num_vertices


def even_part(P: Pi1Presentation) -> list:
    """Generators of the kernel of the length-parity map on pi_1.

    With some odd generator t, uses the Schreier transversal {1, t}.
    """
    par = P.parities
    words = [gen(i) for i in range(P.rank)]
    odd = [i for i, p in enumerate(par) if p]
    if not odd:
        return words
    t = gen(odd[0])
    out = []
    for i, g in enumerate(words):
        if par[i]:
            if i != odd[0]:
                out.append(multiply(g, inverse(t)))
        else:
            out.append(g)
    for i, g in enumerate(words):
        out.append(multiply(t, g) if par[i] else multiply(t, g, inverse(t)))
    return out


__all__ = [
    "Pi1Presentation",
    "SubgroupClass",
    "SubgroupGraph",
    "commutes",
    "coset_count",
    "even_part",
    "fold",
    "format_word",
    "gen",
    "induced_map",
    "inverse",
    "member",
    "multiply",
    "pi1_presentation",
    "power",
    "reduce_word",
    "stallings_classify",
    "walk_to_word",
    "word_to_walk",
]
