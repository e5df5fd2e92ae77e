"""Walk reduction, universal 2-cover balls and realizable subgroups for square-free targets."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .freegroup import (
    Pi1Presentation,
    SubgroupClass,
    SubgroupGraph,
    pi1_presentation,
    stallings_classify,
    walk_to_word,
)
from .graph import Graph, is_square_free, is_walk
from .homs import ReconfigGraph, ResourceLimitError, is_xhomotopy, reconfig_components

DEFAULT_MAX_BALL = 100_000


class NotSquareFreeError(ValueError):
    pass


def _require_square_free(H: Graph) -> None:
    if not is_square_free(H):
        raise NotSquareFreeError("target graph must be square-free")


def reduce_walk(H: Graph, walk: Sequence[int]) -> tuple:
    """Delete backtracks x, y, x -> x until none remain."""
    _require_square_free(H)
    if not is_walk(H, walk):
        raise ValueError(f"not a walk in H: {tuple(walk)}")
    out = []
    for x in walk:
        if len(out) >= 2 and out[-2] == x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass
class CoverBall:
    """Ball of radius r about the root in the universal 2-cover of H.

    Vertex ``i`` is the reduced walk ``walks[i]``; ``projection[i]`` is its
    last vertex. ``tree`` holds the adjacency among ball vertices.
    """

    H: Graph
    root: int
    radius: int
    walks: list
    projection: list
    tree: Graph

    def depth(self, i: int) -> int:
        return len(self.walks[i]) - 1

    @property
    def interior(self) -> list:
        return [i for i in range(len(self.walks)) if self.depth(i) <= self.radius - 2]

    def counts_by_depth(self) -> list:
        out = [0] * (self.radius + 1)
        for w in self.walks:
            out[len(w) - 1] += 1
        return out

    def is_tree(self) -> bool:
        from .graph import is_tree

        return is_tree(self.tree)

    def to_dot(self) -> str:
        lines = ["graph coverball {"]
        for i, w in enumerate(self.walks):
            lines.append(f'  {i} [label="{self.projection[i]}"];')
        for u, v in self.tree.edge_list():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def cover_ball(H: Graph, w: int, r: int, max_vertices: int = DEFAULT_MAX_BALL) -> CoverBall:
    _require_square_free(H)
    if r < 2:
        raise ValueError("radius must be >= 2")
    walks = [(w,)]
    edges = []
    layer = [0]
    for _ in range(r):
        nxt = []
        for i in layer:
            walk = walks[i]
            back = walk[-2] if len(walk) > 1 else None
            for y in H.neighbors(walk[-1]):
                if y == back:
                    continue
                walks.append(walk + (y,))
                if len(walks) > max_vertices:
                    raise ResourceLimitError("cover ball size", max_vertices)
                edges.append((i, len(walks) - 1))
                nxt.append(len(walks) - 1)
        layer = nxt
    return CoverBall(H, w, r, walks, [x[-1] for x in walks], Graph.from_edges(len(walks), edges))


def _second_neighborhood(G: Graph, x: int) -> set:
    return {z for y in G.adj[x] for z in G.adj[y]}


def verify_two_covering(ball: CoverBall) -> bool:
    """p is a homomorphism and bijective on N and N^2 at every interior vertex."""
    H, T, p = ball.H, ball.tree, ball.projection
    if any(not H.has_edge(p[u], p[v]) for u, v in T.edges):
        return False
    for x in ball.interior:
        for local, target in (
            (T.adj[x], H.adj[p[x]]),
            (_second_neighborhood(T, x), _second_neighborhood(H, p[x])),
        ):
            image = [p[y] for y in local]
            if len(set(image)) != len(image) or set(image) != set(target):
                return False
    return True


# -- realized classes --------------------------------------------------------

@dataclass
class RealizedClass:
    walk: tuple
    word: tuple

    @property
    def length(self) -> int:
        return len(self.walk) - 1


def interleaved_walk(homs: Sequence[Sequence[int]], v: int, v2: int) -> list:
    """(f0(v), f0(v2), f1(v), f1(v2), ..., fn(v))."""
    walk = [homs[0][v]]
    for prev, cur in zip(homs, homs[1:]):
        walk.append(prev[v2])
        walk.append(cur[v])
    return walk


def realized_class(
    G: Graph,
    H: Graph,
    homs: Sequence[Sequence[int]],
    v: int,
    PH: Pi1Presentation,
    v2: Optional[int] = None,
    check_all_neighbors: bool = False,
) -> RealizedClass:
    """Class in pi_1(H, f(v)) traced at v by a closed x-homotopy f0, ..., fn = f0."""
    if not G.adj[v] - {v}:
        raise ValueError(f"base vertex {v} is isolated")
    if tuple(homs[0]) != tuple(homs[-1]):
        raise ValueError("x-homotopy must start and end at the same hom")
    if not is_xhomotopy(G, H, homs):
        raise ValueError("sequence is not an x-homotopy")
    if v2 is None:
        v2 = min(G.adj[v] - {v})
    elif v2 not in G.adj[v] or v2 == v:
        raise ValueError(f"{v2} is not a neighbour of {v}")
    walk = reduce_walk(H, interleaved_walk(homs, v, v2))
    rc = RealizedClass(walk, walk_to_word(PH, walk))
    if check_all_neighbors:
        for u in sorted(G.adj[v] - {v}):
            other = reduce_walk(H, interleaved_walk(homs, v, u))
            if other != walk:
                raise AssertionError(f"realized class depends on neighbour: {walk} vs {other}")
    return rc


@dataclass
class RealizableSubgroup:
    """Pi(f, v): generators from fundamental cycles of the reconfiguration graph."""

    f: tuple
    v: int
    presentation: Pi1Presentation
    generators: list
    subgroup: SubgroupGraph
    subgroup_class: SubgroupClass
    loops_checked: int

    @property
    def rank(self) -> int:
        return self.subgroup.rank


def fundamental_loops(rg: ReconfigGraph, f: Sequence[int]) -> list:
    """Closed x-homotopies at f, one per non-tree edge of a BFS tree of f's component."""
    src = rg.index[tuple(f)]
    parent = {src: None}
    order = [src]
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in sorted(rg.adj[u]):
            if w not in parent:
                parent[w] = u
                order.append(w)
                queue.append(w)

    def path(x):
        out = []
        while x is not None:
            out.append(x)
            x = parent[x]
        return out[::-1]

    tree = {(min(a, b), max(a, b)) for a, b in parent.items() if b is not None}
    loops = []
    for a in order:
        for b in sorted(rg.adj[a]):
            if a < b and b in parent and (a, b) not in tree:
                idx = path(a) + path(b)[::-1]
                loops.append([rg.homs[i] for i in idx])
    return loops


def realizable_subgroup(
    G: Graph,
    H: Graph,
    f: Sequence[int],
    v: int,
    rg: Optional[ReconfigGraph] = None,
    check_all_neighbors: bool = False,
) -> RealizableSubgroup:
    _require_square_free(H)
    if rg is None:
        rg = reconfig_components(G, H)
    PH = pi1_presentation(H, f[v])
    gens = []
    loops = fundamental_loops(rg, f)
    for loop in loops:
        rc = realized_class(G, H, loop, v, PH, check_all_neighbors=check_all_neighbors)
        if rc.length % 2:
            raise AssertionError(f"realized walk has odd length: {rc.walk}")
        if rc.word:
            gens.append(rc.word)
    gens = sorted(set(gens), key=lambda w: (len(w), w))
    cls, sub = stallings_classify(gens)
    return RealizableSubgroup(tuple(f), v, PH, gens, sub, cls, len(loops))


__all__ = [
    "CoverBall",
    "NotSquareFreeError",
    "RealizableSubgroup",
    "RealizedClass",
    "cover_ball",
    "fundamental_loops",
    "interleaved_walk",
    "realizable_subgroup",
    "realized_class",
    "reduce_walk",
    "verify_two_covering",
]
