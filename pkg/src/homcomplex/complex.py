"""The cell poset of one component of Hom(G, H) and its order complex.

A cell (multi-homomorphism) is a tuple of int bitmasks, one per vertex of G.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph
from .homs import ResourceLimitError, _bits, is_hom, reconfig_components

DEFAULT_MAX_CELLS = 1_000_000
DEFAULT_MAX_SIMPLICES = 5_000_000
DEFAULT_MAX_DIM = 3


def cell_dim(cell: Sequence[int]) -> int:
    return sum(bin(m).count("1") - 1 for m in cell)


def cell_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x & ~y == 0 for x, y in zip(a, b))


def cell_sets(cell: Sequence[int]) -> list:
    return [sorted(_bits(m)) for m in cell]


def atoms_below(cell: Sequence[int]) -> list:
    """Every hom obtained by picking one vertex from each set (lexicographic)."""
    out = [()]
    for m in cell:
        out = [f + (a,) for f in out for a in _bits(m)]
    return out


@dataclass
class CellPoset:
    """Cells sorted by (dim, masks); ``covers[i]`` lists cells one vertex larger."""

    G: Graph
    H: Graph
    cells: list
    dims: list
    covers: list
    index: dict = field(repr=False, default_factory=dict)

    def __len__(self) -> int:
        return len(self.cells)

    @property
    def atoms(self) -> list:
        return [c for c, d in zip(self.cells, self.dims) if d == 0]

    def leq(self, i: int, j: int) -> bool:
        return cell_leq(self.cells[i], self.cells[j])

    def up_sets(self) -> list:
        """Bitmask of strictly larger cells for each cell."""
        up = [0] * len(self.cells)
        for i in range(len(self.cells) - 1, -1, -1):
            acc = 0
            for j in self.covers[i]:
                acc |= (1 << j) | up[j]
            up[i] = acc
        return up


def _grow(G: Graph, H: Graph, cell: tuple):
    """Cells obtained by adding one vertex of H to one set of ``cell``."""
    nm = H.nbr_mask
    for x in range(G.n):
        allowed = (1 << H.n) - 1
        for z in G.adj[x]:
            if z != x:
                m = cell[z]
                for a in _bits(m):
                    allowed &= nm[a]
        cur = cell[x]
        if G.has_loop(x):
            for a in _bits(cur):
                allowed &= nm[a]
        allowed &= ~cur
        for y in _bits(allowed):
            if G.has_loop(x) and not nm[y] >> y & 1:
                continue
            new = list(cell)
            new[x] = cur | (1 << y)
            yield tuple(new)


def _sort_key(cell: tuple):
    return (cell_dim(cell), cell)


def poset_from_atoms(G: Graph, H: Graph, atoms: Sequence, max_cells: int = DEFAULT_MAX_CELLS) -> CellPoset:
    """Upward closure of a set of homs under single-vertex growth."""
    seen = set()
    frontier = []
    for f in atoms:
        c = tuple(1 << a for a in f)
        if c not in seen:
            seen.add(c)
            frontier.append(c)
    while frontier:
        nxt = []
        for c in frontier:
            for d in _grow(G, H, c):
                if d not in seen:
                    seen.add(d)
                    if len(seen) > max_cells:
                        raise ResourceLimitError("cell count", max_cells)
                    nxt.append(d)
        frontier = nxt
    cells = sorted(seen, key=_sort_key)
    index = {c: i for i, c in enumerate(cells)}
    covers = [sorted(index[d] for d in _grow(G, H, c)) for c in cells]
    dims = [cell_dim(c) for c in cells]
    return CellPoset(G, H, cells, dims, covers, index)


def build_component_poset(
    G: Graph,
    H: Graph,
    seed: Sequence[int],
    max_cells: int = DEFAULT_MAX_CELLS,
    rg=None,
) -> CellPoset:
    """All multi-homomorphisms in the component of Hom(G, H) containing ``seed``."""
    if not is_hom(G, H, seed):
        raise ValueError(f"seed {tuple(seed)} is not a homomorphism")
    if rg is None:
        rg = reconfig_components(G, H)
    cid = rg.component_of(seed)
    atoms = [rg.homs[i] for i in rg.component(cid)]
    return poset_from_atoms(G, H, atoms, max_cells)


def euler_characteristic_cells(P: CellPoset) -> int:
    return sum(-1 if d % 2 else 1 for d in P.dims)


@dataclass
class OrderComplex:
    """Chains of the poset, ``simplices[k]`` the sorted (k+1)-chains.

    ``truncated`` is True when chains longer than ``max_dim + 1`` exist and
    were not listed, so degree ``max_dim`` homology is not exact.
    """

    simplices: list
    max_dim: int
    truncated: bool

    @property
    def counts(self) -> list:
        return [len(s) for s in self.simplices]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.counts))


def order_complex(
    P,
    max_dim: int = DEFAULT_MAX_DIM,
    max_simplices: int = DEFAULT_MAX_SIMPLICES,
) -> OrderComplex:
    """Order complex of a poset up to dimension ``max_dim``.

    ``P`` is a CellPoset or any object with ``__len__`` and ``up_sets()``
    whose element order is a linear extension.
    """
    if max_dim < 0:
        raise ValueError("max_dim must be non-negative")
    up = P.up_sets()
    n = len(up)
    simplices = [[(i,) for i in range(n)]]
    total = n
    if total > max_simplices:
        raise ResourceLimitError("simplex count", max_simplices)
    # each chain carries the up-set of its top element
    layer = [((i,), up[i]) for i in range(n)]
    truncated = False
    for k in range(1, max_dim + 2):
        nxt = []
        for chain, mask in layer:
            for j in _bits(mask):
                nxt.append((chain + (j,), up[j]))
        if not nxt:
            break
        if k == max_dim + 1:
            truncated = True
            break
        total += len(nxt)
        if total > max_simplices:
            raise ResourceLimitError("simplex count", max_simplices)
        nxt.sort()
        simplices.append([c for c, _ in nxt])
        layer = nxt
    return OrderComplex(simplices, max_dim, truncated)


@dataclass
class FinitePoset:
    """Explicit poset on 0..n-1 given by a strict order relation; indices must be a linear extension."""

    less: dict

    def __len__(self) -> int:
        return len(self.less)

    def up_sets(self) -> list:
        return [sum(1 << j for j in self.less[i]) for i in range(len(self.less))]


__all__ = [
    "CellPoset",
    "FinitePoset",
    "OrderComplex",
    "atoms_below",
    "build_component_poset",
    "cell_dim",
    "cell_leq",
    "cell_sets",
    "euler_characteristic_cells",
    "order_complex",
    "poset_from_atoms",
]
