"""Exact integral homology via Smith normal form.

Matrices are stored column-sparse: ``cols[j]`` maps row index to a nonzero
Python int, so arithmetic never overflows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .complex import DEFAULT_MAX_DIM, CellPoset, OrderComplex, cell_sets
from .homs import _bits


class IntMatrix:
    """Sparse integer matrix with ``nrows`` rows and ``len(cols)`` columns."""

    def __init__(self, nrows: int, cols: list):
        self.nrows = nrows
        self.cols = cols

    @property
    def ncols(self) -> int:
        return len(self.cols)

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        cols = [{i: int(rows[i][j]) for i in range(nrows) if rows[i][j]} for j in range(ncols)]
        return cls(nrows, cols)

    def to_dense(self) -> list:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    def compose(self, other: "IntMatrix") -> "IntMatrix":
        """self @ other."""
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = []
        for col in other.cols:
            acc = {}
            for k, v in col.items():
                for i, w in self.cols[k].items():
                    acc[i] = acc.get(i, 0) + v * w
            cols.append({i: v for i, v in acc.items() if v})
        return IntMatrix(self.nrows, cols)

    def is_zero(self) -> bool:
        return not any(self.cols)

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)


def _eliminate_unit_pivots(cols: list) -> tuple:
    """Pivot on +-1 entries until none remain.

    Returns (number of unit pivots, remaining nonzero columns). Each pivot is
    a unimodular change of basis splitting off a 1x1 block [1].
    """
    cols = [dict(c) for c in cols]
    rows = {}
    for j, col in enumerate(cols):
        for i in col:
            rows.setdefault(i, set()).add(j)
    alive = {j for j, c in enumerate(cols) if c}
    rank = 0
    progress = True
    while progress:
        progress = False
        for j in sorted(alive, key=lambda j: (len(cols[j]), j)):
            if j not in alive:
                continue
            col = cols[j]
            if not col:
                alive.discard(j)
                continue
            units = [i for i, v in col.items() if v == 1 or v == -1]
            if not units:
                continue
            r = min(units, key=lambda i: (len(rows[i]), i))
            p = col[r]
            for k in sorted(rows[r]):
                if k == j:
                    continue
                ck = cols[k]
                factor = ck[r] * p
                for i, v in col.items():
                    nv = ck.get(i, 0) - factor * v
                    if nv:
                        if i not in ck:
                            rows[i].add(k)
                        ck[i] = nv
                    elif i in ck:
                        del ck[i]
                        rows[i].discard(k)
                if not ck:
                    alive.discard(k)
            for i in col:
                rows[i].discard(j)
            del rows[r]
            cols[j] = {}
            alive.discard(j)
            rank += 1
            progress = True
    return rank, [cols[j] for j in sorted(alive) if cols[j]]


def _dense_snf_diagonal(A: list) -> list:
    """Diagonal of the Smith normal form of a dense matrix (modified in place)."""
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                a = row[j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        ri, rt = A[i], A[t]
                        for k in range(t, n):
                            ri[k] -= q * rt[k]
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        for row in A[t:]:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        dirty = True
            if dirty:
                # a remainder smaller than the pivot survived; make it the pivot
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cand)
                A[t], A[i] = A[i], A[t]
                for row in A:
                    row[t], row[j] = row[j], row[t]
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            rt, rb = A[t], A[bad]
            for k in range(t, n):
                rt[k] += rb[k]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def smith_normal_form(M) -> tuple:
    """Return (rank, invariant factors d1 | d2 | ... ) of an integer matrix.

    ``M`` is an IntMatrix or a dense list of rows.
    """
    if not isinstance(M, IntMatrix):
        M = IntMatrix.from_dense(M)
    units, rest = _eliminate_unit_pivots(M.cols)
    factors = [1] * units
    if rest:
        rows = sorted({i for c in rest for i in c})
        pos = {r: k for k, r in enumerate(rows)}
        dense = [[0] * len(rest) for _ in rows]
        for j, c in enumerate(rest):
            for i, v in c.items():
                dense[pos[i]][j] = v
        factors += _dense_snf_diagonal(dense)
    return len(factors), factors


@dataclass
class ChainComplex:
    """``boundaries[k]`` is d_k : C_k -> C_{k-1} for k = 1..top.

    ``complete`` is False when generators above degree ``top`` were cut off.
    """

    counts: list
    boundaries: dict
    complete: bool = True
    labels: Optional[list] = field(default=None, repr=False)

    @property
    def top(self) -> int:
        return len(self.counts) - 1

    def check_dd_zero(self) -> bool:
        return all(
            self.boundaries[k - 1].compose(self.boundaries[k]).is_zero()
            for k in range(2, self.top + 1)
        )


def boundary_matrices(X: OrderComplex) -> ChainComplex:
    """Simplicial boundary of an order complex; vertex order is the poset order."""
    index = [{s: i for i, s in enumerate(layer)} for layer in X.simplices]
    bounds = {}
    for k in range(1, len(X.simplices)):
        rows = index[k - 1]
        cols = []
        for s in X.simplices[k]:
            cols.append({rows[s[:i] + s[i + 1:]]: (-1) ** i for i in range(k + 1)})
        bounds[k] = IntMatrix(len(X.simplices[k - 1]), cols)
    return ChainComplex([len(layer) for layer in X.simplices], bounds, not X.truncated)


def cellular_chain_complex(P: CellPoset, max_dim: int = DEFAULT_MAX_DIM) -> ChainComplex:
    """Cellular chains of the Hom complex as a subcomplex of a product of simplices.

    A cell is the product over x of the simplex on eta(x); its boundary is
    the Koszul-signed sum of boundaries of the factors.
    """
    top = min(max_dim, max(P.dims, default=0))
    by_dim = [[] for _ in range(top + 1)]
    for i, d in enumerate(P.dims):
        if d <= top:
            by_dim[d].append(i)
    pos = {}
    for layer in by_dim:
        for k, i in enumerate(layer):
            pos[i] = k
    bounds = {}
    for k in range(1, top + 1):
        cols = []
        for i in by_dim[k]:
            cell = P.cells[i]
            col = {}
            shift = 0
            for x, m in enumerate(cell):
                verts = list(_bits(m))
                if len(verts) > 1:
                    for t, a in enumerate(verts):
                        face = cell[:x] + (m & ~(1 << a),) + cell[x + 1:]
                        col[pos[P.index[face]]] = (-1) ** (shift + t)
                shift += len(verts) - 1
            cols.append(col)
        bounds[k] = IntMatrix(len(by_dim[k - 1]), cols)
    complete = top >= max(P.dims, default=0)
    labels = [[cell_sets(P.cells[i]) for i in layer] for layer in by_dim]
    return ChainComplex([len(layer) for layer in by_dim], bounds, complete, labels)


@dataclass
class HomologyProfile:
    """Betti numbers and torsion for degrees 0..len(betti)-1.

    ``chi`` is the alternating count of generators when the complex is
    complete, else None.
    """

    betti: list
    torsion: list
    chi: Optional[int]

    @property
    def torsion_free(self) -> bool:
        return not any(self.torsion)

    def b(self, k: int) -> int:
        return self.betti[k] if k < len(self.betti) else 0

    def as_dict(self) -> dict:
        return {"betti": list(self.betti), "torsion": [list(t) for t in self.torsion], "chi": self.chi}


def homology_profile(C: ChainComplex) -> HomologyProfile:
    """H_k = ker d_k / im d_{k+1}, exact for k < top, and for k = top if complete."""
    snf = {k: smith_normal_form(C.boundaries[k]) for k in C.boundaries}
    rank = {k: r for k, (r, _) in snf.items()}
    last = C.top if C.complete else C.top - 1
    betti, torsion = [], []
    for k in range(last + 1):
        b = C.counts[k] - rank.get(k, 0) - rank.get(k + 1, 0)
        betti.append(b)
        factors = snf[k + 1][1] if k + 1 in snf else []
        torsion.append([d for d in factors if d > 1])
    chi = sum((-1) ** k * c for k, c in enumerate(C.counts)) if C.complete else None
    return HomologyProfile(betti, torsion, chi)


__all__ = [
    "ChainComplex",
    "HomologyProfile",
    "IntMatrix",
    "boundary_matrices",
    "cellular_chain_complex",
    "homology_profile",
    "smith_normal_form",
]
