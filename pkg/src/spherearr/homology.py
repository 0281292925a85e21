"""Integral homology of regular cell posets.

Two independent routes are provided:

* cellular: incidence numbers ``[c:d] = ±1`` are fixed by the diamond
  condition of a regular CW complex, then homology is read off the Smith
  normal forms of the boundary matrices;
* simplicial: the order complex (barycentric subdivision) of the cell poset,
  with the usual alternating-sign boundary.

Boundary matrices have one row per k-cell and one column per (k-1)-cell,
so ``∂_k @ ∂_(k-1) == 0``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .arrangement import FacePoset
from .errors import BudgetError, ComputationError, InputError
from .linalg import IntMatrix, smith_normal_form

DEFAULT_SIMPLEX_LIMIT = 50_000


@dataclass
class CellPoset:
    """Cells with dimensions and codimension-one boundary (facet) lists."""

    dims: list[int]
    facets: list[list[int]]

    @classmethod
    def from_salvetti(cls, s) -> "CellPoset":
        return cls([c.dim for c in s.cells], [list(f) for f in s.facets])

    @classmethod
    def from_face_poset(cls, fp: FacePoset) -> "CellPoset":
        """The regular cell structure induced on the sphere (or affine space) by the faces."""
        return cls([f.dim for f in fp.faces], [sorted(d) for d in fp.down_covers])

    def __len__(self):
        return len(self.dims)

    @property
    def top_dim(self) -> int:
        return max(self.dims, default=-1)

    def closure(self, i: int) -> set[int]:
        seen = {i}
        stack = [i]
        while stack:
            for j in self.facets[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return seen

    def is_subcomplex(self, cells: Iterable[int]) -> bool:
        cells = set(cells)
        return all(set(self.facets[c]) <= cells for c in cells)

    def restrict(self, cells: Iterable[int]) -> "CellPoset":
        """Subposet on a closed cell subset, reindexed in increasing order."""
        keep = sorted(set(cells))
        if not self.is_subcomplex(keep):
            raise InputError("E_NOT_SUBCOMPLEX", "cell subset is not closed under taking faces")
        pos = {c: k for k, c in enumerate(keep)}
        return CellPoset([self.dims[c] for c in keep], [[pos[d] for d in self.facets[c]] for c in keep])


@dataclass
class ChainComplex:
    """Cells grouped by dimension plus integer boundary matrices.

    ``cells[k]`` lists cell ids of dimension k (in the source poset's
    numbering); ``boundary[k]`` is the matrix of ``∂_k`` for k >= 1.
    """

    cells: list[list[int]]
    boundary: dict[int, IntMatrix]

    @property
    def top_dim(self) -> int:
        return len(self.cells) - 1

    def check(self):
        for k in range(2, self.top_dim + 1):
            if not (self.boundary[k] @ self.boundary[k - 1]).is_zero():
                raise ComputationError("E_NOT_COMPLEX", f"boundary_{k} ∘ boundary_{k - 1} != 0")

    def drop(self, cells: Iterable[int]) -> "ChainComplex":
        """Quotient by a subcomplex: remove the given cells' rows and columns."""
        gone = set(cells)
        kept = [[c for c in group if c not in gone] for group in self.cells]
        boundary = {}
        for k in range(1, self.top_dim + 1):
            rows = {c: r for r, c in enumerate(self.cells[k])}
            cols = {c: r for r, c in enumerate(self.cells[k - 1])}
            new_r = {r: i for i, r in enumerate(rows[c] for c in kept[k])}
            new_c = {r: i for i, r in enumerate(cols[c] for c in kept[k - 1])}
            entries = {
                (new_r[i], new_c[j]): v
                for (i, j), v in self.boundary[k].entries.items()
                if i in new_r and j in new_c
            }
            boundary[k] = IntMatrix(len(kept[k]), len(kept[k - 1]), entries)
        return ChainComplex(kept, boundary)

    def export(self) -> str:
        """Plain text: a ``cells`` header, then each ``∂_k`` under ``boundary k rows cols``."""
        lines = ["cells " + " ".join(str(len(g)) for g in self.cells)]
        for k in range(1, self.top_dim + 1):
            m = self.boundary[k]
            lines.append(f"boundary {k} {m.rows} {m.cols}")
            lines += [" ".join(str(v) for v in row) for row in m.to_dense()]
        return "\n".join(lines) + "\n"


def parse_chain_complex(text: str) -> ChainComplex:
    lines = text.strip("\n").split("\n")
    counts = [int(x) for x in lines[0].split()[1:]]
    cells, start = [], 0
    for c in counts:
        cells.append(list(range(start, start + c)))
        start += c
    boundary = {}
    pos = 1
    while pos < len(lines):
        _, k, rows, cols = lines[pos].split()
        k, rows, cols = int(k), int(rows), int(cols)
        dense = [[int(x) for x in lines[pos + 1 + r].split()] for r in range(rows)]
        boundary[k] = IntMatrix.from_dense(dense, cols) if rows else IntMatrix(0, cols)
        pos += 1 + rows
    return ChainComplex(cells, boundary)


@dataclass(frozen=True)
class HomologyResult:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti))

    @property
    def torsion_free(self) -> bool:
        return not any(self.torsion)

    def lines(self) -> list[str]:
        return [
            f"H{k}: betti={b} torsion={','.join(str(t) for t in tors)}"
            for k, (b, tors) in enumerate(zip(self.betti, self.torsion))
        ]

    def betti_line(self) -> str:
        return "H: " + " ".join(str(b) for b in self.betti)

    def __str__(self):
        return "\n".join(self.lines())


def _chain_complex(dims: Sequence[int], signs: dict) -> ChainComplex:
    top = max(dims, default=-1)
    cells: list[list[int]] = [[] for _ in range(top + 1)]
    for c, k in enumerate(dims):
        cells[k].append(c)
    pos = {}
    for group in cells:
        for r, c in enumerate(group):
            pos[c] = r
    entries: dict[int, dict] = {k: {} for k in range(1, top + 1)}
    for (c, d), v in signs.items():
        entries[dims[c]][pos[c], pos[d]] = v
    boundary = {k: IntMatrix(len(cells[k]), len(cells[k - 1]), entries[k]) for k in range(1, top + 1)}
    return ChainComplex(cells, boundary)


def incidence_numbers(p: CellPoset) -> ChainComplex:
    """Cellular chain complex of a regular cell poset.

    For each cell the facet signs are propagated breadth-first across shared
    ridges so that every diamond ``c > d1, d2 > e`` satisfies
    ``[c:d1][d1:e] + [c:d2][d2:e] = 0``; the lowest-numbered facet gets +1.
    Edges are treated as diamonds over the empty cell.
    """
    sign: dict[tuple[int, int], int] = {}
    for c in sorted(range(len(p)), key=lambda i: (p.dims[i], i)):
        k = p.dims[c]
        fs = sorted(p.facets[c])
        if any(p.dims[d] != k - 1 for d in fs):
            raise ComputationError("E_NOT_REGULAR", f"cell {c} has a facet of the wrong dimension")
        if k == 0:
            continue
        if k == 1:
            if len(fs) != 2:
                raise ComputationError("E_NOT_REGULAR", f"1-cell {c} has {len(fs)} vertices")
            sign[c, fs[0]] = 1
            sign[c, fs[1]] = -1
            continue
        ridges: dict[int, list[int]] = {}
        for d in fs:
            for e in p.facets[d]:
                ridges.setdefault(e, []).append(d)
        graph: dict[int, list[tuple[int, int]]] = {d: [] for d in fs}
        for e, ds in ridges.items():
            if len(ds) != 2:
                raise ComputationError("E_NOT_REGULAR", f"interval between cells {e} and {c} has {len(ds)} middle cells")
            d1, d2 = ds
            rel = -sign[d1, e] * sign[d2, e]
            graph[d1].append((d2, rel))
            graph[d2].append((d1, rel))
        local = {fs[0]: 1}
        queue = deque([fs[0]])
        while queue:
            d = queue.popleft()
            for d2, rel in graph[d]:
                want = local[d] * rel
                if d2 not in local:
                    local[d2] = want
                    queue.append(d2)
                elif local[d2] != want:
                    raise ComputationError("E_INCONSISTENT", f"incidence signs of cell {c} cannot be made consistent")
        if len(local) != len(fs):
            raise ComputationError("E_NOT_REGULAR", f"boundary of cell {c} is disconnected")
        for d, v in local.items():
            sign[c, d] = v
    return _chain_complex(p.dims, sign)


def homology(cc: ChainComplex) -> HomologyResult:
    cc.check()
    top = cc.top_dim
    ranks = [0] * (top + 2)
    factors: list[list[int]] = [[] for _ in range(top + 2)]
    for k in range(1, top + 1):
        ranks[k], factors[k] = smith_normal_form(cc.boundary[k])
    betti = tuple(len(cc.cells[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1))
    torsion = tuple(tuple(f for f in factors[k + 1] if f > 1) for k in range(top + 1))
    return HomologyResult(betti, torsion)


def cellular_homology(p: CellPoset) -> HomologyResult:
    return homology(incidence_numbers(p))


def order_complex(p: CellPoset, limit: int = DEFAULT_SIMPLEX_LIMIT) -> list[tuple[int, ...]]:
    """All chains ``c_0 < c_1 < ... < c_k`` of the cell poset, as vertex tuples.

    Sorted by simplex dimension, then lexicographically.
    """
    below = [sorted(p.closure(c) - {c}) for c in range(len(p))]
    ending: dict[int, list[tuple[int, ...]]] = {}
    total = 0
    for c in sorted(range(len(p)), key=lambda i: (p.dims[i], i)):
        chains = [(c,)]
        for x in below[c]:
            chains.extend(ch + (c,) for ch in ending[x])
        ending[c] = chains
        total += len(chains)
        if total > limit:
            raise BudgetError("E_BUDGET", f"order complex exceeds {limit} simplices")
    simplices = [ch for c in ending for ch in ending[c]]
    simplices.sort(key=lambda s: (len(s), s))
    return simplices


def simplicial_chain_complex(simplices: Sequence[tuple[int, ...]]) -> ChainComplex:
    index = {s: i for i, s in enumerate(simplices)}
    dims = [len(s) - 1 for s in simplices]
    signs = {}
    for i, s in enumerate(simplices):
        if len(s) < 2:
            continue
        for k in range(len(s)):
            signs[i, index[s[:k] + s[k + 1:]]] = -1 if k % 2 else 1
    return _chain_complex(dims, signs)


def order_complex_homology(p: CellPoset, limit: int = DEFAULT_SIMPLEX_LIMIT) -> HomologyResult:
    return homology(simplicial_chain_complex(order_complex(p, limit)))


def relative_homology(p: CellPoset, sub: Iterable[int]) -> HomologyResult:
    """Homology of the pair (p, sub), sub a closed cell subset."""
    sub = set(sub)
    if not p.is_subcomplex(sub):
        raise InputError("E_NOT_SUBCOMPLEX", "cell subset is not closed under taking faces")
    return homology(incidence_numbers(p).drop(sub))


def union_cells(fp: FacePoset) -> list[int]:
    """Faces lying on at least one hypersphere."""
    return [i for i, f in enumerate(fp.faces) if f.pole or 0 in f.sv]


def union_subcomplex_homology(fp: FacePoset) -> HomologyResult:
    return cellular_homology(CellPoset.from_face_poset(fp).restrict(union_cells(fp)))
