"""Salvetti cell complexes of sphere and hemisphere arrangements.

Cells are pairs ``(F, C)`` of a face F and a chamber C with ``F <= C``; the
cell has dimension ``l - dim F``.  ``(G, D)`` lies in the closure of
``(F, C)`` iff ``F <= G`` and ``D = G∘C``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .arrangement import FacePoset, sign_string
from .errors import ComputationError


@dataclass(frozen=True)
class SalCell:
    face: int
    chamber: int
    dim: int


class SalComplex:
    def __init__(self, fp: FacePoset, kind: str):
        self.poset = fp
        self.kind = kind
        l = fp.sphere_dim
        cells = [
            SalCell(f, c, l - fp.faces[f].dim)
            for f in range(len(fp))
            for c in fp.chambers
            if fp.leq(f, c)
        ]
        cells.sort(key=lambda s: (s.dim, s.face, s.chamber))
        self.cells = cells
        self.index = {(s.face, s.chamber): i for i, s in enumerate(cells)}

    def __len__(self):
        return len(self.cells)

    def __repr__(self):
        return f"SalComplex({self.kind}, cells={self.count_by_dim()})"

    @property
    def top_dim(self) -> int:
        return self.poset.sphere_dim

    def count_by_dim(self) -> list[int]:
        counts = [0] * (self.top_dim + 1)
        for s in self.cells:
            counts[s.dim] += 1
        return counts

    def cell_id(self, face: int, chamber: int) -> int:
        return self.index[face, chamber]

    @cached_property
    def facets(self) -> list[list[int]]:
        """Codimension-one cells in the boundary of each cell, in cell order."""
        fp = self.poset
        out = []
        for s in self.cells:
            # faces G covering F in the face poset give dual cells one dimension lower
            ids = [self.index[g, fp.compose(g, s.chamber)] for g in fp.up_covers[s.face]]
            out.append(sorted(ids))
        return out

    def leq(self, i: int, j: int) -> bool:
        """Cell i lies in the closure of cell j."""
        a, b = self.cells[i], self.cells[j]
        fp = self.poset
        return fp.leq(b.face, a.face) and a.chamber == fp.compose(a.face, b.chamber)

    def closure(self, i: int) -> set[int]:
        fp = self.poset
        s = self.cells[i]
        return {
            self.index[g, fp.compose(g, s.chamber)]
            for g in range(len(fp))
            if fp.leq(s.face, g)
        }

    def label(self, i: int) -> str:
        s = self.cells[i]
        fp = self.poset
        f = fp.faces[s.face]
        return f"{s.dim}:{f.label()}/{sign_string(fp.faces[s.chamber].sv)}"

    def antipode(self, i: int) -> int:
        s = self.cells[i]
        fp = self.poset
        return self.index[fp.antipode(s.face), fp.antipode(s.chamber)]


def build_salvetti(fp: FacePoset) -> SalComplex:
    return SalComplex(fp, "spherical")


def build_salvetti_affine(fp: FacePoset) -> SalComplex:
    """Salvetti complex of a hemisphere-restricted (affine) face poset."""
    if not fp.chambers:
        raise ComputationError("E_EMPTY", "restricted arrangement has no chamber")
    return SalComplex(fp, "affine")


def chamber_embedding(s: SalComplex, chamber: int) -> list[int]:
    """Cells ``(F, F∘C)`` for every face F: the copy of the dual complex through C."""
    fp = s.poset
    return sorted(s.index[f, fp.compose(f, chamber)] for f in range(len(fp)))


def euler_characteristic(s: SalComplex) -> int:
    return sum((-1) ** k * c for k, c in enumerate(s.count_by_dim()))


def to_dot(s: SalComplex) -> str:
    """Cell poset as a DOT digraph; arcs run from a cell to its facets."""
    lines = ["digraph salvetti {"]
    for i in range(len(s)):
        lines.append(f'  c{i} [label="{s.label(i)}"];')
    for i, fs in enumerate(s.facets):
        for j in fs:
            lines.append(f"  c{i} -> c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
