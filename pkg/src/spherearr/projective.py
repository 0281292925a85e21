"""Antipodal quotient of the spherical Salvetti complex.

The antipode ``(F, C) -> (F#, C#)`` is a free cellular involution, so the
quotient is a CW complex with one cell per orbit and the folded cellular
chain complex computes its homology.  Orientations: each orbit is oriented
by its representative (the lower cell index); the partner cell gets the
orientation pushed forward by the antipode.  If ``a_*(c) = s_c · a(c)`` in
the spherical orientations, then ``s`` is determined by ``s = 1`` on
vertices and the chain-map identity ``s_c [a(c):a(d)] = [c:d] s_d``.

Loops of the quotient 1-skeleton are written as ordinary words whose base is
either lift of the base orbit chamber: the antipode preserves wall labels,
so the token sequence lifts unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ComputationError, InputError
from .homology import CellPoset, ChainComplex, HomologyResult, homology, incidence_numbers
from .linalg import IntMatrix
from .salvetti import SalComplex
from .words import Groupoid, Word, negate


@dataclass
class QuotientComplex:
    """Orbit cells of the antipodal action and their folded boundaries.

    Attributes
    ----------
    representatives : list of list of int
        Representative spherical cell ids, grouped by dimension.
    partner : list of int
        Antipodal cell of every spherical cell.
    transport : list of int
        Sign ``s_c`` with which the antipode carries the orientation of c
        onto that of its partner.
    chains : ChainComplex
        Folded chain complex, one row/column per orbit.
    """

    representatives: list[list[int]]
    partner: list[int]
    transport: list[int]
    chains: ChainComplex
    spherical_counts: list[int]

    def count_by_dim(self) -> list[int]:
        return [len(g) for g in self.representatives]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * c for k, c in enumerate(self.count_by_dim()))

    def render(self, result: HomologyResult | None = None) -> str:
        result = result if result is not None else quotient_homology(self)
        lines = [
            f"spherical cells: {' '.join(map(str, self.spherical_counts))}",
            f"orbit cells: {' '.join(map(str, self.count_by_dim()))}",
            f"euler characteristic: {self.euler_characteristic}",
        ]
        return "\n".join(lines + result.lines())


def quotient_complex(s: SalComplex) -> QuotientComplex:
    n_cells = len(s)
    partner = [s.antipode(i) for i in range(n_cells)]
    for i, j in enumerate(partner):
        if i == j:
            raise ComputationError("E_FIXED_CELL", f"cell {s.label(i)} is fixed by the antipode")
        if partner[j] != i:
            raise ComputationError("E_FIXED_CELL", "antipode is not an involution on cells")
    p = CellPoset.from_salvetti(s)
    cc = incidence_numbers(p)
    inc = _incidences(cc)
    transport = [0] * n_cells
    for c in sorted(range(n_cells), key=lambda i: (p.dims[i], i)):
        if p.dims[c] == 0:
            transport[c] = 1
            continue
        vals = {inc[c, d] * inc[partner[c], partner[d]] * transport[d] for d in p.facets[c]}
        if len(vals) != 1:
            raise ComputationError("E_INCONSISTENT", f"antipode does not transport the orientation of {s.label(c)}")
        transport[c] = vals.pop()

    top = s.top_dim
    reps: list[list[int]] = [[] for _ in range(top + 1)]
    for c in range(n_cells):
        if c < partner[c]:
            reps[p.dims[c]].append(c)
    row_of = {}
    for group in reps:
        for r, c in enumerate(group):
            row_of[c] = r
    boundary = {}
    for k in range(1, top + 1):
        entries: dict[tuple[int, int], int] = {}
        for r, c in enumerate(reps[k]):
            for d in p.facets[c]:
                if d in row_of:
                    col, sign = row_of[d], 1
                else:
                    col, sign = row_of[partner[d]], transport[partner[d]]
                v = entries.get((r, col), 0) + inc[c, d] * sign
                if v:
                    entries[r, col] = v
                else:
                    entries.pop((r, col), None)
        boundary[k] = IntMatrix(len(reps[k]), len(reps[k - 1]), entries)
    chains = ChainComplex([list(g) for g in reps], boundary)
    return QuotientComplex(reps, partner, transport, chains, s.count_by_dim())


def _incidences(cc: ChainComplex) -> dict[tuple[int, int], int]:
    out = {}
    for k, m in cc.boundary.items():
        for (i, j), v in m.entries.items():
            out[cc.cells[k][i], cc.cells[k - 1][j]] = v
    return out


def quotient_homology(q: QuotientComplex) -> HomologyResult:
    return homology(q.chains)


def lift_parity(w: Word) -> int:
    """0 if the lift of a quotient loop closes up, 1 if it ends at the antipodal chamber."""
    if w.end == w.base:
        return 0
    if w.end == negate(w.base):
        return 1
    raise InputError("E_BAD_WORD", "word is not a loop in the quotient")


def projective_words_equal(g: Groupoid, u: Word, v: Word, budget: int | None = None) -> bool:
    """Word problem in the quotient, decided on the double cover.

    Both loops are lifted from the base chamber of ``u``.  Lifts ending at
    different chambers represent different classes; otherwise the lift of
    ``u · v^-1`` is a spherical loop compared with the trivial loop.
    """
    if v.base == negate(u.base):
        v = v.antipodal()
    if v.base != u.base:
        raise InputError("E_BAD_WORD", "loops are not based at the same orbit chamber")
    g.check(u)
    g.check(v)
    if lift_parity(u) != lift_parity(v):
        return False
    return g.words_equal(u * v.inverse(), Word(u.base), budget)
