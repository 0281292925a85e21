"""Paths in the oriented 1-skeleton of the Salvetti complex.

Vertices of the 1-skeleton are chambers.  For every chamber C and every wall
i such that zeroing sign i of C gives a face, there is one positive edge
from C to the chamber with sign i flipped.  A :class:`Word` records a base
chamber and a sequence of ``(wall, direction)`` tokens: ``(i, +1)`` follows
the positive edge out of the current chamber across wall i, ``(i, -1)``
runs backwards along the positive edge that enters the current chamber
across wall i.  Either way the current chamber's sign i is flipped.

Text syntax: ``"<base signs> ; <±index> ..."`` with 1-based wall indices,
e.g. ``"++ ; +1 -2 +1"``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .arrangement import FacePoset, parse_signs, sign_string
from .errors import BudgetError, ComputationError, InputError

DEFAULT_CLOSURE_BUDGET = 10**6
DEFAULT_PATH_BUDGET = 10**5

SignVector = tuple


def flip(sv: Sequence[int], i: int) -> tuple[int, ...]:
    out = list(sv)
    out[i] = -out[i]
    return tuple(out)


def negate(sv: Sequence[int]) -> tuple[int, ...]:
    return tuple(-s for s in sv)


@dataclass(frozen=True)
class Word:
    base: tuple[int, ...]
    tokens: tuple[tuple[int, int], ...] = ()

    @classmethod
    def positive(cls, base: Sequence[int], walls: Iterable[int]) -> "Word":
        return cls(tuple(base), tuple((w, 1) for w in walls))

    def __len__(self):
        return len(self.tokens)

    @property
    def walls(self) -> tuple[int, ...]:
        return tuple(w for w, _ in self.tokens)

    def path(self) -> list[tuple[int, ...]]:
        out = [self.base]
        for w, _ in self.tokens:
            out.append(flip(out[-1], w))
        return out

    @property
    def end(self) -> tuple[int, ...]:
        sv = list(self.base)
        for w, _ in self.tokens:
            sv[w] = -sv[w]
        return tuple(sv)

    @property
    def is_loop(self) -> bool:
        return self.end == self.base

    @property
    def is_positive(self) -> bool:
        return all(d == 1 for _, d in self.tokens)

    @property
    def negative_count(self) -> int:
        return sum(1 for _, d in self.tokens if d == -1)

    def __mul__(self, other: "Word") -> "Word":
        if other.base != self.end:
            raise InputError("E_BAD_WORD", "words do not compose: end and base differ")
        return Word(self.base, self.tokens + other.tokens)

    def inverse(self) -> "Word":
        return Word(self.end, tuple((w, -d) for w, d in reversed(self.tokens)))

    def antipodal(self) -> "Word":
        """The image under the antipodal involution: same walls from ``-base``."""
        return Word(negate(self.base), self.tokens)

    def __pow__(self, k: int) -> "Word":
        if not self.is_loop:
            raise InputError("E_BAD_WORD", "only loops can be raised to a power")
        unit = self if k >= 0 else self.inverse()
        return Word(self.base, unit.tokens * abs(k))

    def render(self) -> str:
        toks = " ".join(f"{'+' if d > 0 else '-'}{w + 1}" for w, d in self.tokens)
        return f"{sign_string(self.base)} ; {toks}".rstrip()

    def __str__(self):
        return self.render()


_TOKEN = re.compile(r"^([+\-−])(\d+)$")


def reduce_word(w: Word) -> Word:
    """Free reduction: cancel adjacent tokens crossing the same wall in opposite directions."""
    out: list[tuple[int, int]] = []
    for tok in w.tokens:
        if out and out[-1][0] == tok[0] and out[-1][1] == -tok[1]:
            out.pop()
        else:
            out.append(tok)
    return Word(w.base, tuple(out))


def abelianization_image(w: Word, n: int | None = None) -> tuple[int, ...]:
    """Net signed number of crossings of each wall.

    This is a homomorphism from the fundamental groupoid to ``Z^n``: the two
    boundary paths of every 2-cell cross the same walls once each.
    """
    n = len(w.base) if n is None else n
    image = [0] * n
    for wall, d in w.tokens:
        image[wall] += d
    return tuple(image)


@dataclass(frozen=True)
class Edge:
    source: int
    wall: int
    target: int
    face: int


class ChamberGraph:
    """Chambers and positive edges of the Salvetti 1-skeleton."""

    def __init__(self, fp: FacePoset):
        self.poset = fp
        edges = []
        for c in fp.chambers:
            sv = fp.faces[c].sv
            for i in range(fp.n):
                zeroed = sv[:i] + (0,) + sv[i + 1:]
                for pole in (0, -1, 1):
                    f = fp.index.get((zeroed, pole))
                    if f is not None:
                        edges.append(Edge(c, i, fp.chamber_of[flip(sv, i)], f))
        self.edges = edges
        self.out: dict[int, list[Edge]] = {c: [] for c in fp.chambers}
        for e in edges:
            self.out[e.source].append(e)
        self._walls = {
            fp.faces[c].sv: tuple(sorted({e.wall for e in es})) for c, es in self.out.items()
        }

    @property
    def n_vertices(self) -> int:
        return len(self.poset.chambers)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def is_chamber(self, sv: Sequence[int]) -> bool:
        return tuple(sv) in self.poset.chamber_of

    def crossable(self, sv: Sequence[int], wall: int) -> bool:
        return wall in self._walls[tuple(sv)]

    def walls(self, sv: Sequence[int]) -> tuple[int, ...]:
        return self._walls[tuple(sv)]

    def distances_from(self, sv: Sequence[int]) -> dict[tuple[int, ...], int]:
        """Graph distance (edges used in either direction) to every chamber."""
        start = tuple(sv)
        dist = {start: 0}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for w in self._walls[cur]:
                nxt = flip(cur, w)
                if nxt not in dist:
                    dist[nxt] = dist[cur] + 1
                    queue.append(nxt)
        return dist


def chamber_graph(fp: FacePoset) -> ChamberGraph:
    return ChamberGraph(fp)


def parse_word(text: str, fp: FacePoset) -> Word:
    base_text, _, tok_text = text.partition(";")
    base_text = base_text.strip()
    if not base_text:
        raise InputError("E_BAD_BASE", "missing base chamber")
    base = parse_signs(base_text)
    if len(base) != fp.n or base not in fp.chamber_of:
        raise InputError("E_BAD_BASE", f"{base_text!r} is not a chamber")
    tokens = []
    for tok in tok_text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise InputError("E_PARSE", f"bad token {tok!r}")
        wall = int(m.group(2)) - 1
        if not 0 <= wall < fp.n:
            raise InputError("E_NO_WALL", f"no hypersphere {wall + 1}")
        tokens.append((wall, 1 if m.group(1) == "+" else -1))
    w = Word(base, tuple(tokens))
    check_word(w, ChamberGraph(fp))
    return w


def check_word(w: Word, graph: ChamberGraph):
    if not graph.is_chamber(w.base):
        raise InputError("E_BAD_BASE", f"{sign_string(w.base)} is not a chamber")
    cur = w.base
    for k, (wall, _) in enumerate(w.tokens):
        if not 0 <= wall < len(cur) or not graph.crossable(cur, wall):
            raise InputError(
                "E_NO_WALL", f"token {k + 1}: wall {wall + 1} cannot be crossed from {sign_string(cur)}"
            )
        cur = flip(cur, wall)


@dataclass(frozen=True)
class NormalForm:
    """The class ``δ(base)^(-k) · positive``."""

    k: int
    positive: Word

    def render(self) -> str:
        return f"delta^-{self.k} * [{self.positive.render()}]"


@dataclass
class InvolutionReport:
    diameter: int
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def render(self) -> str:
        parts = [f"{k}={'OK' if v else 'FAIL'}" for k, v in self.checks.items()]
        return f"involution: {'OK' if self.ok else 'FAIL'} diameter={self.diameter} " + " ".join(parts)


class Groupoid:
    """Word problem machinery for a centrally symmetric arrangement.

    Parameters
    ----------
    fp : FacePoset
        Spherical face poset.
    budget : int
        Cap on the number of words visited by :meth:`positive_equivalent`.
    path_budget : int
        Cap on the size of any set of minimal positive paths.
    """

    def __init__(self, fp: FacePoset, budget: int = DEFAULT_CLOSURE_BUDGET, path_budget: int = DEFAULT_PATH_BUDGET):
        self.poset = fp
        self.graph = ChamberGraph(fp)
        self.n = fp.n
        self.budget = budget
        self.path_budget = path_budget
        self._minimal_cache: dict = {}

    def word(self, text: str) -> Word:
        return parse_word(text, self.poset)

    def check(self, w: Word):
        check_word(w, self.graph)

    # -- minimal positive paths ------------------------------------------------

    def minimal_positive_path(self, c: Sequence[int], d: Sequence[int]) -> Word:
        """Canonical geodesic: always cross the lowest-index separating wall available."""
        c, d = tuple(c), tuple(d)
        cur = c
        walls = []
        while cur != d:
            sep = [i for i in range(self.n) if cur[i] == -d[i] and cur[i]]
            step = next((i for i in sep if self.graph.crossable(cur, i)), None)
            if step is None:
                raise ComputationError("E_STUCK", f"no crossable separating wall at {sign_string(cur)}")
            walls.append(step)
            cur = flip(cur, step)
        return Word.positive(c, walls)

    def all_minimal_positive_paths(self, c: Sequence[int], d: Sequence[int], budget: int | None = None) -> list[Word]:
        c, d = tuple(c), tuple(d)
        return [Word.positive(c, ws) for ws in self._minimal_walls(c, d, budget)]

    def _minimal_walls(self, c, d, budget=None) -> list[tuple[int, ...]]:
        key = (c, d)
        if key in self._minimal_cache:
            return self._minimal_cache[key]
        budget = self.path_budget if budget is None else budget
        found: list[tuple[int, ...]] = []
        prefix: list[int] = []

        def go(cur):
            if cur == d:
                found.append(tuple(prefix))
                if len(found) > budget:
                    raise BudgetError("E_BUDGET", f"more than {budget} minimal paths")
                return
            for i in self.graph.walls(cur):
                if cur[i] == -d[i]:
                    prefix.append(i)
                    go(flip(cur, i))
                    prefix.pop()

        go(c)
        found.sort()
        self._minimal_cache[key] = found
        return found

    # -- involution ------------------------------------------------------------

    def involution_check(self) -> InvolutionReport:
        fp = self.poset
        chambers = [fp.faces[c].sv for c in fp.chambers]
        edges = {(fp.faces[e.source].sv, e.wall, fp.faces[e.target].sv) for e in self.graph.edges}
        dist = {c: self.graph.distances_from(c) for c in chambers}
        n = self.n
        checks = {
            "graph_automorphism": all((negate(a), w, negate(b)) in edges for a, w, b in edges),
            "fixed_point_free": all(negate(c) != c for c in chambers),
            "distance_is_separation": all(
                dist[c][d] == sum(1 for i in range(n) if c[i] == -d[i]) for c in chambers for d in chambers
            ),
            "antipode_at_max_distance": all(dist[c][negate(c)] == max(dist[c].values()) for c in chambers),
            "diameter_is_n": all(dist[c][negate(c)] == n for c in chambers),
            "additive": all(
                dist[c][negate(c)] == dist[c][d] + dist[d][negate(c)] for c in chambers for d in chambers
            ),
            "antipode_isometry": all(
                dist[c][d] == dist[negate(c)][negate(d)] for c in chambers for d in chambers
            ),
        }
        diameter = max(max(v.values()) for v in dist.values())
        return InvolutionReport(diameter, checks)

    def delta(self, c: Sequence[int]) -> Word:
        c = tuple(c)
        return self.minimal_positive_path(c, negate(c)) * self.minimal_positive_path(negate(c), c)

    # -- normal form -----------------------------------------------------------

    def normal_form(self, w: Word) -> NormalForm:
        """Rewrite ``w`` as ``δ(C)^(-k) · (positive word)``, k = number of inverse tokens.

        Each pass removes the first inverse token: with positive prefix p
        ending at A and the inverse token stepping to B,
        ``δ(C)·w  ~  μ(C→C#) · p# · μ(A#→B) · (rest of w)``.
        """
        self.check(w)
        c = w.base
        tokens = list(w.tokens)
        k = 0
        while True:
            j = next((i for i, (_, d) in enumerate(tokens) if d == -1), None)
            if j is None:
                break
            prefix = tokens[:j]
            a = Word(c, tuple(prefix)).end
            b = flip(a, tokens[j][0])
            head = self.minimal_positive_path(c, negate(c)).tokens
            bridge = self.minimal_positive_path(negate(a), b).tokens
            tokens = list(head) + prefix + list(bridge) + tokens[j + 1:]
            k += 1
        return NormalForm(k, Word(c, tuple(tokens)))

    # -- positive equivalence --------------------------------------------------

    def _neighbours(self, base, walls: tuple[int, ...]):
        path = [base]
        for w in walls:
            path.append(flip(path[-1], w))
        size = len(walls)
        for i in range(size):
            seen = set()
            for j in range(i, size):
                if walls[j] in seen:
                    break
                seen.add(walls[j])
                if j == i:
                    continue
                piece = walls[i:j + 1]
                for alt in self._minimal_walls(path[i], path[j + 1]):
                    if alt != piece:
                        yield walls[:i] + alt + walls[j + 1:]

    def positive_equivalent(self, u: Word, v: Word, budget: int | None = None, prune: bool = True) -> bool:
        """Are two positive paths related by substitutions of minimal positive subpaths?

        A subpath crossing pairwise distinct walls is minimal; it may be
        replaced by any other minimal positive path with the same endpoints.
        The closure is searched from both ends at once.  With ``prune`` the
        search is skipped when the multisets of crossed walls differ, which
        every substitution preserves.
        """
        if not (u.is_positive and v.is_positive):
            raise InputError("E_BAD_WORD", "positive_equivalent needs positive words")
        self.check(u)
        self.check(v)
        if u.base != v.base or u.end != v.end or len(u) != len(v):
            return False
        if prune and sorted(u.walls) != sorted(v.walls):
            return False
        if u.walls == v.walls:
            return True
        budget = self.budget if budget is None else budget
        base = u.base
        seen = [{u.walls}, {v.walls}]
        frontier = [[u.walls], [v.walls]]
        while frontier[0] and frontier[1]:
            side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
            mine, other = seen[side], seen[1 - side]
            nxt = []
            for state in frontier[side]:
                for t in self._neighbours(base, state):
                    if t in other:
                        return True
                    if t not in mine:
                        mine.add(t)
                        nxt.append(t)
                if len(seen[0]) + len(seen[1]) > budget:
                    raise BudgetError("E_BUDGET", f"positive closure exceeded {budget} words")
            frontier[side] = nxt
        return False

    def words_equal(self, u: Word, v: Word, budget: int | None = None) -> bool:
        """Decide ``[u] = [v]`` for loops at a common base chamber.

        Both normal forms are brought to the same power of ``δ^(-1)`` by
        prefixing the positive parts with powers of δ, then the positive
        parts are compared.  Loops with different abelianization images
        are unequal without further search.
        """
        self.check(u)
        self.check(v)
        if not (u.is_loop and v.is_loop) or u.base != v.base:
            raise InputError("E_BAD_WORD", "words_equal needs loops at a common base chamber")
        if abelianization_image(u, self.n) != abelianization_image(v, self.n):
            return False
        nu = self.normal_form(reduce_word(u))
        nv = self.normal_form(reduce_word(v))
        k = max(nu.k, nv.k)
        d = self.delta(u.base)
        pu = (d ** (k - nu.k)) * nu.positive
        pv = (d ** (k - nv.k)) * nv.positive
        return self.positive_equivalent(pu, pv, budget)
