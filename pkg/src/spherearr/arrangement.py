"""Centrally symmetric hypersphere arrangements and their combinatorics.

A hypersphere ``S_i = H_i ∩ S^l`` is given by a rational normal vector of the
linear hyperplane ``H_i`` in ``R^(l+1)``.  Faces of the induced stratification
are encoded by sign vectors over ``{-1, 0, +1}``.  The only stratum that is not
connected is the all-zero one when the common core ``∩ H_i`` is a line; it is
split into two *pole* faces tagged ``±1`` relative to the canonical primitive
generator of that line.

Hyperplane (wall) indices are 0-based throughout the Python API.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import BudgetError, InputError
from .linalg import find_point, kernel_basis, primitive, rank

DEFAULT_SCAN_LIMIT = 12

_SIGN_CHAR = {1: "+", 0: "0", -1: "-"}
_CHAR_SIGN = {"+": 1, "0": 0, "-": -1, "−": -1}


def sign_string(sv: Sequence[int], pole: int = 0) -> str:
    """``(1, 0, -1)`` -> ``"+0-"``; pole faces get a ``[+]``/``[-]`` suffix."""
    s = "".join(_SIGN_CHAR[x] for x in sv)
    if pole:
        s += "[" + _SIGN_CHAR[pole] + "]"
    return s


def parse_signs(text: str) -> tuple[int, ...]:
    text = text.strip()
    try:
        return tuple(_CHAR_SIGN[ch] for ch in text)
    except KeyError:
        raise InputError("E_PARSE", f"bad sign string {text!r}") from None


# ---------------------------------------------------------------------------
# arrangement


@dataclass(frozen=True)
class Arrangement:
    """Normals of ``n`` linear hyperplanes in ``R^d``; hyperspheres in ``S^(d-1)``."""

    normals: tuple[tuple[Fraction, ...], ...]
    ambient_dim: int

    @classmethod
    def from_normals(cls, rows: Iterable[Sequence], ambient_dim: int | None = None) -> "Arrangement":
        normals = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if ambient_dim is None:
            if not normals:
                raise InputError("E_SHAPE", "cannot infer ambient dimension of an empty arrangement")
            ambient_dim = len(normals[0])
        for row in normals:
            if len(row) != ambient_dim:
                raise InputError("E_SHAPE", f"normal {row} does not have {ambient_dim} entries")
        return cls(normals, ambient_dim)

    @property
    def n(self) -> int:
        return len(self.normals)

    @property
    def sphere_dim(self) -> int:
        return self.ambient_dim - 1

    @cached_property
    def core_basis(self) -> list[tuple[int, ...]]:
        """Kernel basis of the full normal matrix (the common core ``∩ H_i``)."""
        return kernel_basis(self.normals, self.ambient_dim)

    @property
    def core_dim(self) -> int:
        return len(self.core_basis)

    @cached_property
    def _rank_cache(self) -> dict:
        return {}

    def flat_dim(self, indices: Iterable[int]) -> int:
        """Dimension of the linear flat ``∩_{i in indices} H_i``."""
        key = frozenset(indices)
        cache = self._rank_cache
        if key not in cache:
            cache[key] = rank([self.normals[i] for i in sorted(key)], self.ambient_dim)
        return self.ambient_dim - cache[key]

    def closure(self, indices: Iterable[int]) -> frozenset[int]:
        """All hyperplanes containing the flat cut out by ``indices``."""
        base = frozenset(indices)
        d = self.flat_dim(base)
        return frozenset(i for i in range(self.n) if i in base or self.flat_dim(base | {i}) == d)

    def with_normal(self, normal: Sequence) -> "Arrangement":
        return Arrangement.from_normals(list(self.normals) + [tuple(normal)], self.ambient_dim)


def parse_arrangement(text: str) -> Arrangement:
    """Read the line-oriented arrangement format.

    ::

        # comment
        version 1
        ambient 3
        normal 1 0 0
        normal 0 -3/2 1

    ``ambient`` is optional (inferred from the first normal).  A line
    ``affine q_1 ... q_d c`` describes ``{x : <q, x> = c}``; it is accepted
    only when ``c = 0`` since every construction here needs central symmetry.
    """
    ambient = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *args = line.split()
        try:
            if key == "version":
                if args != ["1"]:
                    raise InputError("E_PARSE", f"line {lineno}: unsupported version {' '.join(args)!r}")
            elif key == "ambient":
                if len(args) != 1 or int(args[0]) < 1:
                    raise InputError("E_PARSE", f"line {lineno}: ambient needs one positive integer")
                ambient = int(args[0])
            elif key == "normal":
                rows.append((lineno, [Fraction(x) for x in args]))
            elif key == "affine":
                *coeffs, offset = [Fraction(x) for x in args]
                if offset != 0:
                    raise InputError("E_NOT_CENTRAL", f"line {lineno}: hyperplane does not pass through the origin")
                rows.append((lineno, coeffs))
            else:
                raise InputError("E_PARSE", f"line {lineno}: unknown keyword {key!r}")
        except (ValueError, ZeroDivisionError):
            raise InputError("E_PARSE", f"line {lineno}: non-rational entry in {raw.strip()!r}") from None
    if not rows:
        raise InputError("E_PARSE", "no normals given")
    if ambient is None:
        ambient = len(rows[0][1])
    for lineno, row in rows:
        if len(row) != ambient:
            raise InputError("E_SHAPE", f"line {lineno}: expected {ambient} entries, got {len(row)}")
    return Arrangement(tuple(tuple(r) for _, r in rows), ambient)


def format_arrangement(a: Arrangement) -> str:
    lines = ["version 1", f"ambient {a.ambient_dim}"]
    lines += ["normal " + " ".join(str(x) for x in row) for row in a.normals]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[tuple[str, str], ...]
    notes: tuple[str, ...]

    def raise_if_invalid(self):
        if not self.ok:
            code, msg = self.violations[0]
            raise InputError(code, msg)

    def render(self) -> str:
        lines = [f"validate: {'OK' if self.ok else 'FAIL'}"]
        lines += [f"  {code}: {msg}" for code, msg in self.violations]
        lines += [f"  note: {note}" for note in self.notes]
        return "\n".join(lines)


def validate(a: Arrangement) -> ValidationReport:
    violations = []
    if a.ambient_dim < 2:
        violations.append(("E_SHAPE", f"ambient dimension {a.ambient_dim} < 2"))
    if a.n < 1:
        violations.append(("E_SHAPE", "no hyperspheres"))
    nonzero = []
    for i, row in enumerate(a.normals):
        if not any(row):
            violations.append(("E_ZERO_NORMAL", f"normal {i + 1} is zero"))
        else:
            nonzero.append(i)
    seen = {}
    for i in nonzero:
        key = primitive(a.normals[i])
        if key in seen:
            violations.append(
                ("E_DUPLICATE_SPHERE", f"normals {seen[key] + 1} and {i + 1} define the same hypersphere")
            )
        else:
            seen[key] = i
    if not violations and a.core_dim >= 2:
        violations.append(
            ("E_NOT_CELL", f"common core has dimension {a.core_dim}; the stratification is not a regular cell complex")
        )
    notes = (
        "intersections of hyperspheres are spheres (auto-satisfied for linear hyperplanes)",
        "restrictions to intersections are hyperspheres (auto-satisfied for linear hyperplanes)",
        "non-degeneracy dim(A_I) < dim(flat) (auto-satisfied for linear hyperplanes)",
        "regular cell complex condition reduces to core dimension <= 1",
    )
    return ValidationReport(not violations, tuple(violations), notes)


def realizable(a: Arrangement, sv: Sequence[int]):
    """Witness ``x != 0`` with ``sign(<n_i, x>) = sv_i`` for all i, or None.

    Strict inequalities are scaled to ``sv_i <n_i, x> >= 1`` and solved
    exactly.  For the all-zero vector a nonzero core vector is returned
    when the core is nontrivial.
    """
    ineq = [[s * x for x in a.normals[i]] for i, s in enumerate(sv) if s]
    eq = [a.normals[i] for i, s in enumerate(sv) if not s]
    if not ineq:
        basis = kernel_basis(eq, a.ambient_dim)
        return basis[0] if basis else None
    return find_point(ineq, eq, a.ambient_dim)


# ---------------------------------------------------------------------------
# faces


@dataclass(frozen=True, order=True)
class Face:
    sv: tuple[int, ...]
    pole: int = 0
    dim: int = field(default=0, compare=False)

    @property
    def is_chamber(self) -> bool:
        return 0 not in self.sv

    @property
    def zero_set(self) -> frozenset[int]:
        return frozenset(i for i, s in enumerate(self.sv) if s == 0)

    def label(self) -> str:
        return sign_string(self.sv, self.pole)

    def __str__(self):
        return self.label()


def face_leq(f: Face, g: Face) -> bool:
    """``F <= G`` iff F lies in the closure of G."""
    if f.pole or g.pole:
        if f.pole and g.pole:
            return f == g
        return bool(f.pole)
    return all(s == 0 or s == t for s, t in zip(f.sv, g.sv))


def compose(f: Face, c: Face) -> Face:
    """``F∘C``: F's sign where nonzero, else C's.

    A chamber when C is one.  Poles only compose to a pole with each other,
    and then the left factor wins.  ``dim`` is copied from C, which is only
    right for chambers; :meth:`FacePoset.compose` looks the face up instead.
    """
    sv = tuple(s if s else t for s, t in zip(f.sv, c.sv))
    pole = (f.pole or c.pole) if not any(sv) else 0
    return Face(sv, pole, c.dim)


def antipode(f: Face) -> Face:
    return Face(tuple(-s for s in f.sv), -f.pole, f.dim)


def separation_set(c: Face, d: Face) -> frozenset[int]:
    return frozenset(i for i, (s, t) in enumerate(zip(c.sv, d.sv)) if s and s == -t)


def distance(c: Face, d: Face) -> int:
    return len(separation_set(c, d))


class FacePoset:
    """Faces of a (spherical or hemisphere-restricted) arrangement.

    Faces are stored in canonical order; all relations are exposed on face
    indices.
    """

    def __init__(self, faces: Sequence[Face], sphere_dim: int, n: int, kind: str = "spherical", arrangement=None):
        self.faces = list(faces)
        self.sphere_dim = sphere_dim
        self.n = n
        self.kind = kind
        self.arrangement = arrangement
        self.index = {(f.sv, f.pole): i for i, f in enumerate(self.faces)}
        self.chambers = [i for i, f in enumerate(self.faces) if f.is_chamber]
        self.chamber_of = {self.faces[i].sv: i for i in self.chambers}

    def __len__(self):
        return len(self.faces)

    def __repr__(self):
        return f"FacePoset({self.kind}, l={self.sphere_dim}, n={self.n}, faces={len(self.faces)})"

    def face_id(self, sv: Sequence[int], pole: int = 0) -> int:
        return self.index[tuple(sv), pole]

    def leq(self, i: int, j: int) -> bool:
        return face_leq(self.faces[i], self.faces[j])

    def compose(self, i: int, j: int) -> int:
        f = compose(self.faces[i], self.faces[j])
        return self.index[f.sv, f.pole]

    def antipode(self, i: int) -> int:
        f = antipode(self.faces[i])
        return self.index[f.sv, f.pole]

    def separation(self, c: int, d: int) -> frozenset[int]:
        return separation_set(self.faces[c], self.faces[d])

    def distance(self, c: int, d: int) -> int:
        return len(self.separation(c, d))

    def count_by_dim(self) -> list[int]:
        counts = [0] * (self.sphere_dim + 1)
        for f in self.faces:
            counts[f.dim] += 1
        return counts

    @cached_property
    def up_covers(self) -> list[list[int]]:
        """For each face, the faces one dimension up containing it in their closure."""
        by_dim: dict[int, list[int]] = {}
        for i, f in enumerate(self.faces):
            by_dim.setdefault(f.dim, []).append(i)
        return [
            [j for j in by_dim.get(f.dim + 1, ()) if self.leq(i, j)] for i, f in enumerate(self.faces)
        ]

    @cached_property
    def down_covers(self) -> list[list[int]]:
        down: list[list[int]] = [[] for _ in self.faces]
        for i, ups in enumerate(self.up_covers):
            for j in ups:
                down[j].append(i)
        return down


def enumerate_faces(a: Arrangement, scan_limit: int = DEFAULT_SCAN_LIMIT) -> FacePoset:
    """All faces of a validated arrangement.

    Equivalent to scanning ``{-,0,+}^n`` with the feasibility oracle, but
    prunes every prefix whose partial sign pattern is already infeasible.
    Output order is lexicographic with ``- < 0 < +``, pole tag last.
    """
    if a.n > scan_limit:
        raise BudgetError("E_BUDGET", f"{a.n} hyperspheres exceed the scan limit {scan_limit}")
    found: list[tuple[int, ...]] = []

    def extend(prefix: list[int]):
        k = len(prefix)
        if k == a.n:
            found.append(tuple(prefix))
            return
        for s in (-1, 0, 1):
            prefix.append(s)
            if not any(prefix) or _prefix_feasible(a, prefix):
                extend(prefix)
            prefix.pop()

    extend([])
    faces = []
    for sv in found:
        if any(sv):
            zeros = [i for i, s in enumerate(sv) if s == 0]
            faces.append(Face(sv, 0, a.flat_dim(zeros) - 1))
        elif a.core_dim == 1:
            faces.append(Face(sv, -1, 0))
            faces.append(Face(sv, 1, 0))
        elif a.core_dim > 1:
            raise InputError("E_NOT_CELL", "core of dimension >= 2")
    return FacePoset(faces, a.sphere_dim, a.n, "spherical", a)


def _prefix_feasible(a: Arrangement, prefix: Sequence[int]) -> bool:
    ineq = [[s * x for x in a.normals[i]] for i, s in enumerate(prefix) if s]
    eq = [a.normals[i] for i, s in enumerate(prefix) if not s]
    return find_point(ineq, eq, a.ambient_dim) is not None


def faces_of(a: Arrangement, scan_limit: int = DEFAULT_SCAN_LIMIT) -> FacePoset:
    """Validate, then enumerate."""
    validate(a).raise_if_invalid()
    return enumerate_faces(a, scan_limit)


def dump_faces(fp: FacePoset) -> str:
    """Plain-text serialisation: one ``<signs> <pole> <dim>`` line per face."""
    lines = [f"faces {fp.kind} {fp.sphere_dim} {fp.n} {len(fp.faces)}"]
    lines += [f"{sign_string(f.sv) or '.'} {f.pole} {f.dim}" for f in fp.faces]
    return "\n".join(lines) + "\n"


def load_faces(text: str, arrangement=None) -> FacePoset:
    head, *body = text.strip().splitlines()
    _, kind, l, n, count = head.split()
    faces = []
    for line in body:
        signs, pole, dim = line.split()
        sv = () if signs == "." else parse_signs(signs)
        faces.append(Face(sv, int(pole), int(dim)))
    if len(faces) != int(count):
        raise InputError("E_PARSE", "truncated face file")
    return FacePoset(faces, int(l), int(n), kind, arrangement)


# ---------------------------------------------------------------------------
# intersection poset


@dataclass(frozen=True)
class FlatComponent:
    """A connected component of an intersection of hyperspheres."""

    hyperplanes: frozenset[int]
    flat_basis: tuple[tuple[int, ...], ...]
    tag: int
    rank: int
    sphere_dim: int
    mobius: int

    def label(self) -> str:
        if not self.hyperplanes:
            return "S"
        name = "∩".join(str(i + 1) for i in sorted(self.hyperplanes))
        return name + ("[" + _SIGN_CHAR[self.tag] + "]" if self.tag else "")


def _mobius(n_elems: int, below) -> list[int]:
    """Möbius values from the unique minimum (element 0); ``below(j)`` lists X < Y_j."""
    mu = [0] * n_elems
    mu[0] = 1
    for j in range(1, n_elems):
        mu[j] = -sum(mu[i] for i in below(j))
    return mu


class IntersectionPoset:
    """Components ordered by reverse inclusion, minimum first, sorted by rank."""

    def __init__(self, elements: Sequence[FlatComponent], top_rank: int):
        self.elements = list(elements)
        self.top_rank = top_rank

    def __len__(self):
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        """``Y_i <= Y_j`` iff ``Y_j ⊆ Y_i``."""
        y, z = self.elements[i], self.elements[j]
        return y.hyperplanes <= z.hyperplanes and (y.tag == 0 or y.tag == z.tag)

    def by_rank(self) -> dict[int, list[FlatComponent]]:
        out: dict[int, list[FlatComponent]] = {}
        for e in self.elements:
            out.setdefault(e.rank, []).append(e)
        return out

    def rank_counts(self) -> list[int]:
        groups = self.by_rank()
        return [len(groups.get(r, [])) for r in range(self.top_rank + 1)]

    def mobius_abs_sum(self, rank: int | None = None) -> int:
        return sum(abs(e.mobius) for e in self.elements if rank is None or e.rank == rank)


def _flats(a: Arrangement, keep) -> list[frozenset[int]]:
    """Closed index sets of all flats (including the whole space) accepted by ``keep``."""
    seen = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for flat in frontier:
            for i in range(a.n):
                if i in flat:
                    continue
                new = a.closure(flat | {i})
                if new not in seen and keep(new):
                    seen.add(new)
                    nxt.append(new)
        frontier = nxt
    return sorted(seen, key=lambda s: (a.ambient_dim - a.flat_dim(s), sorted(s)))


def _build_poset(a: Arrangement, flats, split_lines: bool) -> IntersectionPoset:
    comps = []
    for flat in flats:
        dim = a.flat_dim(flat)
        basis = tuple(kernel_basis([a.normals[i] for i in sorted(flat)], a.ambient_dim))
        r = a.ambient_dim - dim
        if dim == 1 and split_lines:
            comps += [(flat, basis, -1, r, 0), (flat, basis, 1, r, 0)]
        else:
            comps.append((flat, basis, 0, r, dim - 1))
    proto = IntersectionPoset(
        [FlatComponent(h, b, t, r, sd, 0) for h, b, t, r, sd in comps], a.sphere_dim
    )
    mu = _mobius(len(comps), lambda j: [i for i in range(j) if proto.leq(i, j)])
    elements = [FlatComponent(h, b, t, r, sd, m) for (h, b, t, r, sd), m in zip(comps, mu)]
    return IntersectionPoset(elements, a.sphere_dim)


def intersection_poset(a: Arrangement) -> IntersectionPoset:
    """Intersection poset of the sphere arrangement with Möbius values ``μ(S^l, Y)``.

    Flats of dimension 1 meet the sphere in two antipodal points, giving two
    tagged components; dimension-0 flats are empty on the sphere and dropped.
    """
    flats = _flats(a, lambda s: a.flat_dim(s) >= 1)
    return _build_poset(a, flats, split_lines=True)


def hemisphere_intersection_poset(a: Arrangement, equator: Sequence) -> IntersectionPoset:
    """Intersection poset of the affine arrangement cut out on an open hemisphere.

    Every flat of dimension >= 1 not contained in the equator hyperplane
    meets the open hemisphere in exactly one affine piece.
    """
    eq = [Fraction(x) for x in equator]

    def meets(s):
        if a.flat_dim(s) < 1:
            return False
        basis = kernel_basis([a.normals[i] for i in sorted(s)], a.ambient_dim)
        return any(sum(x * y for x, y in zip(eq, v)) != 0 for v in basis)

    flats = _flats(a, meets)
    return _build_poset(a, flats, split_lines=False)
