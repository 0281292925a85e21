"""Generic equators, hemisphere restriction and the wedge/rank checks.

Adding a generic equator ``S_0`` as an extra hypersphere splits the sphere
into two open hemispheres, each carrying an affine hyperplane arrangement.
The checks here compare the Salvetti homology of the sphere arrangement with

* the homology of the negative-side affine Salvetti complex plus one top
  class per positive-side chamber, and
* the sums of ``|μ|`` over the intersection poset.

Both are verified at the level of integral homology only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arrangement import (
    Arrangement,
    Face,
    FacePoset,
    IntersectionPoset,
    enumerate_faces,
    faces_of,
    hemisphere_intersection_poset,
    intersection_poset,
    validate,
)
from .errors import ComputationError
from .homology import CellPoset, HomologyResult, cellular_homology
from .salvetti import build_salvetti, build_salvetti_affine

DEFAULT_EQUATOR_ATTEMPTS = 1000


@dataclass(frozen=True)
class EquatorChoice:
    normal: tuple[int, ...]
    t: int
    attempts: int


def _moment_vector(t: int, d: int) -> tuple[int, ...]:
    return tuple(t**k for k in range(d))


def generic_equator(a: Arrangement, seed: int = 0, max_attempts: int = DEFAULT_EQUATOR_ATTEMPTS) -> EquatorChoice:
    """First ``(1, t, t^2, ...)``, ``t = 2 + seed, 3 + seed, ...``, whose hyperplane contains no flat.

    "No flat" means: for every intersection flat V of dimension >= 1
    (including the whole space and the core), V is not inside ``a^⊥``.
    """
    flats = [e.flat_basis for e in intersection_poset(a).elements if e.tag <= 0 and e.flat_basis]
    for attempt in range(1, max_attempts + 1):
        t = 1 + seed + attempt
        v = _moment_vector(t, a.ambient_dim)
        if all(any(sum(x * y for x, y in zip(v, b)) for b in basis) for basis in flats):
            return EquatorChoice(v, t, attempt)
    raise ComputationError("E_NO_EQUATOR", f"no generic equator within {max_attempts} attempts")


def extend(a: Arrangement, equator) -> Arrangement:
    """Append the equator normal as hypersphere ``n`` (0-based); the result is validated."""
    normal = equator.normal if isinstance(equator, EquatorChoice) else tuple(equator)
    b = a.with_normal(normal)
    validate(b).raise_if_invalid()
    return b


def hemisphere_restrict(extended: FacePoset, side: int) -> FacePoset:
    """Faces with last sign ``side`` (±1), last coordinate dropped.

    Faces inside an open hemisphere keep their dimension; the result is the
    face poset of an affine arrangement of ``extended.n - 1`` hyperplanes in
    ``R^l``.
    """
    faces = [Face(f.sv[:-1], 0, f.dim) for f in extended.faces if not f.pole and f.sv[-1] == side]
    return FacePoset(faces, extended.sphere_dim, extended.n - 1, "affine", extended.arrangement)


def check_combinatorial_iso(plus: FacePoset, minus: FacePoset) -> bool:
    """Is sign negation an isomorphism of face posets with composition?"""
    if len(plus) != len(minus):
        return False
    image = []
    for f in plus.faces:
        j = minus.index.get((tuple(-s for s in f.sv), 0))
        if j is None or minus.faces[j].dim != f.dim:
            return False
        image.append(j)
    if len(set(image)) != len(image):
        return False
    for i in range(len(plus)):
        for j in range(len(plus)):
            if plus.leq(i, j) != minus.leq(image[i], image[j]):
                return False
    if sorted(image[c] for c in plus.chambers) != sorted(minus.chambers):
        return False
    for i in range(len(plus)):
        for c in plus.chambers:
            if image[plus.compose(i, c)] != minus.compose(image[i], image[c]):
                return False
    return True


def chamber_count_positive(extended: FacePoset) -> int:
    return sum(1 for c in extended.chambers if extended.faces[c].sv[-1] == 1)


def zaslavsky_count(p: IntersectionPoset) -> int:
    """Number of chambers of an affine arrangement: ``Σ |μ(Y)|``."""
    return p.mobius_abs_sum()


@dataclass
class DecompositionReport:
    sphere_dim: int
    n: int
    equator: EquatorChoice
    negative_part: HomologyResult
    wedge_count: int
    zaslavsky: int
    predicted: tuple[int, ...]
    observed: HomologyResult
    hemispheres_isomorphic: bool
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return all(self.checks.values())

    def summand(self) -> str:
        neg = " ".join(str(b) for b in self.negative_part.betti)
        return f"Sal(A-)[betti {neg}] v {self.wedge_count}*S^{self.sphere_dim}"

    def render(self) -> str:
        lines = [
            f"equator: normal=({','.join(str(x) for x in self.equator.normal)}) t={self.equator.t}",
            f"negative part: betti {' '.join(str(b) for b in self.negative_part.betti)}",
            f"positive chambers k={self.wedge_count} zaslavsky={self.zaslavsky}",
            f"predicted: {' '.join(str(b) for b in self.predicted)}",
            f"observed: {' '.join(str(b) for b in self.observed.betti)}",
            f"decomposition: {self.summand()}",
            "level: integral homology and H1 (homotopy equivalence not constructed)",
        ]
        lines += [f"check {name}: {'OK' if ok else 'FAIL'}" for name, ok in self.checks.items()]
        lines.append(f"verdict: {'OK' if self.verdict else 'FAIL'}")
        return "\n".join(lines)

    def key_values(self) -> str:
        def join(xs):
            return ",".join(str(x) for x in xs)

        rows = [
            ("equator", join(self.equator.normal)),
            ("negative_betti", join(self.negative_part.betti)),
            ("k", self.wedge_count),
            ("zaslavsky", self.zaslavsky),
            ("predicted_betti", join(self.predicted)),
            ("observed_betti", join(self.observed.betti)),
            ("verdict", "OK" if self.verdict else "FAIL"),
        ]
        return "\n".join(f"{k}={v}" for k, v in rows)


def salvetti_homology(fp: FacePoset) -> HomologyResult:
    return cellular_homology(CellPoset.from_salvetti(build_salvetti(fp)))


def decomposition_report(
    a: Arrangement,
    seed: int = 0,
    face_poset: FacePoset | None = None,
    sal_homology: HomologyResult | None = None,
    scan_limit: int | None = None,
) -> DecompositionReport:
    fp = face_poset if face_poset is not None else faces_of(a)
    observed = sal_homology if sal_homology is not None else salvetti_homology(fp)
    eq = generic_equator(a, seed)
    ext = extend(a, eq)
    ext_fp = enumerate_faces(ext, scan_limit or max(ext.n, 12))
    minus = hemisphere_restrict(ext_fp, -1)
    plus = hemisphere_restrict(ext_fp, 1)
    negative = cellular_homology(CellPoset.from_salvetti(build_salvetti_affine(minus)))
    k = chamber_count_positive(ext_fp)
    zas = zaslavsky_count(hemisphere_intersection_poset(a, eq.normal))
    l = a.sphere_dim
    betti = list(negative.betti) + [0] * (l + 1 - len(negative.betti))
    betti[l] += k
    predicted = tuple(betti)
    checks = {
        "wedge_betti": observed.betti == predicted,
        "torsion_free": observed.torsion_free and negative.torsion_free,
        "chambers_equal_zaslavsky": k == zas,
        "hemispheres_isomorphic": check_combinatorial_iso(plus, minus),
    }
    if l >= 2:
        # for l = 1 degree 1 is the top degree and picks up the wedge summands
        checks["h1_matches_negative_part"] = (
            observed.betti[1] == negative.betti[1] and observed.torsion[1] == negative.torsion[1]
        )
    else:
        checks["circle_b1_is_2n_plus_1"] = observed.betti[1] == 2 * a.n + 1
    return DecompositionReport(l, a.n, eq, negative, k, zas, predicted, observed, checks["hemispheres_isomorphic"], checks)


@dataclass
class RankFormulaReport:
    formula: tuple[int, ...]
    homology: tuple[int, ...]

    @property
    def verdict(self) -> bool:
        return self.formula == self.homology

    def render(self) -> str:
        return (
            f"ranks: formula={' '.join(map(str, self.formula))} "
            f"homology={' '.join(map(str, self.homology))} {'OK' if self.verdict else 'FAIL'}"
        )


def mobius_ranks(p: IntersectionPoset, sphere_dim: int) -> tuple[int, ...]:
    """Predicted Betti numbers: ``Σ_{rk Y = i} |μ|`` below the top degree, ``Σ_Y |μ|`` at the top."""
    return tuple(p.mobius_abs_sum(i) for i in range(sphere_dim)) + (p.mobius_abs_sum(),)


def mobius_rank_formula(
    a: Arrangement,
    face_poset: FacePoset | None = None,
    sal_homology: HomologyResult | None = None,
) -> RankFormulaReport:
    if sal_homology is None:
        sal_homology = salvetti_homology(face_poset if face_poset is not None else faces_of(a))
    return RankFormulaReport(mobius_ranks(intersection_poset(a), a.sphere_dim), sal_homology.betti)
