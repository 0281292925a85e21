import itertools
import random

import pytest

from spherearr.arrangement import faces_of
from spherearr.errors import BudgetError, ComputationError, InputError
from spherearr.fixtures import fixture, fixture_names, random_arrangement
from spherearr.homology import (
    CellPoset,
    ChainComplex,
    cellular_homology,
    homology,
    incidence_numbers,
    order_complex,
    order_complex_homology,
    parse_chain_complex,
    relative_homology,
    union_cells,
    union_subcomplex_homology,
)
from spherearr.linalg import IntMatrix
from spherearr.salvetti import build_salvetti

GOLDEN_BETTI = {
    "E2": (1, 2, 5),
    "G3": (1, 3, 10),
    "P3": (1, 3, 8),
    "C3": (1, 3, 3, 9),
    "S1n1": (1, 3),
    "S1n2": (1, 5),
    "S1n3": (1, 7),
    "S1n4": (1, 9),
}


def sal_poset(name):
    return CellPoset.from_salvetti(build_salvetti(faces_of(fixture(name))))


@pytest.mark.parametrize("name", fixture_names())
def test_golden_salvetti_homology(name):
    h = cellular_homology(sal_poset(name))
    assert h.betti == GOLDEN_BETTI[name]
    assert h.torsion_free


@pytest.mark.parametrize("name", fixture_names())
def test_order_complex_oracle(name):
    p = sal_poset(name)
    assert order_complex_homology(p) == cellular_homology(p)


def test_random_oracle_agreement():
    rng = random.Random(3)
    for _ in range(8):
        p = CellPoset.from_salvetti(build_salvetti(faces_of(random_arrangement(rng, max_n=3, max_sphere_dim=2))))
        assert order_complex_homology(p, limit=200_000) == cellular_homology(p)


@pytest.mark.parametrize("name", ["E2", "G3", "P3", "C3", "S1n2"])
def test_face_cells_form_a_sphere(name):
    fp = faces_of(fixture(name))
    l = fp.sphere_dim
    expected = (1,) + (0,) * (l - 1) + (1,) if l > 0 else (2,)
    p = CellPoset.from_face_poset(fp)
    assert cellular_homology(p).betti == expected
    assert order_complex_homology(p).betti == expected


@pytest.mark.parametrize("name", fixture_names())
def test_relative_homology_of_union(name):
    fp = faces_of(fixture(name))
    p = CellPoset.from_face_poset(fp)
    h = relative_homology(p, union_cells(fp))
    l = fp.sphere_dim
    assert h.betti == (0,) * l + (len(fp.chambers),)
    assert h.torsion_free


def test_union_of_two_great_circles():
    # two circles meeting in two points: a graph with 2 vertices and 4 edges
    assert union_subcomplex_homology(faces_of(fixture("E2"))).betti == (1, 3)


def test_projective_plane_torsion():
    # one vertex, one loop, one disc attached with degree 2
    cc = ChainComplex(
        [[0], [1], [2]],
        {1: IntMatrix.from_dense([[0]]), 2: IntMatrix.from_dense([[2]])},
    )
    h = homology(cc)
    assert h.betti == (1, 0, 0)
    assert h.torsion == ((), (2,), ())
    assert h.lines()[1] == "H1: betti=0 torsion=2"


def test_boundary_of_tetrahedron():
    # face poset of the boundary of a 3-simplex: proper nonempty vertex subsets
    subsets = [s for k in (1, 2, 3) for s in itertools.combinations(range(4), k)]
    index = {s: i for i, s in enumerate(subsets)}
    dims = [len(s) - 1 for s in subsets]
    facets = [[index[t] for t in itertools.combinations(s, len(s) - 1)] if len(s) > 1 else [] for s in subsets]
    p = CellPoset(dims, facets)
    assert cellular_homology(p).betti == (1, 0, 1)
    assert order_complex_homology(p).betti == (1, 0, 1)


def test_export_roundtrip():
    cc = incidence_numbers(sal_poset("P3"))
    again = parse_chain_complex(cc.export())
    assert homology(again) == homology(cc)
    assert again.export() == cc.export()
    assert cc.export().splitlines()[0] == "cells 6 12 12"


def test_boundary_squares_to_zero():
    cc = incidence_numbers(sal_poset("C3"))
    for k in range(2, cc.top_dim + 1):
        assert (cc.boundary[k] @ cc.boundary[k - 1]).is_zero()


def test_corrupted_complex_is_rejected():
    cc = incidence_numbers(sal_poset("E2"))
    entries = dict(cc.boundary[2].entries)
    key = next(iter(entries))
    entries[key] = -entries[key]
    cc.boundary[2] = IntMatrix(cc.boundary[2].rows, cc.boundary[2].cols, entries)
    with pytest.raises(ComputationError) as exc:
        homology(cc)
    assert exc.value.code == "E_NOT_COMPLEX"


def test_irregular_cell_is_rejected():
    with pytest.raises(ComputationError) as exc:
        incidence_numbers(CellPoset([0, 1], [[], [0]]))
    assert exc.value.code == "E_NOT_REGULAR"


def test_subcomplex_checks():
    fp = faces_of(fixture("E2"))
    p = CellPoset.from_face_poset(fp)
    chamber = fp.chambers[0]
    with pytest.raises(InputError) as exc:
        relative_homology(p, [chamber])
    assert exc.value.code == "E_NOT_SUBCOMPLEX"


def test_order_complex_budget():
    with pytest.raises(BudgetError):
        order_complex(sal_poset("C3"), limit=100)
