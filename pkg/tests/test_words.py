import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spherearr.arrangement import faces_of
from spherearr.errors import BudgetError, InputError
from spherearr.fixtures import fixture, fixture_names
from spherearr.words import (
    Groupoid,
    Word,
    abelianization_image,
    chamber_graph,
    negate,
    parse_word,
    reduce_word,
)

GROUPOIDS = {}


def groupoid(name) -> Groupoid:
    if name not in GROUPOIDS:
        GROUPOIDS[name] = Groupoid(faces_of(fixture(name)))
    return GROUPOIDS[name]


def random_word(g: Groupoid, rng: random.Random, length: int, positive=False) -> Word:
    fp = g.poset
    cur = base = fp.faces[rng.choice(fp.chambers)].sv
    tokens = []
    for _ in range(length):
        wall = rng.choice(g.graph.walls(cur))
        tokens.append((wall, 1 if positive else rng.choice((1, -1))))
        cur = tuple(-s if i == wall else s for i, s in enumerate(cur))
    return Word(base, tuple(tokens))


@pytest.mark.parametrize("name, vertices, edges", [("E2", 4, 8), ("G3", 8, 24), ("P3", 6, 12), ("C3", 8, 24)])
def test_chamber_graph_sizes(name, vertices, edges):
    g = chamber_graph(faces_of(fixture(name)))
    assert (g.n_vertices, g.n_edges) == (vertices, edges)


def test_single_pair_on_circle_has_parallel_edges():
    # both poles of S^0 give a 1-cell between the two chambers
    g = chamber_graph(faces_of(fixture("S1n1")))
    assert (g.n_vertices, g.n_edges) == (2, 4)


@pytest.mark.parametrize("name", ["E2", "G3", "P3", "C3"])
def test_graph_distance_is_separation(name):
    fp = faces_of(fixture(name))
    g = chamber_graph(fp)
    for c in fp.chambers:
        dist = g.distances_from(fp.faces[c].sv)
        for d in fp.chambers:
            assert dist[fp.faces[d].sv] == fp.distance(c, d)


def test_parse_word_examples():
    fp = faces_of(fixture("E2"))
    w = parse_word("++ ; +1 +1", fp)
    assert w.path() == [(1, 1), (-1, 1), (1, 1)]
    assert w.is_loop and w.is_positive
    w = parse_word("++ ; +1 -1", fp)
    assert w.is_loop and not w.is_positive
    assert parse_word(w.render(), fp) == w
    assert parse_word("-+", fp) == Word((-1, 1))


@pytest.mark.parametrize(
    "name, text, code",
    [
        ("P3", "+++ ; +3", "E_NO_WALL"),
        ("E2", "++ ; +3", "E_NO_WALL"),
        ("E2", "+0 ; +1", "E_BAD_BASE"),
        ("E2", "+++ ; +1", "E_BAD_BASE"),
        ("E2", " ; +1", "E_BAD_BASE"),
        ("E2", "++ ; 1", "E_PARSE"),
    ],
)
def test_parse_word_errors(name, text, code):
    with pytest.raises(InputError) as exc:
        parse_word(text, faces_of(fixture(name)))
    assert exc.value.code == code


def test_minimal_positive_paths():
    g = groupoid("E2")
    assert g.minimal_positive_path((1, 1), (-1, -1)).tokens == ((0, 1), (1, 1))
    assert g.minimal_positive_path((1, 1), (-1, 1)).tokens == ((0, 1),)
    assert len(g.minimal_positive_path((1, 1), (1, 1))) == 0
    assert len(g.all_minimal_positive_paths((1, 1), (-1, -1))) == 2
    assert [len(w) for w in g.all_minimal_positive_paths((1, 1), (1, 1))] == [0]
    g3 = groupoid("G3")
    assert len(g3.all_minimal_positive_paths((1, 1, 1), (-1, -1, -1))) == 6


def test_minimal_path_budget():
    with pytest.raises(BudgetError):
        groupoid("G3").all_minimal_positive_paths((1, -1, 1), (-1, 1, -1), budget=3)


@pytest.mark.parametrize("name", ["P3", "C3"])
def test_minimal_paths_have_length_distance(name):
    g = groupoid(name)
    fp = g.poset
    for c, d in itertools.product(fp.chambers, repeat=2):
        cs, ds = fp.faces[c].sv, fp.faces[d].sv
        paths = g.all_minimal_positive_paths(cs, ds)
        assert g.minimal_positive_path(cs, ds) in paths
        assert all(len(p) == fp.distance(c, d) and p.end == ds for p in paths)


@pytest.mark.parametrize("name", fixture_names())
def test_involution_property(name):
    g = groupoid(name)
    rep = g.involution_check()
    assert rep.ok, rep.render()
    assert rep.diameter == g.n


def test_delta():
    g = groupoid("E2")
    d = g.delta((1, 1))
    assert d.is_loop and d.is_positive and len(d) == 4
    assert abelianization_image(d) == (2, 2)
    assert g.delta((-1, -1)) == d.antipodal()
    assert len(groupoid("S1n1").delta((1,))) == 2
    for name in ("G3", "P3", "C3"):
        h = groupoid(name)
        for c in h.poset.chambers:
            sv = h.poset.faces[c].sv
            assert abelianization_image(h.delta(sv)) == (2,) * h.n
            assert h.delta(negate(sv)) == h.delta(sv).antipodal()


def test_normal_form_examples():
    g = groupoid("E2")
    nf = g.normal_form(g.word("++ ; -1"))
    assert nf.k == 1
    assert len(nf.positive) == 3 and nf.positive.is_positive
    assert nf.positive.end == (-1, 1)
    w = g.word("++ ; +1 +2 +1")
    assert g.normal_form(w).k == 0 and g.normal_form(w).positive == w


@pytest.mark.parametrize("name", fixture_names())
@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10**6), length=st.integers(0, 8))
def test_normal_form_preserves_abelianization(name, seed, length):
    g = groupoid(name)
    w = random_word(g, random.Random(seed), length)
    nf = g.normal_form(w)
    assert nf.k == w.negative_count
    assert nf.positive.is_positive and nf.positive.end == w.end
    delta = abelianization_image(g.delta(w.base))
    pos = abelianization_image(nf.positive)
    assert abelianization_image(w) == tuple(p - nf.k * d for p, d in zip(pos, delta))
    # one rewrite adds a positive prefix of length n and a bridge of length n - 1
    assert len(nf.positive) == len(w) + nf.k * (2 * g.n - 2)


@pytest.mark.parametrize("name", ["E2", "G3", "P3"])
def test_minimal_paths_are_positive_equivalent(name):
    g = groupoid(name)
    fp = g.poset
    for c, d in itertools.product(fp.chambers, repeat=2):
        paths = g.all_minimal_positive_paths(fp.faces[c].sv, fp.faces[d].sv)
        for p in paths[1:]:
            assert g.positive_equivalent(paths[0], p)


def test_positive_equivalence_examples():
    g = groupoid("E2")
    u, v = g.word("++ ; +1 +1"), g.word("++ ; +2 +2")
    assert g.positive_equivalent(u, u)
    assert not g.positive_equivalent(u, v)
    # the exhaustive search agrees with the wall-count shortcut
    assert not g.positive_equivalent(u, v, prune=False)
    a, b = g.word("++ ; +1 +1 +2 +2"), g.word("++ ; +2 +1 +1 +2")
    assert g.positive_equivalent(a, b, prune=False)
    with pytest.raises(InputError):
        g.positive_equivalent(g.word("++ ; -1"), g.word("++ ; +1"))


def test_positive_equivalence_budget():
    g = groupoid("E2")
    u = g.word("++ ; +1 +1 +2 +2 +1 +1 +2 +2")
    v = g.word("++ ; +2 +2 +1 +1 +2 +2 +1 +1")
    with pytest.raises(BudgetError) as exc:
        g.positive_equivalent(u, v, budget=5)
    assert exc.value.code == "E_BUDGET"


@pytest.mark.parametrize("name, length", [("E2", 4), ("G3", 3), ("P3", 3)])
def test_antipodal_shift_identity(name, length):
    # alpha · mu(D -> D#)  ~  mu(C -> C#) · alpha#  for positive alpha from C to D
    g = groupoid(name)
    rng = random.Random(1)
    for _ in range(10):
        alpha = random_word(g, rng, rng.randint(0, length), positive=True)
        c, d = alpha.base, alpha.end
        left = alpha * g.minimal_positive_path(d, negate(d))
        right = g.minimal_positive_path(c, negate(c)) * alpha.antipodal()
        assert g.positive_equivalent(left, right)


@pytest.mark.parametrize("name, length", [("E2", 3), ("G3", 2)])
def test_delta_is_central(name, length):
    g = groupoid(name)
    rng = random.Random(2)
    for _ in range(6):
        alpha = random_word(g, rng, rng.randint(0, length), positive=True)
        assert g.positive_equivalent(alpha * g.delta(alpha.end), g.delta(alpha.base) * alpha)


def test_words_equal_examples():
    g = groupoid("E2")
    u, v = g.word("++ ; +1 +1"), g.word("++ ; +2 +2")
    assert g.words_equal(u * v, v * u)
    d = g.delta((1, 1))
    assert g.words_equal(u, u * d * d.inverse())
    assert not g.words_equal(u, v)
    assert g.words_equal(u, u)
    assert g.words_equal(u * v.inverse(), v.inverse() * u) and g.words_equal(v.inverse() * u, u * v.inverse())
    with pytest.raises(InputError):
        g.words_equal(g.word("++ ; +1"), g.word("++ ; +1"))


def test_words_equal_on_g3_commutators():
    # pi_1 of the complement of three coordinate planes is Z^3
    g = groupoid("G3")
    a, b = g.word("+++ ; +1 +1"), g.word("+++ ; +2 +2")
    assert g.words_equal(a * b * a.inverse(), b)


def test_word_algebra():
    w = Word((1, 1), ((0, 1), (1, -1)))
    assert w.end == (-1, -1)
    assert w.inverse().inverse() == w
    assert reduce_word(w * w.inverse()) == Word((1, 1))
    assert abelianization_image(w * w.inverse()) == (0, 0)
    assert w.render() == "++ ; +1 -2"
    with pytest.raises(InputError):
        w * w
