import pytest

from spherearr.arrangement import faces_of
from spherearr.errors import InputError
from spherearr.fixtures import fixture, fixture_names
from spherearr.homology import CellPoset, ChainComplex, cellular_homology, homology, order_complex
from spherearr.linalg import IntMatrix
from spherearr.projective import lift_parity, projective_words_equal, quotient_complex, quotient_homology
from spherearr.salvetti import build_salvetti
from spherearr.words import Groupoid, Word


def orbit_simplex_homology(s):
    """Homology of the quotient computed on ordered simplices of the order complex.

    The antipode preserves the cell order, so orbits of chains form a
    semi-simplicial set whose face maps need no orientation choices.
    """
    p = CellPoset.from_salvetti(s)
    anti = [s.antipode(i) for i in range(len(s))]

    def orbit(chain):
        return min(chain, tuple(anti[x] for x in chain))

    orbits = sorted({orbit(ch) for ch in order_complex(p, 10**6)}, key=lambda t: (len(t), t))
    top = max(len(t) for t in orbits) - 1
    cells = [[] for _ in range(top + 1)]
    for t in orbits:
        cells[len(t) - 1].append(t)
    pos = {t: i for group in cells for i, t in enumerate(group)}
    boundary = {}
    for k in range(1, top + 1):
        entries = {}
        for t in cells[k]:
            for j in range(len(t)):
                key = (pos[t], pos[orbit(t[:j] + t[j + 1:])])
                entries[key] = entries.get(key, 0) + (-1) ** j
        boundary[k] = IntMatrix(len(cells[k]), len(cells[k - 1]), {k2: v for k2, v in entries.items() if v})
    return homology(ChainComplex(cells, boundary))


@pytest.mark.parametrize("name", fixture_names())
def test_quotient_counts_and_euler_characteristic(name):
    s = build_salvetti(faces_of(fixture(name)))
    q = quotient_complex(s)
    assert [2 * c for c in q.count_by_dim()] == s.count_by_dim()
    h = quotient_homology(q)
    sal = cellular_homology(CellPoset.from_salvetti(s))
    assert 2 * h.euler_characteristic == sal.euler_characteristic == 2 * q.euler_characteristic
    assert h.betti[0] == 1 and not h.torsion[0]


def test_quotient_cell_counts_golden():
    assert quotient_complex(build_salvetti(faces_of(fixture("E2")))).count_by_dim() == [2, 4, 4]
    assert quotient_complex(build_salvetti(faces_of(fixture("C3")))).count_by_dim() == [4, 12, 12, 8]


@pytest.mark.parametrize("name", ["E2", "G3", "P3", "C3", "S1n1", "S1n3"])
def test_folded_boundary_agrees_with_orbit_simplices(name):
    s = build_salvetti(faces_of(fixture(name)))
    q = quotient_complex(s)
    q.chains.check()
    assert quotient_homology(q) == orbit_simplex_homology(s)


def test_e2_quotient_homology():
    # pi_1 is generated by the loops around each circle and the image tau of a
    # path from a chamber to its antipode; tau is central with tau^2 = g1 g2,
    # so pi_1 = Z^2 and H_1 has no torsion
    h = quotient_homology(quotient_complex(build_salvetti(faces_of(fixture("E2")))))
    assert h.betti == (1, 2, 3)
    assert h.torsion_free


def test_transport_signs_are_an_involution():
    s = build_salvetti(faces_of(fixture("C3")))
    q = quotient_complex(s)
    for c, d in enumerate(q.partner):
        assert q.partner[d] == c
        assert q.transport[c] == q.transport[d]


def test_render_mentions_counts():
    text = quotient_complex(build_salvetti(faces_of(fixture("E2")))).render()
    assert "orbit cells: 2 4 4" in text
    assert "euler characteristic: 2" in text


@pytest.fixture(scope="module")
def e2():
    return Groupoid(faces_of(fixture("E2")))


def test_lift_parity(e2):
    assert lift_parity(e2.word("++ ; +1 +2")) == 1
    assert lift_parity(e2.word("++ ; +1 +1")) == 0
    with pytest.raises(InputError):
        lift_parity(e2.word("++ ; +1"))


def test_projective_words(e2):
    w = e2.word
    tau = w("++ ; +1 +2")
    g1, g2 = w("++ ; +1 +1"), w("++ ; +2 +2")
    assert projective_words_equal(e2, g1, g1)
    # an odd loop is never trivial
    assert not projective_words_equal(e2, tau, Word((1, 1)))
    # commutator of even loops
    assert projective_words_equal(e2, g1 * g2 * g1.inverse() * g2.inverse(), Word((1, 1)))
    assert projective_words_equal(e2, w("++ ; +1 +2 +1 +2"), g1 * g2)
    # tau g1 = g1 tau: the second g1 starts at the antipodal chamber with the same walls
    assert projective_words_equal(e2, w("++ ; +1 +2 +1 +1"), w("++ ; +1 +1 +1 +2"))
    assert not projective_words_equal(e2, tau, tau.inverse())
    # the base may be given by either lift
    assert projective_words_equal(e2, tau, w("-- ; +2 +1"))


def test_projective_words_need_common_base(e2):
    with pytest.raises(InputError):
        projective_words_equal(e2, e2.word("++ ; +1 +1"), e2.word("+- ; +1 +1"))
