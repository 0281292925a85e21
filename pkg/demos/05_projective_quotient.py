"""The antipodal quotient: Salvetti complexes of projective arrangements.

Run: python3 demos/05_projective_quotient.py
"""

from spherearr import Groupoid, build_salvetti, faces_of, fixture, projective_words_equal
from spherearr.projective import quotient_complex, quotient_homology

for name in ["E2", "G3", "P3", "C3"]:
    q = quotient_complex(build_salvetti(faces_of(fixture(name))))
    print(name)
    print("  " + q.render(quotient_homology(q)).replace("\n", "\n  "))

# Two lines in the projective plane.  tau runs from ++ to its antipode, which
# is a loop downstairs.  It commutes with the loops around the lines and
# squares to their product, so pi_1 is Z^2 and H_1 has no torsion.
g = Groupoid(faces_of(fixture("E2")))
tau, g1, g2 = g.word("++ ; +1 +2"), g.word("++ ; +1 +1"), g.word("++ ; +2 +2")
print("tau^2 == g1 g2:", projective_words_equal(g, g.word("++ ; +1 +2 +1 +2"), g1 * g2))
print("tau g1 == g1 tau:", projective_words_equal(g, g.word("++ ; +1 +2 +1 +1"), g.word("++ ; +1 +1 +1 +2")))
print("tau == tau^-1:", projective_words_equal(g, tau, tau.inverse()))
