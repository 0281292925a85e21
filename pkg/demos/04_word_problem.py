"""Loops in the 1-skeleton of the Salvetti complex and the word problem.

Run: python3 demos/04_word_problem.py
"""

from spherearr import Groupoid, abelianization_image, faces_of, fixture

g = Groupoid(faces_of(fixture("E2")))
print(g.involution_check().render())

# Words: a base chamber and signed wall crossings, 1-based.
g1 = g.word("++ ; +1 +1")  # around the first circle
g2 = g.word("++ ; +2 +2")  # around the second circle
delta = g.delta((1, 1))
print("delta(++) =", delta.render(), " image", abelianization_image(delta))

# Every word is delta^-k times a positive word.
w = g1 * g2.inverse()
nf = g.normal_form(w)
print(w.render(), "=", nf.render())

# The fundamental group of this complement is Z^2.
print("g1 g2 == g2 g1:", g.words_equal(g1 * g2, g2 * g1))
print("g1 == g2:", g.words_equal(g1, g2))
print("g1 == g1 delta delta^-1:", g.words_equal(g1, g1 * delta * delta.inverse()))

# Minimal positive paths between two chambers are all equivalent.
g3 = Groupoid(faces_of(fixture("G3")))
paths = g3.all_minimal_positive_paths((1, 1, 1), (-1, -1, -1))
print(len(paths), "minimal paths +++ -> ---; pairwise equivalent:",
      all(g3.positive_equivalent(paths[0], p) for p in paths))
