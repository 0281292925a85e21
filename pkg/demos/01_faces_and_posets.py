"""Faces of two great circles on S^2 and their intersection poset.

Run: python3 demos/01_faces_and_posets.py
"""

from spherearr import faces_of, fixture, intersection_poset, parse_arrangement

# Two great circles x = 0 and y = 0 on the unit sphere in R^3.
a = parse_arrangement(
    """
    version 1
    ambient 3
    normal 1 0 0
    normal 0 1 0
    """
)
print("hyperspheres:", a.n, " sphere dimension:", a.sphere_dim)

# Faces are sign vectors.  The all-zero vector is the z-axis, which meets the
# sphere in two points; they are told apart by a tag [+] / [-].
fp = faces_of(a)
print("faces by dimension:", fp.count_by_dim())
for f in fp.faces:
    print(f"  dim {f.dim}  {f.label()}")

# Composition F∘C keeps F's signs and fills the zeros from C.
edge = fp.face_id((0, 1))
chamber = fp.face_id((-1, -1))
print("(0+) ∘ (--) =", fp.faces[fp.compose(edge, chamber)].label())

# Distances between chambers count separating circles; antipodes are n apart.
for c in fp.chambers:
    print(f"  d({fp.faces[c].label()}, antipode) = {fp.distance(c, fp.antipode(c))}")

# Intersection poset with Möbius values.  The two poles are separate elements.
p = intersection_poset(a)
for e in p.elements:
    print(f"  rank {e.rank}  {e.label():<8} mu = {e.mobius}")
print("elements by rank:", p.rank_counts())

# A pencil of three circles through the same two poles.
p3 = intersection_poset(fixture("P3"))
print("P3 poles have mu =", [e.mobius for e in p3.elements if e.rank == 2])
