"""Salvetti complexes and their homology, computed two independent ways.

Run: python3 demos/02_salvetti_homology.py
"""

import time

from spherearr import CellPoset, build_salvetti, cellular_homology, faces_of, fixture, order_complex_homology
from spherearr.homology import relative_homology, union_cells, union_subcomplex_homology

for name in ["E2", "G3", "P3", "C3", "S1n3"]:
    fp = faces_of(fixture(name))
    sal = build_salvetti(fp)
    poset = CellPoset.from_salvetti(sal)

    t0 = time.perf_counter()
    h = cellular_homology(poset)  # incidence numbers + Smith normal form
    t1 = time.perf_counter()
    oracle = order_complex_homology(poset)  # barycentric subdivision
    t2 = time.perf_counter()

    print(f"{name}: cells {sal.count_by_dim()}, chambers {len(fp.chambers)}")
    print(f"  {h.betti_line()}   chi = {h.euler_characteristic}")
    print(f"  cellular {1000 * (t1 - t0):.1f} ms, order complex {1000 * (t2 - t1):.1f} ms, agree: {h == oracle}")

# The sphere itself, cut along the union of the hyperspheres.
fp = faces_of(fixture("E2"))
sphere = CellPoset.from_face_poset(fp)
print("S^2 from faces:", cellular_homology(sphere).betti_line())
print("union of the circles:", union_subcomplex_homology(fp).betti_line())
print("relative to the union:", relative_homology(sphere, union_cells(fp)).betti_line())
