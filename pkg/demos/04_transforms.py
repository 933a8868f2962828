"""Truncation and rectification as combinatorial operations.

Both operations are computed purely on the flag model, so they apply on any
closed surface.  Their type laws are classical: truncating a [q^p] map gives
[p^1,(2q)^2]; rectifying gives [p^1,q^1,p^1,q^1]; on [p,q,p,q] inputs
truncation gives [4^1,(2p)^1,(2q)^1] and rectification [4^1,p^1,4^1,q^1].
Applied to the Platonic maps these reproduce the Archimedean solids.  The
laws need the [q^p] or [p,q,p,q] shape: on a mixed type like [4^3,5^1] the
transforms still produce valid polyhedral maps on the same surface, but the
corners inherit unequal patterns, so the results are not semi-equivelar
(reported as type None below).
"""

from semeq import (
    enumerate_maps,
    euler_characteristic,
    fixture_map,
    semi_equivelar_type,
    rectify,
    truncate,
    validate_polyhedral,
)

print(__doc__)

cube = fixture_map("cube")
tet = fixture_map("tetrahedron")

for name, m in (("tetrahedron", tet), ("cube", cube)):
    t = truncate(m)
    r = rectify(m)
    print(f"{name:>13}: truncate -> {semi_equivelar_type(t)} on {t.f0} vertices; "
          f"rectify -> {semi_equivelar_type(r)} on {r.f0} vertices")

print()
print("iterated: rectify(rectify(cube)) =",
      semi_equivelar_type(rectify(rectify(cube))))

print()
print("on the chi = -1 surface (type [4^3,5^1], first census map):")
m = enumerate_maps("[4^3,5^1]", 20, -1).maps[0]
t = truncate(m)
print(f"  truncation: type {semi_equivelar_type(t)}, {t.f0} vertices, "
      f"chi {euler_characteristic(t)}, polyhedral: {validate_polyhedral(t).ok}")
r = rectify(m)
print(f"  rectification: type {semi_equivelar_type(r)}, {r.f0} vertices, "
      f"chi {euler_characteristic(r)}, polyhedral: {validate_polyhedral(r).ok}")
print("  (chi preserved; type None is expected: [4^3,5^1] corners differ,")
print("   so the transformed maps are polyhedral but not semi-equivelar)")
