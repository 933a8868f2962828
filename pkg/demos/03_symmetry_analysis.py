"""Automorphisms, orbits, and the link-intersection graphs.

The three maps of type [4^3,5^1] on the chi = -1 surface are told apart by
their symmetry: automorphism groups of orders 4, 2, and 8 (Klein four, Z_2,
and the dihedral group of order 8).  None is vertex-transitive, and the
auxiliary graphs G_i -- join u and v when their links share exactly i
vertices -- witness that directly: a vertex-transitive map would make every
G_i regular, but here the G_i degree multisets are visibly uneven.
"""

from semeq import (
    automorphism_group,
    enumerate_maps,
    gi_graph,
    link_cycle,
    vertex_orbits,
)

print(__doc__)

result = enumerate_maps("[4^3,5^1]", 20, -1)
for idx, m in enumerate(result.maps, 1):
    group = automorphism_group(m)
    orbits = vertex_orbits(m)
    print(f"=== map {idx}")
    print(f"  |Aut| = {group.order}, structure {group.structure}")
    print(f"  vertex orbits ({len(orbits)}): sizes {[len(o) for o in orbits]}")
    g6 = gi_graph(m, 6)
    print(f"  G_6 has {len(g6.edges)} edges: {list(g6.edges)}")
    degs = g6.degree_multiset()
    print(f"  G_6 degree multiset: {sorted(set(degs))} -> "
          f"{'regular' if len(set(degs)) == 1 else 'NOT regular => not vertex-transitive'}")
    print()

m = result.maps[0]
lk = link_cycle(m, 1)
print(f"link of vertex 1 in the first map: {lk.boundary}")
print(f"(a {len(lk.boundary)}-cycle: (4-2)+(4-2)+(4-2)+(5-2) = 9 boundary vertices)")
