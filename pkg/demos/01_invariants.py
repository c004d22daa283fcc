"""
Invariants of a few small graphs
================================

Builds some familiar graphs and prints the invariants the library computes,
including both routes to the bipartite-hole number.
"""

from biphole import build_graph, connectivity, cycles, holes, invariant_report
from biphole.families import complete_bipartite, cycle

# K_{3,4}: the 3-side and 4-side are independent, so two vertices of the
# larger side and two more of it form a (2,2)-hole
g = complete_bipartite(3, 4)
print("K_{3,4} hole:", holes.find_bipartite_hole(g, 2, 2))
print("spectrum min |N(S)|:", holes.hole_spectrum(g).items())
print("tialpha formula / definitional:", holes.tialpha_formula(g), holes.tialpha_definitional(g))

# the report bundles everything; oracle=True adds the second routes
print(invariant_report(g, oracle=True).to_dict())

# C5 has a (1,2)-hole but no (2,2)-hole
c5 = cycle(5)
print("C5 (1,2)-hole:", holes.find_bipartite_hole(c5, 1, 2))
print("C5 (2,2)-hole:", holes.find_bipartite_hole(c5, 2, 2))

# connectivity with a certificate: the separator really disconnects
petersen = build_graph(10, [(i, (i + 1) % 5) for i in range(5)]
                       + [(i, i + 5) for i in range(5)]
                       + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
kappa, cert = connectivity.kappa_oracle(petersen)
print("Petersen kappa:", kappa, "separator:", sorted(cert.separator), "valid:", cert.is_valid(petersen))
print("Petersen cycle lengths:", sorted(cycles.cycle_spectrum(petersen).present))
