"""
Extremal constructions
======================

Generates the three constructions shipped in ``biphole.families`` and checks
their stated invariants against what the library computes.
"""

from biphole import connectivity, cycles, holes, verify
from biphole.families import Family, FamilySpec, instance
from biphole.graph import bondy_chvatal_closure, sigma2, write_graph6

for spec in (FamilySpec(Family.EX52, (4, 8, 7)), FamilySpec(Family.CIRCULANT_QK, (1, 2))):
    inst = instance(spec)
    g = inst.graph
    print(spec, write_graph6(g).decode())
    print("  expected:", inst.expected)
    print("  computed: n=%d sigma2=%s tialpha=%d kappa=%d alpha=%d hamiltonian=%s"
          % (g.n, sigma2(g), holes.tialpha_formula(g), connectivity.kappa(g),
             connectivity.alpha(g), cycles.is_hamiltonian(g)))

# the circulant is its own closure, so closure arguments say nothing here
g = instance(FamilySpec(Family.CIRCULANT_QK, (1, 2))).graph
print("closure unchanged:", bondy_chvatal_closure(g) == g)

# the (K_{a-2} + K_{n-a}) v K_2 family carries two closed forms for tialpha;
# brute force picks the min form
for n, a in ((12, 5), (16, 6)):
    print(verify.ex51_report(n, a))
