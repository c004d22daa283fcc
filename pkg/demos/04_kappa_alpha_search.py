"""
Connectivity versus independence under the degree-sum condition
================================================================

Searches 2-connected graphs with sigma2 >= 2 tialpha - 1 for kappa < alpha.
Small orders do contain such graphs; the first one found is printed and
re-checked with networkx.
"""

import networkx as nx

from biphole import verify
from biphole.graph import parse_graph6

for n in range(4, 8):
    r = verify.search_q54(verify.enumerate_labeled(n))
    print(f"n={n}: {r.hypothesis_count} graphs meet the hypothesis, {len(r.candidates)} have kappa < alpha, "
          f"{len(r.breaches)} breaches")

r = verify.search_q54(verify.enumerate_labeled(6))
index, g6, values = r.candidates[0]
print("first candidate:", g6, values)

g = parse_graph6(g6)
h = nx.Graph(g.edges())
print("networkx: kappa =", nx.node_connectivity(h),
      "alpha =", max(len(c) for c in nx.find_cliques(nx.complement(h))))
