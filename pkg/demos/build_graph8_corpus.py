"""Build the list of all non-isomorphic graphs on 8 vertices as graph6.

There are 12,346 of them.  Every 8-vertex graph is a 7-vertex graph plus one
vertex, so we extend each of the 1,044 seven-vertex graphs from the networkx
atlas by every possible neighbourhood of a new vertex and keep one
representative per isomorphism class.  Classes are bucketed by a
Weisfeiler-Lehman hash and separated exactly with ``nx.is_isomorphic``.

Run:  python demos/build_graph8_corpus.py tests/data/graphs8.g6
Takes a few minutes; networkx is only needed here, not by the library.
"""

import sys
from collections import defaultdict

import networkx as nx

from biphole import build_graph, write_graph6


def extensions(h):
    nodes = sorted(h.nodes())
    for mask in range(1 << 7):
        g = nx.Graph(h)
        g.add_node(7)
        g.add_edges_from((7, nodes[i]) for i in range(7) if mask >> i & 1)
        yield g


def main(out_path):
    seven = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 7]
    print(f"{len(seven)} graphs on 7 vertices")
    buckets = defaultdict(list)
    kept = []
    for count, h in enumerate(seven, 1):
        for g in extensions(h):
            key = (g.number_of_edges(), tuple(sorted(d for _, d in g.degree())),
                   nx.weisfeiler_lehman_graph_hash(g, iterations=3))
            if any(nx.is_isomorphic(g, other) for other in buckets[key]):
                continue
            buckets[key].append(g)
            kept.append(g)
        if count % 100 == 0:
            print(f"  {count} seeds, {len(kept)} classes")
    print(f"{len(kept)} classes on 8 vertices")
    lines = sorted(write_graph6(build_graph(8, g.edges())) for g in kept)
    with open(out_path, "wb") as fh:
        fh.write(b"".join(line + b"\n" for line in lines))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "graphs8.g6")
