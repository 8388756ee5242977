"""
Reading N-Triples into a graph model
====================================

Parse a small document, look at its subject/predicate/object sets and
turn it into a directed labeled multigraph.
"""

from pathlib import Path

from rdfrelate import build_graph, parse_document, serialize, to_multigraph

DATA = Path(__file__).parent / "data"

# one graph per document; blank node labels are scoped to the doc id
ts = parse_document((DATA / "address.nt").read_text(), "address")
print(len(ts), "triples")

g = build_graph(ts)
print("subjects:  ", sorted(map(str, g.subj)))
print("predicates:", len(g.pred))
print("objects:   ", len(g.obj))

# nodes are distinct subject/object terms, edges are triples
m = to_multigraph(g)
print(f"{len(m.nodes)} nodes, {len(m.edges)} edges")
for e in m.edges:
    src, dst = m.incidence[e]
    print(f"  {m.label(src)} --{m.edge_labels[e]}--> {m.label(dst)}")

# writing back gives canonical N-Triples
print(serialize(ts))
