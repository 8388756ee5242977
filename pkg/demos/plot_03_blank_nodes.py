"""
Blank nodes: primary and auxiliary triples
==========================================

A blank node is split into the triple that ties it to a named resource
and the triples that describe it. Only the former is compared with other
graphs.
"""

from pathlib import Path

from rdfrelate import classify_with_blank_nodes, load_graph, reify_blank_nodes

DATA = Path(__file__).parent / "data"
EX = "http://www.example.org/"

address = load_graph((DATA / "address.nt").read_text(), "T1")
other = load_graph(f"<{EX}staffid/85740> <{EX}terms/design> <{EX}dept/accountant> .", "T2")

view = reify_blank_nodes(address)
print("primary:")
for t in view.primary:
    print("  ", t)
for node, group in view.auxiliary.items():
    print(f"auxiliary for {node}:")
    for t in group:
        print("  ", t)

c = classify_with_blank_nodes(address, other)
print(sorted(k.value for k in c.kinds), "via", c.via_blank_node)
