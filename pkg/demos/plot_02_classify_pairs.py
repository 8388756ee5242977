"""
Classifying pairs of graphs
===========================

The same pair can be read leniently (any qualifying overlap) or strictly
(overlaps that rule out the other kinds must be absent).
"""

from rdfrelate import classify_pair, load_graph

EX = "http://www.example.org/"

t1 = load_graph(f"<{EX}staffid/85740> <{EX}terms/desig> <{EX}dept/accountant> .", "T1")
t2 = load_graph(f"<{EX}staffid/85740> <{EX}terms/desig> <{EX}club/treasurer> .", "T2")
t3 = load_graph(f"<{EX}terms/desig> <{EX}staffid/85740> <{EX}club/treasurer> .", "T3")

# literal predicates are accepted by default
p1 = load_graph(f'<{EX}staffid/85740> "published" <http://www.wikipedia.com/technology/C.V> .', "P1")
p2 = load_graph(f'<{EX}staffid/85742> "published" <http://www.wikipedia.com/technology/C.V> .', "P2")

for a, b in [(t1, t2), (p1, p2), (t1, t3), (t3, t1), (t1, t1)]:
    for mode in ("lenient", "strict"):
        c = classify_pair(a, b, mode)
        kinds = ", ".join(sorted(k.value for k in c.kinds))
        print(f"{a.id:>2} vs {b.id:<2} {mode:<8} {kinds}")

# witnesses say which terms made each kind hold
c = classify_pair(t1, t3, "strict")
for kind, terms in c.witnesses.items():
    print(kind, [str(t) for t in terms])
