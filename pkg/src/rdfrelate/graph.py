"""Set views of an RDF graph and its directed labeled multigraph form."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .ntriples import Term, Triple, TripleSet, parse_document

__all__ = [
    "POSITIONS",
    "RdfGraph",
    "LabeledMultigraph",
    "IntersectionProfile",
    "build_graph",
    "graph_from_triples",
    "load_graph",
    "to_multigraph",
    "intersection_profile",
]

POSITIONS = ("subj", "pred", "obj")


@dataclass(frozen=True)
class RdfGraph:
    """A triple set with its subject, predicate and object term sets.

    ``vocab`` is the union of the three. Build one with :func:`build_graph`.
    """

    id: str
    triples: TripleSet
    subj: frozenset
    pred: frozenset
    obj: frozenset
    vocab: frozenset

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self):
        return iter(self.triples)

    def terms(self, position: str) -> frozenset:
        if position not in POSITIONS:
            raise KeyError(position)
        return getattr(self, position)


def build_graph(ts: TripleSet) -> RdfGraph:
    subj = frozenset(t.subject for t in ts)
    pred = frozenset(t.predicate for t in ts)
    obj = frozenset(t.object for t in ts)
    return RdfGraph(ts.graph_id, ts, subj, pred, obj, subj | pred | obj)


def graph_from_triples(graph_id: str, triples: Iterable[Triple]) -> RdfGraph:
    return build_graph(TripleSet.of(graph_id, triples))


def load_graph(text, graph_id: str, **kwargs) -> RdfGraph:
    """Parse N-Triples text straight into an :class:`RdfGraph`."""
    return build_graph(parse_document(text, graph_id, **kwargs))


@dataclass(frozen=True)
class LabeledMultigraph:
    """Directed, node- and edge-labeled multigraph.

    Nodes and edges are integer handles. Nodes are numbered in order of
    first appearance of their term, edges in triple order. ``datatypes``
    holds the datatype identifier of typed literal nodes.
    """

    nodes: tuple[int, ...]
    edges: tuple[int, ...]
    node_labels: Mapping[int, Term]
    edge_labels: Mapping[int, Term]
    incidence: Mapping[int, tuple[int, int]]
    datatypes: Mapping[int, str] = field(default_factory=dict)

    def label(self, node: int):
        """Node label: the term, or ``(term, datatype)`` for a typed literal."""
        term = self.node_labels[node]
        if node in self.datatypes:
            return (term, self.datatypes[node])
        return term

    def node_for(self, term: Term) -> int:
        for n, t in self.node_labels.items():
            if t == term:
                return n
        raise KeyError(term)

    def to_triples(self) -> list[Triple]:
        out = []
        for e in self.edges:
            src, dst = self.incidence[e]
            out.append(Triple(self.node_labels[src], self.edge_labels[e], self.node_labels[dst]))
        return out


def to_multigraph(g: RdfGraph) -> LabeledMultigraph:
    index: dict[Term, int] = {}

    def node(term: Term) -> int:
        if term not in index:
            index[term] = len(index)
        return index[term]

    edge_labels = {}
    incidence = {}
    for e, t in enumerate(g.triples):
        incidence[e] = (node(t.subject), node(t.object))
        edge_labels[e] = t.predicate

    node_labels = {n: term for term, n in index.items()}
    datatypes = {
        n: term.datatype
        for n, term in node_labels.items()
        if term.is_literal and term.datatype is not None
    }
    return LabeledMultigraph(
        nodes=tuple(range(len(index))),
        edges=tuple(range(len(g.triples))),
        node_labels=node_labels,
        edge_labels=edge_labels,
        incidence=incidence,
        datatypes=datatypes,
    )


@dataclass(frozen=True)
class IntersectionProfile:
    """All nine position-by-position intersections between two graphs.

    ``cells[("subj", "pred")]`` is ``subj(left) & pred(right)``, and so on.
    """

    left: str
    right: str
    cells: Mapping[tuple[str, str], frozenset]

    def __getitem__(self, key: tuple[str, str]) -> frozenset:
        return self.cells[key]

    def is_empty(self, a: str, b: str) -> bool:
        return not self.cells[(a, b)]

    def nonempty(self, a: str, b: str) -> bool:
        return bool(self.cells[(a, b)])

    def mirror(self) -> IntersectionProfile:
        return IntersectionProfile(
            self.right, self.left, {(b, a): v for (a, b), v in self.cells.items()}
        )

    @property
    def flags(self) -> dict[tuple[str, str], bool]:
        """``True`` where the intersection is nonempty."""
        return {k: bool(v) for k, v in self.cells.items()}


def intersection_profile(g1: RdfGraph, g2: RdfGraph) -> IntersectionProfile:
    cells = {
        (a, b): g1.terms(a) & g2.terms(b)
        for a in POSITIONS
        for b in POSITIONS
    }
    return IntersectionProfile(g1.id, g2.id, cells)
