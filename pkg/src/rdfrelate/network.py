"""Relation network over a corpus of RDF graphs, with JSON/DOT/TSV export."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graph import RdfGraph, graph_from_triples
from .ntriples import Triple
from .relationship import (
    ClassificationMode,
    RelationshipKind,
    classify_with_blank_nodes,
    sorted_kinds,
)
from .schema import DerivedTriple, InferenceConfig, derivation_dimension, rdfs_closure

__all__ = [
    "DuplicateGraphId",
    "RelationEdge",
    "RelationNetwork",
    "build_network",
    "export_json",
    "export_dot",
    "export_tsv",
    "DEFAULT_WITNESS_CAP",
]

DEFAULT_WITNESS_CAP = 16


class DuplicateGraphId(ValueError):
    pass


@dataclass(frozen=True)
class RelationEdge:
    """A directed, classified link between two graphs.

    ``dimension`` is 1 for relations visible without inference. An edge
    that only appears after schema inference gets one more than the largest
    derivation dimension among the derived triples carrying its witnesses,
    and ``provenance`` lists those triples with the rule that produced them.
    """

    source: str
    target: str
    kinds: frozenset
    dimension: int = 1
    witnesses: Mapping[RelationshipKind, frozenset] = field(default_factory=dict)
    provenance: tuple[tuple[str, Triple], ...] = ()

    def __post_init__(self):
        if not self.kinds or RelationshipKind.UNRELATED in self.kinds:
            raise ValueError("an edge needs at least one relationship kind")
        if (self.dimension == 1) != (not self.provenance):
            raise ValueError("dimension 1 edges have no provenance and vice versa")


@dataclass(frozen=True)
class RelationNetwork:
    nodes: tuple[str, ...]
    edges: tuple[RelationEdge, ...]
    mode: ClassificationMode = ClassificationMode.LENIENT
    inference: InferenceConfig | None = None

    def edge(self, source: str, target: str) -> RelationEdge | None:
        for e in self.edges:
            if e.source == source and e.target == target:
                return e
        return None

    def pairs(self) -> set[tuple[str, str]]:
        return {(e.source, e.target) for e in self.edges}


def _attach_derived(graphs: Sequence[RdfGraph], closure: Iterable[DerivedTriple]) -> list[RdfGraph]:
    """Extend each graph with the derived triples it helps justify.

    A derived triple joins a graph when one of its one-step justifications
    uses a premise already in that (extended) graph.
    """
    derived = sorted(
        (dt for dt in closure if not dt.asserted),
        key=lambda dt: (dt.depth, dt.triple.sort_key()),
    )
    out = []
    for g in graphs:
        members = set(g.triples.as_set())
        added: list[Triple] = []
        changed = True
        while changed:
            changed = False
            for dt in derived:
                if dt.triple in members:
                    continue
                if any(p in members for _, ps in dt.alternatives for p in ps):
                    members.add(dt.triple)
                    added.append(dt.triple)
                    changed = True
        out.append(graph_from_triples(g.id, (*g.triples, *added)) if added else g)
    return out


def _witness_union(a: Mapping, b: Mapping) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, frozenset()) | v
    return out


def _related_kinds(c) -> dict:
    return {k: v for k, v in c.witnesses.items() if k is not RelationshipKind.UNRELATED}


def build_network(
    graphs: Iterable[RdfGraph],
    mode=ClassificationMode.LENIENT,
    infer: InferenceConfig | None = None,
) -> RelationNetwork:
    """Classify every ordered pair of graphs and collect the related ones.

    With ``infer`` the RDFS closure of the whole corpus is computed, each
    graph is extended with the derived triples it supports, and pairs are
    classified again. Kinds found either way are merged.
    """
    graphs = list(graphs)
    mode = mode if isinstance(mode, ClassificationMode) else ClassificationMode(mode)
    seen = set()
    for g in graphs:
        if g.id in seen:
            raise DuplicateGraphId(f"duplicate graph id: {g.id!r}")
        seen.add(g.id)

    direct = {}
    for g1 in graphs:
        for g2 in graphs:
            if g1 is g2:
                continue
            found = _related_kinds(classify_with_blank_nodes(g1, g2, mode))
            if found:
                direct[(g1.id, g2.id)] = found

    induced = {}
    extended_by_id = {}
    derived_by_triple: dict[Triple, DerivedTriple] = {}
    if infer is not None:
        closure = rdfs_closure(graphs, infer)
        derived_by_triple = {dt.triple: dt for dt in closure if not dt.asserted}
        extended = _attach_derived(graphs, closure)
        extended_by_id = {g.id: g for g in extended}
        for g1 in extended:
            for g2 in extended:
                if g1 is g2:
                    continue
                found = _related_kinds(classify_with_blank_nodes(g1, g2, mode))
                if found:
                    induced[(g1.id, g2.id)] = found

    edges = []
    order = {g.id: i for i, g in enumerate(graphs)}
    for pair in sorted(set(direct) | set(induced), key=lambda p: (order[p[0]], order[p[1]])):
        if pair in direct:
            witnesses = _witness_union(direct[pair], induced.get(pair, {}))
            edges.append(RelationEdge(pair[0], pair[1], frozenset(witnesses), 1, witnesses))
            continue
        witnesses = induced[pair]
        dim, provenance = _induced_dimension(
            witnesses, extended_by_id[pair[0]], extended_by_id[pair[1]], derived_by_triple
        )
        edges.append(RelationEdge(pair[0], pair[1], frozenset(witnesses), dim, witnesses, provenance))

    return RelationNetwork(tuple(g.id for g in graphs), tuple(edges), mode, infer)


def _induced_dimension(witnesses, g1: RdfGraph, g2: RdfGraph, derived_by_triple):
    terms = set().union(*witnesses.values())
    derived = {
        t: derived_by_triple[t]
        for g in (g1, g2)
        for t in g.triples
        if t in derived_by_triple
    }
    carrying = [dt for t, dt in derived.items() if terms.intersection(t.terms())]
    if not carrying:
        carrying = list(derived.values())
    carrying.sort(key=lambda dt: dt.triple.sort_key())
    dim = 1 + max(derivation_dimension(dt) for dt in carrying)
    provenance = tuple(
        (rule.value, dt.triple)
        for dt in carrying
        for rule in sorted(dt.rules(), key=lambda r: r.value)
    )
    return dim, provenance


# -- export -----------------------------------------------------------------


def _term_list(terms, cap: int | None) -> list[str]:
    names = sorted(t.n3() for t in terms)
    return names if cap is None else names[:cap]


def _inference_echo(cfg: InferenceConfig | None):
    if cfg is None:
        return None
    return {
        "enable_range": cfg.enable_range,
        "enable_domain": cfg.enable_domain,
        "extra_schema": [t.n3() for t in cfg.extra_triples()],
        "max_iterations": cfg.max_iterations,
        "dimension": "derivation depth + 1; direct relations are 1",
    }


def export_json(net: RelationNetwork, witness_cap: int | None = DEFAULT_WITNESS_CAP) -> str:
    edges = []
    for e in sorted(net.edges, key=lambda e: (e.source, e.target)):
        edges.append(
            {
                "from": e.source,
                "to": e.target,
                "kinds": [k.value for k in sorted_kinds(e.kinds)],
                "dimension": e.dimension,
                "witnesses": {
                    k.value: _term_list(e.witnesses.get(k, ()), witness_cap)
                    for k in sorted_kinds(e.kinds)
                },
                "provenance": [{"rule": r, "triple": t.n3()} for r, t in e.provenance],
            }
        )
    doc = {
        "nodes": list(net.nodes),
        "edges": edges,
        "config": {"mode": net.mode.value, "inference": _inference_echo(net.inference)},
    }
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _edge_label(e: RelationEdge) -> str:
    return "{} (dim={})".format(", ".join(k.value for k in sorted_kinds(e.kinds)), e.dimension)


def export_dot(net: RelationNetwork) -> str:
    """Render as a DOT digraph; an edge and its mirror become one line."""
    if not net.nodes:
        return "digraph relations { }\n"
    lines = ["digraph relations {"]
    for n in net.nodes:
        lines.append(f"  {_dot_id(n)};")
    order = {n: i for i, n in enumerate(net.nodes)}
    done = set()
    for e in sorted(net.edges, key=lambda e: (order[e.source], order[e.target])):
        key = frozenset((e.source, e.target))
        if key in done:
            continue
        done.add(key)
        mirrored = net.edge(e.target, e.source) is not None
        attrs = f'label={_dot_id(_edge_label(e))}'
        if mirrored:
            attrs += ", dir=both"
        lines.append(f"  {_dot_id(e.source)} -> {_dot_id(e.target)} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_tsv(net: RelationNetwork) -> str:
    order = {n: i for i, n in enumerate(net.nodes)}
    rows = []
    for e in sorted(net.edges, key=lambda e: (order[e.source], order[e.target])):
        kinds = ",".join(k.value for k in sorted_kinds(e.kinds))
        rows.append(f"{e.source}\t{e.target}\t{kinds}\t{e.dimension}\n")
    return "".join(rows)
