"""Pairwise relationship classification between RDF graphs.

Kinds are read off the :class:`~rdfrelate.graph.IntersectionProfile` of the
pair. In lenient mode a kind only needs its defining intersections to be
nonempty; strict mode also requires the exclusions that separate the kinds
(e.g. SS_PP with no shared object). Graphs containing blank nodes are first
split into primary, auxiliary and residual triples, see
:func:`reify_blank_nodes`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

from .graph import IntersectionProfile, RdfGraph, graph_from_triples, intersection_profile
from .ntriples import Term, Triple

__all__ = [
    "RelationshipKind",
    "ClassificationMode",
    "Classification",
    "ReifiedView",
    "CyclicBlankNodeError",
    "mirror_kind",
    "mirror_kinds",
    "classify_profile",
    "classify_pair",
    "reify_blank_nodes",
    "classify_with_blank_nodes",
]


class RelationshipKind(enum.Enum):
    SS_PP = "SS_PP"
    OO_PP = "OO_PP"
    SP = "SP"
    PS = "PS"
    OP = "OP"
    PO = "PO"
    SO = "SO"
    OS = "OS"
    # shared subject at a blank-node primary triple, see classify_with_blank_nodes
    SS = "SS"
    BLANK_NODE_MEDIATED = "BlankNodeMediated"
    UNRELATED = "Unrelated"

    def __str__(self) -> str:
        return self.value


K = RelationshipKind

_MIRROR = {
    K.SP: K.PS, K.PS: K.SP,
    K.OP: K.PO, K.PO: K.OP,
    K.SO: K.OS, K.OS: K.SO,
}

KIND_ORDER = {k: i for i, k in enumerate(RelationshipKind)}


def mirror_kind(kind: RelationshipKind) -> RelationshipKind:
    return _MIRROR.get(kind, kind)


def mirror_kinds(kinds) -> frozenset:
    return frozenset(mirror_kind(k) for k in kinds)


def sorted_kinds(kinds) -> list[RelationshipKind]:
    return sorted(kinds, key=KIND_ORDER.__getitem__)


class ClassificationMode(enum.Enum):
    LENIENT = "lenient"
    STRICT = "strict"

    def __str__(self) -> str:
        return self.value


class CyclicBlankNodeError(ValueError):
    def __init__(self, graph_id: str, cycle: list[Term]):
        self.graph_id = graph_id
        self.cycle = cycle
        labels = " -> ".join(t.n3() for t in cycle)
        super().__init__(f"blank node cycle in graph {graph_id!r}: {labels}")


@dataclass(frozen=True)
class Classification:
    kinds: frozenset
    witnesses: Mapping[RelationshipKind, frozenset] = field(default_factory=dict)
    via_blank_node: Term | None = None

    def __contains__(self, kind) -> bool:
        return kind in self.kinds

    @property
    def related(self) -> bool:
        return K.UNRELATED not in self.kinds

    def mirrored(self) -> Classification:
        return Classification(
            mirror_kinds(self.kinds),
            {mirror_kind(k): v for k, v in self.witnesses.items()},
            self.via_blank_node,
        )


def _mode(mode) -> ClassificationMode:
    return mode if isinstance(mode, ClassificationMode) else ClassificationMode(mode)


def classify_profile(profile: IntersectionProfile, mode=ClassificationMode.LENIENT) -> Classification:
    """Classify a pair from its intersection profile alone."""
    strict = _mode(mode) is ClassificationMode.STRICT
    c = profile.cells
    ss, pp, oo = c[("subj", "subj")], c[("pred", "pred")], c[("obj", "obj")]
    disjoint = not (ss or pp or oo)

    found: dict[RelationshipKind, frozenset] = {}
    if ss and pp and not (strict and oo):
        found[K.SS_PP] = ss | pp
    if oo and pp and not (strict and ss):
        found[K.OO_PP] = oo | pp
    # cross-position kinds: (left position, right position)
    for kind, cell, needs_disjoint in (
        (K.SP, ("subj", "pred"), True),
        (K.PS, ("pred", "subj"), True),
        (K.OP, ("obj", "pred"), True),
        (K.PO, ("pred", "obj"), True),
        (K.SO, ("subj", "obj"), False),
        (K.OS, ("obj", "subj"), False),
    ):
        if c[cell] and not (strict and needs_disjoint and not disjoint):
            found[kind] = c[cell]

    if not found:
        return Classification(frozenset({K.UNRELATED}), {})
    return Classification(frozenset(found), found)


def classify_pair(g1: RdfGraph, g2: RdfGraph, mode=ClassificationMode.LENIENT) -> Classification:
    return classify_profile(intersection_profile(g1, g2), mode)


# -- blank nodes -------------------------------------------------------------


@dataclass(frozen=True)
class ReifiedView:
    """Partition of a graph's triples around its blank nodes.

    ``primary`` triples tie a named resource to a blank node, ``auxiliary``
    groups hold the triples describing each blank node (keyed by that node),
    ``residual`` triples mention no blank node at all.
    """

    graph_id: str
    primary: tuple[Triple, ...]
    auxiliary: Mapping[Term, tuple[Triple, ...]]
    residual: tuple[Triple, ...]

    def auxiliary_triples(self) -> list[Triple]:
        return [t for group in self.auxiliary.values() for t in group]

    def all_triples(self) -> list[Triple]:
        return [*self.primary, *self.auxiliary_triples(), *self.residual]


def _has_blank(t: Triple) -> bool:
    return t.subject.is_blank or t.object.is_blank


def _find_cycle(links: dict[Term, set[Term]]) -> list[Term] | None:
    white, grey, black = 0, 1, 2
    color = {n: white for n in links}
    for start in sorted(links, key=Term.sort_key):
        if color[start] != white:
            continue
        stack = [(start, iter(sorted(links[start], key=Term.sort_key)))]
        path = [start]
        color[start] = grey
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = black
                stack.pop()
                path.pop()
                continue
            state = color.get(nxt, black)
            if state == grey:
                return path[path.index(nxt):] + [nxt]
            if state == white:
                color[nxt] = grey
                path.append(nxt)
                stack.append((nxt, iter(sorted(links[nxt], key=Term.sort_key))))
    return None


def reify_blank_nodes(g: RdfGraph) -> ReifiedView:
    """Split ``g`` into primary, auxiliary and residual triples.

    A triple with a named subject and a blank object is primary. A triple
    whose subject is a blank node is auxiliary, grouped under that node,
    unless the node is never the object of any triple: then its least
    triple (preferring one with a non-blank object) is promoted to primary.
    Chains of blank nodes are followed; a cycle raises
    :class:`CyclicBlankNodeError`.
    """
    blanks_as_object = set()
    links: dict[Term, set[Term]] = {}
    for t in g.triples:
        if t.subject.is_blank:
            links.setdefault(t.subject, set())
        if t.object.is_blank:
            blanks_as_object.add(t.object)
            links.setdefault(t.object, set())
            if t.subject.is_blank:
                links[t.subject].add(t.object)

    cycle = _find_cycle(links)
    if cycle is not None:
        raise CyclicBlankNodeError(g.id, cycle)

    promoted = set()
    by_subject: dict[Term, list[Triple]] = {}
    for t in g.triples:
        if t.subject.is_blank:
            by_subject.setdefault(t.subject, []).append(t)
    for b, ts in by_subject.items():
        if b not in blanks_as_object:
            promoted.add(min(ts, key=lambda t: (t.object.is_blank, t.sort_key())))

    primary, residual = [], []
    auxiliary: dict[Term, list[Triple]] = {}
    for t in g.triples:
        if not _has_blank(t):
            residual.append(t)
        elif t in promoted or not t.subject.is_blank:
            primary.append(t)
        else:
            auxiliary.setdefault(t.subject, []).append(t)

    return ReifiedView(
        g.id,
        tuple(primary),
        {b: tuple(ts) for b, ts in auxiliary.items()},
        tuple(residual),
    )


def classify_with_blank_nodes(g1: RdfGraph, g2: RdfGraph, mode=ClassificationMode.LENIENT) -> Classification:
    """Classify a pair that may contain blank nodes.

    Only residual and primary triples take part in the comparison; auxiliary
    triples hang off their primary triple by subject-object links inside
    their own graph. When a relation exists only because of a primary
    triple, the result also carries ``BlankNodeMediated`` and the blank node
    of that primary triple. A subject shared with a primary triple is
    reported as ``SS`` when no predicate is shared.
    """
    mode = _mode(mode)
    v1, v2 = reify_blank_nodes(g1), reify_blank_nodes(g2)
    if not v1.primary and not v2.primary:
        return classify_pair(g1, g2, mode)

    core1 = graph_from_triples(g1.id, (*v1.residual, *v1.primary))
    core2 = graph_from_triples(g2.id, (*v2.residual, *v2.primary))
    profile = intersection_profile(core1, core2)
    base = classify_profile(profile, mode)
    found = {k: w for k, w in base.witnesses.items()}

    ss, pp = profile[("subj", "subj")], profile[("pred", "pred")]
    primary_subjects = {t.subject for t in (*v1.primary, *v2.primary)}
    if ss & primary_subjects and not pp:
        found[K.SS] = ss

    res1 = graph_from_triples(g1.id, v1.residual)
    res2 = graph_from_triples(g2.id, v2.residual)
    residual_kinds = classify_pair(res1, res2, mode).kinds
    mediated = [k for k in found if k not in residual_kinds]

    via = None
    if mediated:
        witness_terms = set().union(*(found[k] for k in mediated))
        carriers = [
            t
            for t in (*v1.primary, *v2.primary)
            if any(x in witness_terms for x in t.terms() if not x.is_blank)
        ]
        blanks = [x for t in carriers for x in (t.subject, t.object) if x.is_blank]
        if blanks:
            via = min(blanks, key=Term.sort_key)
            found[K.BLANK_NODE_MEDIATED] = frozenset({via})

    if not found:
        return Classification(frozenset({K.UNRELATED}), {})
    return Classification(frozenset(found), found, via)
