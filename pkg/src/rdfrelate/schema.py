"""Forward-chaining closure for the RDFS rules used in relation induction.

Supported rules: subclass transitivity, type inheritance through
``rdfs:subClassOf``, and typing through ``rdfs:range`` (on by default) and
``rdfs:domain`` (off by default). Each derived fact records the rule and
premises of one minimal-depth derivation plus every alternative one-step
justification found at the fixpoint.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import RdfGraph
from .ntriples import Term, Triple, TripleSet

RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS = "http://www.w3.org/2000/01/rdf-schema#"

RDF_TYPE = Term.iri(RDF + "type")
RDFS_SUBCLASSOF = Term.iri(RDFS + "subClassOf")
RDFS_RANGE = Term.iri(RDFS + "range")
RDFS_DOMAIN = Term.iri(RDFS + "domain")

__all__ = [
    "RDF_TYPE",
    "RDFS_SUBCLASSOF",
    "RDFS_RANGE",
    "RDFS_DOMAIN",
    "SchemaKind",
    "SchemaStatement",
    "Rule",
    "DerivedTriple",
    "InferenceConfig",
    "IterationLimitExceeded",
    "extract_schema",
    "rdfs_closure",
    "derivation_dimension",
    "index_closure",
]


class SchemaKind(enum.Enum):
    SUBCLASS_OF = "SubClassOf"
    RANGE = "Range"
    DOMAIN = "Domain"
    TYPE_ASSERTION = "TypeAssertion"


_SCHEMA_PREDICATES = {
    RDFS_SUBCLASSOF: SchemaKind.SUBCLASS_OF,
    RDFS_RANGE: SchemaKind.RANGE,
    RDFS_DOMAIN: SchemaKind.DOMAIN,
    RDF_TYPE: SchemaKind.TYPE_ASSERTION,
}


@dataclass(frozen=True)
class SchemaStatement:
    kind: SchemaKind
    operands: tuple[Term, Term]

    @classmethod
    def from_triple(cls, t: Triple) -> SchemaStatement | None:
        kind = _SCHEMA_PREDICATES.get(t.predicate)
        if kind is None:
            return None
        return cls(kind, (t.subject, t.object))


class Rule(enum.Enum):
    ASSERTED = "Asserted"
    SUBCLASS_TRANSITIVITY = "SubClassTransitivity"
    TYPE_VIA_SUBCLASS = "TypeViaSubClass"
    TYPE_VIA_RANGE = "TypeViaRange"
    TYPE_VIA_DOMAIN = "TypeViaDomain"

    def __str__(self) -> str:
        return self.value


_RULE_ORDER = {r: i for i, r in enumerate(Rule)}


@dataclass(frozen=True)
class DerivedTriple:
    """A closure member.

    ``premises`` are the triples used by the recorded minimal-depth
    derivation; each one is itself a member of the same closure.
    ``alternatives`` lists every one-step justification ``(rule, premises)``
    available at the fixpoint, the recorded one included.
    """

    triple: Triple
    rule: Rule
    premises: tuple[Triple, ...] = ()
    depth: int = 0
    alternatives: tuple[tuple[Rule, tuple[Triple, ...]], ...] = ()

    @property
    def asserted(self) -> bool:
        return self.rule is Rule.ASSERTED

    def rules(self) -> frozenset:
        """Every rule that can produce this triple in one step."""
        return frozenset(r for r, _ in self.alternatives) | {self.rule}


@dataclass(frozen=True)
class InferenceConfig:
    enable_range: bool = True
    enable_domain: bool = False
    extra_schema: TripleSet | None = None
    # None means |vocab|^2 of the asserted triples
    max_iterations: int | None = None

    def __post_init__(self):
        if self.max_iterations is not None and self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")

    def extra_triples(self) -> tuple[Triple, ...]:
        return tuple(self.extra_schema) if self.extra_schema is not None else ()


class IterationLimitExceeded(RuntimeError):
    pass


def extract_schema(graphs: Iterable[RdfGraph]) -> set[SchemaStatement]:
    out = set()
    for g in graphs:
        for t in g.triples:
            st = SchemaStatement.from_triple(t)
            if st is not None:
                out.add(st)
    return out


def _consequences(facts, config: InferenceConfig) -> Iterator[tuple[Triple, Rule, tuple[Triple, ...]]]:
    subclass_of: dict[Term, list[Triple]] = {}
    by_pred: dict[Term, list[Triple]] = {}
    for t in facts:
        by_pred.setdefault(t.predicate, []).append(t)
        if t.predicate == RDFS_SUBCLASSOF:
            subclass_of.setdefault(t.subject, []).append(t)

    for t1 in by_pred.get(RDFS_SUBCLASSOF, ()):
        for t2 in subclass_of.get(t1.object, ()):
            yield Triple(t1.subject, RDFS_SUBCLASSOF, t2.object), Rule.SUBCLASS_TRANSITIVITY, (t1, t2)

    for t1 in by_pred.get(RDF_TYPE, ()):
        for t2 in subclass_of.get(t1.object, ()):
            yield Triple(t1.subject, RDF_TYPE, t2.object), Rule.TYPE_VIA_SUBCLASS, (t1, t2)

    if config.enable_range:
        for t1 in by_pred.get(RDFS_RANGE, ()):
            for t2 in by_pred.get(t1.subject, ()):
                # literal objects cannot become subjects
                if not t2.object.is_literal:
                    yield Triple(t2.object, RDF_TYPE, t1.object), Rule.TYPE_VIA_RANGE, (t1, t2)

    if config.enable_domain:
        for t1 in by_pred.get(RDFS_DOMAIN, ()):
            for t2 in by_pred.get(t1.subject, ()):
                yield Triple(t2.subject, RDF_TYPE, t1.object), Rule.TYPE_VIA_DOMAIN, (t1, t2)


def _derivation_key(rule: Rule, premises: tuple[Triple, ...]) -> tuple:
    return (_RULE_ORDER[rule], tuple(p.sort_key() for p in premises))


def rdfs_closure(graphs: Iterable[RdfGraph], config: InferenceConfig | None = None) -> frozenset:
    """Least fixpoint of the enabled rules over the graphs' triples.

    Facts are added layer by layer, so a triple first produced in layer k
    has minimal derivation depth k. Raises :class:`IterationLimitExceeded`
    if more than ``config.max_iterations`` productive layers are needed.
    """
    config = config or InferenceConfig()
    asserted: dict[Triple, None] = {}
    for g in graphs:
        for t in g.triples:
            asserted[t] = None
    for t in config.extra_triples():
        asserted[t] = None

    limit = config.max_iterations
    if limit is None:
        vocab = {x for t in asserted for x in t.terms()}
        limit = max(1, len(vocab) ** 2)

    depth = {t: 0 for t in asserted}
    layer = 0
    while True:
        new = {c for c, _, _ in _consequences(depth, config) if c not in depth}
        if not new:
            break
        layer += 1
        if layer > limit:
            raise IterationLimitExceeded(
                f"closure not reached within {limit} iterations"
            )
        for c in new:
            depth[c] = layer

    justifications: dict[Triple, set] = {}
    for c, rule, premises in _consequences(depth, config):
        justifications.setdefault(c, set()).add((rule, premises))

    out = set()
    for t, d in depth.items():
        alts = sorted(justifications.get(t, ()), key=lambda rp: _derivation_key(*rp))
        if d == 0:
            out.add(DerivedTriple(t, Rule.ASSERTED, (), 0, tuple(alts)))
            continue
        rule, premises = next(
            (r, ps) for r, ps in alts if 1 + max(depth[p] for p in ps) == d
        )
        out.add(DerivedTriple(t, rule, premises, d, tuple(alts)))
    return frozenset(out)


def derivation_dimension(dt: DerivedTriple) -> int:
    return dt.depth + 1


def index_closure(closure: Iterable[DerivedTriple]) -> dict[Triple, DerivedTriple]:
    return {dt.triple: dt for dt in closure}
