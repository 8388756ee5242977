"""Set-theoretic relationship analysis for RDF graphs read from N-Triples."""

from .graph import (
    IntersectionProfile,
    LabeledMultigraph,
    RdfGraph,
    build_graph,
    graph_from_triples,
    intersection_profile,
    load_graph,
    to_multigraph,
)
from .network import (
    DuplicateGraphId,
    RelationEdge,
    RelationNetwork,
    build_network,
    export_dot,
    export_json,
    export_tsv,
)
from .ntriples import ParseError, Term, TermKind, Triple, TripleSet, parse_document, parse_term, serialize
from .relationship import (
    Classification,
    ClassificationMode,
    CyclicBlankNodeError,
    ReifiedView,
    RelationshipKind,
    classify_pair,
    classify_profile,
    classify_with_blank_nodes,
    mirror_kind,
    reify_blank_nodes,
)
from .schema import (
    DerivedTriple,
    InferenceConfig,
    IterationLimitExceeded,
    Rule,
    SchemaKind,
    SchemaStatement,
    derivation_dimension,
    extract_schema,
    rdfs_closure,
)

__version__ = "0.1.0"
