"""N-Triples parsing, graph relationship classification, adaptive pattern
mining over sequence storages, and belief-based S-P-O matching."""

from .ntriples import (
    Graph,
    ParseError,
    ParseFailure,
    Term,
    TermKind,
    Triple,
    bnode,
    iri,
    literal,
    parse_document,
    scan_document,
    serialize,
)
from .graphmodel import SymbolTable, project_multigraph, reify_blank_nodes
from .relate import RelationKind, ScoringConfig, classify_pair, component_sets, relate_all
from .patterns import (
    SequenceStore,
    SessionState,
    gen_relational_pattern,
    gen_relative_repetitive_seq,
    mining_backend,
    run_session,
    urisequence,
)
from .belief import MassFunction, belief_from_mass, dempster_combine, mass_from_belief, match_graphs

__version__ = "0.1.0"
