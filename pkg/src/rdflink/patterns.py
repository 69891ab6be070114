"""URISequence encoding, the sequence storage, and adaptive pattern mining.

The miner scans every candidate window length between two adaptive bounds
and keeps the most repetitive window content, preferring long rare
patterns: candidates are ranked by the exact ratio count/length and ties
go to the larger length. The winning length seeds the lower bound of the
next session.

Window tallying is the hot loop; a compiled kernel is used when built,
with a pure-Python fallback selected at import time.
"""

from __future__ import annotations

import json
import struct
from dataclasses import dataclass
from fractions import Fraction

from .graphmodel import SymbolTable
from .ntriples import Graph, Term, TermKind, canonical_triples

try:
    from . import _window_cy as _kernel
except ImportError:  # extension not built
    from . import _window_py as _kernel

__all__ = [
    "RelationalSequence",
    "Pattern",
    "PatternSet",
    "SessionState",
    "SequenceStore",
    "SessionResult",
    "BlankNodePresentError",
    "NoWindowError",
    "EmptyRangeError",
    "EmptySequenceError",
    "StoreCorruptError",
    "mining_backend",
    "urisequence",
    "gen_relative_repetitive_seq",
    "gen_relational_pattern",
    "run_session",
    "save_store",
    "load_store",
]

_WIDTH = 8  # bytes per packed symbol


def mining_backend() -> str:
    """Name of the active window-tally kernel ("cython" or "python")."""
    return _kernel.BACKEND


class BlankNodePresentError(ValueError):
    pass


class NoWindowError(ValueError):
    pass


class EmptyRangeError(ValueError):
    pass


class EmptySequenceError(ValueError):
    pass


class StoreCorruptError(ValueError):
    pass


def _encode(symbols) -> bytes:
    # Big-endian packing: byte order of a packed window equals the
    # lexicographic order of its non-negative symbol tuple.
    return struct.pack(f">{len(symbols)}q", *symbols)


def _decode(data: bytes) -> tuple:
    return struct.unpack(f">{len(data) // _WIDTH}q", data)


def urisequence(g: Graph, table: SymbolTable) -> tuple:
    """Flatten a graph into its symbol sequence: triples in canonical
    document order, each contributing (subject, predicate, object).

    The graph must be blank-node free (skolemize first): blank labels are
    document-scoped and would alias across stored sequences.
    """
    for t in g:
        if t.subject.kind is TermKind.BLANK or t.object.kind is TermKind.BLANK:
            raise BlankNodePresentError("reify blank nodes before sequencing")
    symbols = []
    for t in canonical_triples(g):
        symbols.append(table.intern(t.subject))
        symbols.append(table.intern(t.predicate))
        symbols.append(table.intern(t.object))
    return tuple(symbols)


@dataclass(frozen=True, slots=True)
class RelationalSequence:
    symbols: tuple
    session: int
    source: str


@dataclass(frozen=True, slots=True)
class Pattern:
    """A repeated window: `count` occurrences across the whole storage."""

    symbols: tuple
    count: int

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValueError("pattern count must be >= 1")
        if not self.symbols:
            raise ValueError("pattern cannot be empty")

    @property
    def occurrence_ratio(self) -> Fraction:
        return Fraction(self.count, len(self.symbols))


@dataclass(frozen=True, slots=True)
class PatternSet:
    """All window contents that tie for the winning (length, count)."""

    patterns: tuple  # tuple[Pattern, ...] sorted by symbols

    def __post_init__(self) -> None:
        if not self.patterns:
            raise ValueError("pattern set cannot be empty")
        lengths = {len(p.symbols) for p in self.patterns}
        counts = {p.count for p in self.patterns}
        if len(lengths) != 1 or len(counts) != 1:
            raise ValueError("pattern set members must share length and count")

    @property
    def representative(self) -> Pattern:
        return self.patterns[0]


@dataclass(frozen=True, slots=True)
class SessionState:
    """Adaptive bounds and the last session's outcome.

    `lam` is the exact occurrence ratio of the last pattern, kept as the
    integer pair (count, length).
    """

    k1: int
    k2: int
    lam: tuple | None = None  # (r, x)
    last_pattern_length: int | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.k1 <= self.k2:
            raise ValueError(f"bounds must satisfy 1 <= K1 <= K2, got ({self.k1}, {self.k2})")
        if self.lam is not None and self.lam[1] != self.last_pattern_length:
            raise ValueError("lambda denominator must equal the last pattern length")


@dataclass
class SequenceStore:
    """Multi-session storage: one sequence per session plus the pattern
    each completed session produced. Owns the symbol table the sequences
    are encoded against."""

    table: SymbolTable
    sequences: list
    patterns: list

    @classmethod
    def empty(cls) -> "SequenceStore":
        return cls(SymbolTable(), [], [])


def _best_at_length(encoded: list, x: int):
    result = _kernel.best_windows(encoded, x, _WIDTH)
    if result is None:
        return None
    count, winners = result
    return count, [_decode(w) for w in winners]


def gen_relative_repetitive_seq(store: SequenceStore, x: int):
    """Most repetitive length-x window over all stored sequences.

    Occurrences overlap and aggregate across sequences. Returns the
    winning Pattern (ties broken by smallest symbol sequence) and the
    full tie set.
    """
    if x < 1:
        raise ValueError("window length must be >= 1")
    encoded = [_encode(s.symbols) for s in store.sequences]
    found = _best_at_length(encoded, x)
    if found is None:
        raise NoWindowError(f"no stored sequence has length >= {x}")
    count, winners = found
    patterns = tuple(Pattern(w, count) for w in winners)
    return patterns[0], PatternSet(patterns)


def gen_relational_pattern(store: SequenceStore, state: SessionState):
    """Scan window lengths K1..K2 and keep the content minimizing
    count/length, ties to the larger length; the winning length becomes
    the next lower bound."""
    if not store.sequences:
        raise EmptyRangeError("store holds no sequences")
    encoded = [_encode(s.symbols) for s in store.sequences]
    best = None  # (lam, x, count, winners)
    for x in range(state.k1, state.k2 + 1):
        found = _best_at_length(encoded, x)
        if found is None:
            break  # no sequence reaches this length; longer x cannot either
        count, winners = found
        lam = Fraction(count, x)
        if best is None or lam <= best[0]:
            best = (lam, x, count, winners)
    if best is None:
        raise EmptyRangeError(f"no window length in [{state.k1}, {state.k2}] fits any sequence")
    _, x_star, count, winners = best
    pattern_set = PatternSet(tuple(Pattern(w, count) for w in winners))
    new_state = SessionState(
        k1=x_star,
        k2=state.k2,
        lam=(count, x_star),
        last_pattern_length=x_star,
    )
    return pattern_set, new_state


@dataclass(frozen=True, slots=True)
class SessionResult:
    store: SequenceStore
    state: SessionState
    patterns: PatternSet
    bounds: tuple  # (K1, K2) the session actually mined with


def run_session(
    store: SequenceStore,
    state: SessionState | None,
    g: Graph,
    *,
    source: str = "",
) -> SessionResult:
    """Append the graph's sequence as the next session, mine, and record
    the winning pattern.

    The first session mines with K1 = 1; later sessions carry the
    previous pattern length forward, clamped to the new sequence length.
    """
    symbols = urisequence(g, store.table)
    if not symbols:
        raise EmptySequenceError("session graph is empty")
    t = len(store.sequences)
    k2 = len(symbols)
    if t == 0:
        k1 = 1
    else:
        previous = state.last_pattern_length if state is not None else len(store.patterns[-1].symbols)
        k1 = max(1, min(previous, k2))
    store.sequences.append(RelationalSequence(symbols, t, source))
    pattern_set, new_state = gen_relational_pattern(store, SessionState(k1=k1, k2=k2))
    store.patterns.append(pattern_set.representative)
    return SessionResult(store, new_state, pattern_set, (k1, k2))


_TERM_KINDS = {kind.value: kind for kind in TermKind}


def _term_record(term: Term) -> dict:
    return {
        "kind": term.kind.value,
        "lexical": term.lexical,
        "language": term.language,
        "datatype": term.datatype,
    }


def save_store(store: SequenceStore, state: SessionState, path: str) -> None:
    if state.lam is None:
        raise ValueError("cannot persist a store before any session completed")
    payload = {
        "symbols": [_term_record(t) for t in store.table.terms()],
        "sequences": [
            {"t": s.session, "source": s.source, "symbols": list(s.symbols)}
            for s in store.sequences
        ],
        "patterns": [
            {"t": t, "symbols": list(p.symbols), "r": p.count, "x": len(p.symbols)}
            for t, p in enumerate(store.patterns)
        ],
        "state": {"K1": state.k1, "K2": state.k2, "r": state.lam[0], "x": state.lam[1]},
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def _corrupt(condition: bool, message: str) -> None:
    if condition:
        raise StoreCorruptError(message)


def load_store(path: str):
    """Load a persisted store, validating every structural invariant.

    Returns (SequenceStore, SessionState); any violation raises
    StoreCorruptError.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as e:
        raise StoreCorruptError(f"store is not valid JSON: {e}") from e

    _corrupt(not isinstance(data, dict), "store must be a JSON object")
    _corrupt(
        set(data) != {"symbols", "sequences", "patterns", "state"},
        "store must have exactly the keys symbols/sequences/patterns/state",
    )

    table = SymbolTable()
    for record in data["symbols"]:
        try:
            kind = _TERM_KINDS[record["kind"]]
            term = Term(kind, record["lexical"], record.get("language"), record.get("datatype"))
        except (KeyError, TypeError, ValueError) as e:
            raise StoreCorruptError(f"invalid term record: {e}") from e
        _corrupt(table.intern(term) != len(table) - 1, f"duplicate term record: {record}")

    sequences = []
    for index, record in enumerate(data["sequences"]):
        _corrupt(record.get("t") != index, f"sequence sessions must be contiguous from 0, got {record.get('t')}")
        symbols = record.get("symbols")
        _corrupt(not isinstance(symbols, list) or not symbols, "sequence symbols must be a non-empty list")
        _corrupt(
            any(not isinstance(s, int) or not 0 <= s < len(table) for s in symbols),
            "sequence symbol outside the symbol table",
        )
        sequences.append(RelationalSequence(tuple(symbols), index, str(record.get("source", ""))))
    _corrupt(not sequences, "store holds no sequences")

    patterns = []
    _corrupt(len(data["patterns"]) != len(sequences), "one pattern per completed session required")
    for index, record in enumerate(data["patterns"]):
        _corrupt(record.get("t") != index, "pattern sessions must be contiguous from 0")
        symbols = record.get("symbols")
        _corrupt(not isinstance(symbols, list) or not symbols, "pattern symbols must be a non-empty list")
        _corrupt(record.get("x") != len(symbols), "pattern length field must match its symbols")
        r = record.get("r")
        _corrupt(not isinstance(r, int) or r < 1, "pattern count must be a positive integer")
        _corrupt(
            any(not isinstance(s, int) or not 0 <= s < len(table) for s in symbols),
            "pattern symbol outside the symbol table",
        )
        patterns.append(Pattern(tuple(symbols), r))

    raw_state = data["state"]
    _corrupt(not isinstance(raw_state, dict), "state must be an object")
    _corrupt(set(raw_state) != {"K1", "K2", "r", "x"}, "state must have exactly the keys K1/K2/r/x")
    _corrupt(
        any(not isinstance(raw_state[k], int) or raw_state[k] < 1 for k in ("K1", "K2", "r", "x")),
        "state fields must be positive integers",
    )
    _corrupt(raw_state["K1"] > raw_state["K2"], "state requires K1 <= K2")
    _corrupt(raw_state["x"] != len(patterns[-1].symbols), "state pattern length must match the last pattern")
    _corrupt(raw_state["r"] != patterns[-1].count, "state count must match the last pattern")
    _corrupt(raw_state["K1"] != raw_state["x"], "persisted K1 must equal the last pattern length")
    _corrupt(raw_state["K2"] != len(sequences[-1].symbols), "persisted K2 must equal the last sequence length")

    state = SessionState(
        k1=raw_state["K1"],
        k2=raw_state["K2"],
        lam=(raw_state["r"], raw_state["x"]),
        last_pattern_length=raw_state["x"],
    )
    return SequenceStore(table, sequences, patterns), state
