"""Belief machinery over term frames and the graph-match decision.

Subsets of a frame are bitmasks over element indices; mass functions map
focal masks to positive masses summing to one. Combination follows the
standard conjunctive rule with conflict renormalization. Accumulations
use math.fsum, so results do not depend on focal iteration order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .graphmodel import SymbolTable
from .ntriples import Graph, canonical_triples
from .patterns import urisequence
from .relate import (
    RelationKind,
    RelationReport,
    ScoringConfig,
    classify_pair,
    component_sets,
    relation_score,
)

__all__ = [
    "MAX_FRAME_SIZE",
    "Frame",
    "MassFunction",
    "EvidenceItem",
    "MatchResult",
    "FrameTooLargeError",
    "SubsetOutOfFrameError",
    "NotABeliefError",
    "TotalConflictError",
    "belief_from_mass",
    "belief_table",
    "mass_from_belief",
    "dempster_combine",
    "match_graphs",
]

MAX_FRAME_SIZE = 30

_MASS_SUM_TOL = 1e-9
_MASS_DROP_TOL = 1e-12
_CONFLICT_TOL = 1e-12


class FrameTooLargeError(ValueError):
    pass


class SubsetOutOfFrameError(ValueError):
    pass


class NotABeliefError(ValueError):
    pass


class TotalConflictError(ArithmeticError):
    pass


class Frame:
    """Ordered universe of distinct symbols; subsets are index bitmasks."""

    __slots__ = ("elements", "_index")

    def __init__(self, elements: Iterable[int]):
        self.elements = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("frame elements must be distinct")
        if len(self.elements) > MAX_FRAME_SIZE:
            raise FrameTooLargeError(
                f"frame of {len(self.elements)} elements exceeds the cap of {MAX_FRAME_SIZE}"
            )
        self._index = {symbol: i for i, symbol in enumerate(self.elements)}

    def __eq__(self, other) -> bool:
        return isinstance(other, Frame) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def full(self) -> int:
        return (1 << len(self.elements)) - 1

    def subset(self, symbols: Iterable[int]) -> int:
        mask = 0
        for symbol in symbols:
            i = self._index.get(symbol)
            if i is None:
                raise SubsetOutOfFrameError(f"symbol {symbol} not in frame")
            mask |= 1 << i
        return mask

    def symbols(self, mask: int) -> tuple:
        self._check(mask)
        return tuple(s for i, s in enumerate(self.elements) if mask >> i & 1)

    def _check(self, mask: int) -> None:
        if mask < 0 or mask & ~self.full:
            raise SubsetOutOfFrameError(f"mask {mask:#x} is not a subset of the frame")


@dataclass(frozen=True)
class MassFunction:
    """Basic belief assignment: focal masks to masses, all positive,
    summing to one, never on the empty set."""

    frame: Frame
    focal: dict  # mask -> mass

    def __post_init__(self) -> None:
        total = []
        for mask, mass in self.focal.items():
            self.frame._check(mask)
            if mask == 0:
                raise ValueError("empty set cannot be focal")
            if mass <= 0:
                raise ValueError(f"focal masses must be positive, got {mass}")
            total.append(mass)
        if abs(math.fsum(total) - 1.0) > _MASS_SUM_TOL:
            raise ValueError(f"masses must sum to 1, got {math.fsum(total)}")

    @classmethod
    def from_focals(cls, frame: Frame, items: Mapping) -> "MassFunction":
        kept = {mask: mass for mask, mass in items.items() if mass > _MASS_DROP_TOL}
        return cls(frame, kept)

    @classmethod
    def vacuous(cls, frame: Frame) -> "MassFunction":
        return cls(frame, {frame.full: 1.0})


def belief_from_mass(m: MassFunction, subset: int) -> float:
    """Total mass committed to subsets of `subset`."""
    m.frame._check(subset)
    outside = m.frame.full ^ subset
    return math.fsum(mass for mask, mass in m.focal.items() if not mask & outside)


def belief_table(m: MassFunction) -> list:
    """Belief of every subset, indexed by mask (zeta transform)."""
    n = len(m.frame)
    table = [0.0] * (1 << n)
    for mask, mass in m.focal.items():
        table[mask] = mass
    for i in range(n):
        bit = 1 << i
        for mask in range(1 << n):
            if mask & bit:
                table[mask] += table[mask ^ bit]
    return table


def mass_from_belief(frame: Frame, bel) -> MassFunction:
    """Recover the mass function from a full belief table (Möbius inversion).

    `bel` maps every mask of the frame to its belief, as a sequence
    indexed by mask or an equivalent mapping. Raises NotABeliefError when
    the table is not a belief function.
    """
    n = len(frame)
    size = 1 << n
    if isinstance(bel, Mapping):
        if len(bel) != size:
            raise ValueError(f"belief table must cover all {size} subsets")
        table = [float(bel[mask]) for mask in range(size)]
    else:
        table = [float(v) for v in bel]
        if len(table) != size:
            raise ValueError(f"belief table must cover all {size} subsets")
    if abs(table[0]) > _MASS_SUM_TOL:
        raise NotABeliefError("belief of the empty set must be 0")
    if abs(table[size - 1] - 1.0) > _MASS_SUM_TOL:
        raise NotABeliefError("belief of the full frame must be 1")
    for i in range(n):
        bit = 1 << i
        for mask in range(size):
            if mask & bit:
                table[mask] -= table[mask ^ bit]
    focal = {}
    for mask in range(1, size):
        value = table[mask]
        if value < -_MASS_SUM_TOL:
            raise NotABeliefError(f"reconstructed mass of {mask:#x} is negative: {value}")
        if value > _MASS_DROP_TOL:
            focal[mask] = value
    return MassFunction(frame, focal)


def dempster_combine(m1: MassFunction, m2: MassFunction):
    """Conjunctive combination with conflict renormalization.

    Returns (combined, K) where K is the mass of conflicting focal pairs;
    raises TotalConflictError when 1 - K vanishes.
    """
    if m1.frame != m2.frame:
        raise ValueError("mass functions must share a frame")
    conflict = []
    buckets: dict = {}
    for x, mx in m1.focal.items():
        for y, my in m2.focal.items():
            z = x & y
            product = mx * my
            if z == 0:
                conflict.append(product)
            else:
                buckets.setdefault(z, []).append(product)
    k = math.fsum(conflict)
    if 1.0 - k <= _CONFLICT_TOL:
        raise TotalConflictError(f"total conflict: K = {k}")
    scale = 1.0 - k
    combined = {mask: math.fsum(products) / scale for mask, products in buckets.items()}
    return MassFunction.from_focals(m1.frame, combined), k


@dataclass(frozen=True, slots=True)
class EvidenceItem:
    """One scored relation folded into the match: mass `score` on the
    witness union, remainder on the whole frame."""

    kind: RelationKind
    focal_symbols: tuple
    score: float


@dataclass(frozen=True, slots=True)
class MatchResult:
    belief: float
    target_symbols: tuple
    threshold: float
    established: bool
    conflict: float
    evidence: tuple  # tuple[EvidenceItem, ...]


def _evidence_items(g1: Graph, g2: Graph, table: SymbolTable, scoring: ScoringConfig):
    """Distinct (kind, focal set) evidence from the whole-graph relation and
    every cross-graph triple pair. Duplicates collapse: a repeated
    observation of the same overlap is one body of evidence."""
    reports: list[RelationReport] = [
        classify_pair(component_sets(g1, table), component_sets(g2, table), g1, g2)
    ]
    for t1 in canonical_triples(g1):
        left = frozenset([t1])
        for t2 in canonical_triples(g2):
            right = frozenset([t2])
            report = classify_pair(
                component_sets(left, table), component_sets(right, table), left, right
            )
            if report.kind is not RelationKind.DISJOINT:
                reports.append(report)

    items: dict = {}
    for report in reports:
        focal = frozenset().union(*(w.symbols for w in report.witnesses)) if report.witnesses else frozenset()
        score = relation_score(report.kind, scoring)
        if not focal or score == 0.0:
            continue
        key = (report.kind, focal)
        if key not in items:
            items[key] = EvidenceItem(report.kind, tuple(sorted(focal)), score)
    return list(items.values())


def match_graphs(
    g1: Graph,
    g2: Graph,
    table: SymbolTable,
    scoring: ScoringConfig | None = None,
    threshold: float = 0.5,
) -> MatchResult:
    """Decide whether the second graph's term sequence is believed to occur
    within the first's, by combining one simple-support mass function per
    detected relation and reading the belief of the second graph's symbols.
    """
    if not 0.0 < threshold <= 1.0:
        raise ValueError("threshold must be in (0, 1]")
    if scoring is None:
        scoring = ScoringConfig()

    seq1 = urisequence(g1, table)
    seq2 = urisequence(g2, table)
    elements = list(dict.fromkeys(seq1 + seq2))
    if not elements:
        # Both graphs empty: nothing to believe in.
        return MatchResult(0.0, (), threshold, False, 0.0, ())
    frame = Frame(elements)
    target = frame.subset(set(seq2))

    items = _evidence_items(g1, g2, table, scoring)
    items.sort(key=lambda item: (item.kind.value, item.focal_symbols))

    combined = MassFunction.vacuous(frame)
    surviving = 1.0
    first = True
    for item in items:
        focal_mask = frame.subset(item.focal_symbols)
        masses = {focal_mask: item.score}
        if item.score < 1.0:
            masses[frame.full] = 1.0 - item.score
        m = MassFunction(frame, masses)
        if first:
            combined, first = m, False
        else:
            combined, k = dempster_combine(combined, m)
            surviving *= 1.0 - k

    belief = belief_from_mass(combined, target)
    return MatchResult(
        belief=belief,
        target_symbols=frame.symbols(target),
        threshold=threshold,
        established=belief >= threshold,
        conflict=1.0 - surviving,
        evidence=tuple(items),
    )
