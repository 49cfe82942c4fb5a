from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from app.exceptions import NotSorted, SequenceTooLong, TermOutOfRange
from config import settings

# Pre-validation form: perturbed sequences, raw CLI input. May be unsorted or negative.
IntList = Tuple[int, ...]
Pair = Tuple[int, int]


@dataclass(frozen=True)
class DegreeSequence:
    """Nonincreasing degrees bound to vertex labels 1..n (vertex i has degree terms[i-1])"""

    terms: IntList

    def __post_init__(self):
        terms = tuple(int(t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        n = len(terms)
        if n > settings.MAX_SEQUENCE_LENGTH:
            raise SequenceTooLong(
                f"Sequence has {n} terms; the limit is {settings.MAX_SEQUENCE_LENGTH}"
            )
        for position, term in enumerate(terms, start=1):
            if term < 0 or term > n - 1:
                raise TermOutOfRange(
                    f"Term {term} at position {position} is outside [0, {max(n - 1, 0)}]"
                )
        for position in range(1, n):
            if terms[position - 1] < terms[position]:
                raise NotSorted(
                    f"Terms must be nonincreasing: position {position} has {terms[position - 1]}, "
                    f"position {position + 1} has {terms[position]}"
                )

    @property
    def n(self) -> int:
        return len(self.terms)

    def degree(self, vertex: int) -> int:
        """Degree of a 1-based vertex label"""
        return self.terms[vertex - 1]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)


SequenceLike = Union[DegreeSequence, Sequence[int]]


def as_terms(raw: SequenceLike) -> IntList:
    """Plain integer tuple from a DegreeSequence or any integer sequence"""
    if isinstance(raw, DegreeSequence):
        return raw.terms
    return tuple(int(t) for t in raw)


def validate_sequence(raw: SequenceLike) -> DegreeSequence:
    """Validate a raw integer list as a labeled degree sequence.

    Unsorted input is rejected rather than sorted, since labels bind to positions.
    """
    if isinstance(raw, DegreeSequence):
        return raw
    return DegreeSequence(as_terms(raw))


def validate_partition(raw: SequenceLike) -> IntList:
    """Validate membership in the dominance poset: nonincreasing and nonnegative"""
    terms = as_terms(raw)
    if len(terms) > settings.MAX_SEQUENCE_LENGTH:
        raise SequenceTooLong(f"Sequence has {len(terms)} terms; the limit is {settings.MAX_SEQUENCE_LENGTH}")
    for position, term in enumerate(terms, start=1):
        if term < 0:
            raise TermOutOfRange(f"Term {term} at position {position} is negative")
    for position in range(1, len(terms)):
        if terms[position - 1] < terms[position]:
            raise NotSorted(
                f"Terms must be nonincreasing: position {position} has {terms[position - 1]}, "
                f"position {position + 1} has {terms[position]}"
            )
    return terms


@dataclass(frozen=True)
class EGProfile:
    """Erdos-Gallai sides and differences for k = 0..n"""

    lhs: IntList
    rhs: IntList
    delta: IntList
    m: int
    eg_zeros: IntList


class PairClass(str, Enum):
    FORCED_EDGE = "forced_edge"
    FORCED_NON_EDGE = "forced_non_edge"
    UNFORCED = "unforced"

    @property
    def symbol(self) -> str:
        return {"forced_edge": "E", "forced_non_edge": "N", "unforced": "."}[self.value]

    @property
    def is_forced(self) -> bool:
        return self is not PairClass.UNFORCED


class PairMethod(str, Enum):
    DELTA = "delta"
    GRAPHIC = "graphic"
    ORACLE = "oracle"


def all_pairs(n: int) -> Iterator[Pair]:
    """Unordered pairs {i, j}, 1 <= i < j <= n, in lexicographic order"""
    return combinations(range(1, n + 1), 2)


@dataclass(frozen=True)
class ClassificationMatrix:
    n: int
    entries: Dict[Pair, PairClass] = field(hash=False)

    def get(self, i: int, j: int) -> PairClass:
        if i > j:
            i, j = j, i
        return self.entries[(i, j)]

    def pairs_with(self, status: PairClass) -> List[Pair]:
        return [pair for pair in all_pairs(self.n) if self.entries[pair] is status]

    def forced_count(self) -> int:
        return sum(1 for status in self.entries.values() if status.is_forced)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class LabeledGraph:
    """Simple graph on vertex set 1..n; edges stored as (i, j) with i < j"""

    n: int
    edges: FrozenSet[Pair] = frozenset()

    def __post_init__(self):
        normalized = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError(f"Loop at vertex {a} is not allowed")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"Edge {{{a},{b}}} leaves the vertex set 1..{self.n}")
            normalized.add((min(a, b), max(a, b)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Pair]) -> "LabeledGraph":
        return cls(n, frozenset(tuple(edge) for edge in edges))

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def neighbors(self, vertex: int) -> FrozenSet[int]:
        return frozenset(b if a == vertex else a for a, b in self.edges if vertex in (a, b))

    def sorted_edges(self) -> List[Pair]:
        return sorted(self.edges)

    def degrees(self) -> IntList:
        """Degree of each vertex in label order"""
        counts = [0] * self.n
        for a, b in self.edges:
            counts[a - 1] += 1
            counts[b - 1] += 1
        return tuple(counts)

    def degree_sequence(self) -> IntList:
        """Degrees sorted nonincreasing (isomorphism invariant)"""
        return tuple(sorted(self.degrees(), reverse=True))

    def complement(self) -> "LabeledGraph":
        return LabeledGraph(self.n, frozenset(p for p in all_pairs(self.n) if p not in self.edges))

    def with_swap(self, a: int, b: int, c: int, d: int) -> "LabeledGraph":
        """Switch an alternating 4-cycle: delete ab, cd; add ad, bc"""
        edges = set(self.edges)
        edges -= {(min(a, b), max(a, b)), (min(c, d), max(c, d))}
        edges |= {(min(a, d), max(a, d)), (min(b, c), max(b, c))}
        return LabeledGraph(self.n, frozenset(edges))

    def to_networkx(self):
        import networkx as nx

        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.sorted_edges())
        return graph


class CreationStep(str, Enum):
    ISOLATED = "I"
    DOMINATING = "D"


@dataclass(frozen=True)
class CreationSequence:
    """Isolated/dominating build recipe, applied left to right"""

    steps: Tuple[CreationStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[CreationStep]:
        return iter(self.steps)


@dataclass(frozen=True)
class SkeletonBlock:
    """One outer canonical component: clique B_j and independent set A_j"""

    clique: FrozenSet[int]
    independent: FrozenSet[int]

    @property
    def vertices(self) -> FrozenSet[int]:
        return self.clique | self.independent


@dataclass(frozen=True)
class SkeletonTail:
    """The final component G_0.

    When the sequence is split every vertex belongs to a block and the tail is
    empty. Otherwise the primed sets follow the envelope construction.
    """

    vertices: FrozenSet[int]
    split: bool
    p: int
    q: int
    a_prime: Optional[FrozenSet[int]] = None
    b_prime: Optional[FrozenSet[int]] = None
    a_double_prime: Optional[FrozenSet[int]] = None
    b_double_prime: Optional[FrozenSet[int]] = None


@dataclass(frozen=True)
class CanonicalSkeleton:
    blocks: Tuple[SkeletonBlock, ...]
    tail: SkeletonTail

    @property
    def component_count(self) -> int:
        return len(self.blocks) + (1 if self.tail.vertices else 0)


@dataclass(frozen=True)
class RealizationSet:
    sequence: DegreeSequence
    graphs: Tuple[LabeledGraph, ...]

    def __len__(self) -> int:
        return len(self.graphs)


@dataclass(frozen=True)
class OracleReport:
    """Forced-pair verdicts read off an exhaustive enumeration"""

    matrix: ClassificationMatrix
    intersection: LabeledGraph
    union: LabeledGraph
    realization_count: int


@dataclass(frozen=True)
class TransformStep:
    """Unit transformation: position p increased, position q decreased (1-based, p < q)"""

    p: int
    q: int


@dataclass(frozen=True)
class LiftResult:
    source: IntList
    target: DegreeSequence
    steps: Tuple[TransformStep, ...]

    @property
    def step_count(self) -> int:
        return len(self.steps)
