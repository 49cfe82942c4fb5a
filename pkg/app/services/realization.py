import logging
from itertools import combinations
from typing import AbstractSet, List, Optional, Set, Tuple

from app.exceptions import InternalConsistencyError, InvalidPartition, TooLarge
from app.models import (
    ClassificationMatrix,
    DegreeSequence,
    LabeledGraph,
    OracleReport,
    Pair,
    PairClass,
    RealizationSet,
    all_pairs,
)
from app.services.forced_pairs import require_graphic
from app.services.graphicality import eg_profile, is_graphic
from config import settings

logger = logging.getLogger(__name__)


def realize(d: DegreeSequence) -> LabeledGraph:
    """Havel-Hakimi construction.

    Repeatedly takes the vertex with the largest residual degree (lowest label on
    ties) and joins it to the vertices with the next largest residuals.
    """
    require_graphic(d)
    residual = {v: d.degree(v) for v in range(1, d.n + 1)}
    edges: Set[Pair] = set()
    while True:
        active = sorted((v for v in residual if residual[v] > 0), key=lambda v: (-residual[v], v))
        if not active:
            break
        v = active[0]
        need = residual.pop(v)
        partners = sorted(residual, key=lambda u: (-residual[u], u))[:need]
        if len(partners) < need or any(residual[u] <= 0 for u in partners):
            # unreachable once is_graphic has passed
            raise InternalConsistencyError(f"Havel-Hakimi reduction stalled at vertex {v} of {d.terms}")
        for u in partners:
            residual[u] -= 1
            edges.add((min(u, v), max(u, v)))
    graph = LabeledGraph(d.n, frozenset(edges))
    logger.debug(f"Realized {d.terms} with {len(edges)} edges")
    return graph


def _check_cap(d: DegreeSequence, cap: Optional[int]) -> int:
    cap = settings.ORACLE_DEFAULT_CAP if cap is None else cap
    if cap > settings.ORACLE_MAX_CAP:
        raise TooLarge(f"Enumeration cap {cap} exceeds the configured maximum {settings.ORACLE_MAX_CAP}")
    if d.n > cap:
        raise TooLarge(f"Sequence has {d.n} vertices; exhaustive enumeration is capped at {cap}")
    return cap


def enumerate_realizations(d: DegreeSequence, cap: Optional[int] = None) -> RealizationSet:
    """Every labeled graph on 1..n in which vertex i has degree d_i.

    Pairs are decided in lexicographic order, one vertex at a time: vertex i
    picks its remaining neighbors among j > i. A branch survives only while the
    residual degrees of the undecided vertices stay graphic, so no branch dead-ends.
    """
    require_graphic(d)
    _check_cap(d, cap)
    n = d.n
    found: List[LabeledGraph] = []

    def extend(vertex: int, residual: List[int], edges: List[Pair]):
        if vertex > n:
            found.append(LabeledGraph(n, frozenset(edges)))
            return
        need = residual[vertex - 1]
        later = [u for u in range(vertex + 1, n + 1) if residual[u - 1] > 0]
        for chosen in combinations(later, need):
            next_residual = list(residual)
            next_residual[vertex - 1] = 0
            for u in chosen:
                next_residual[u - 1] -= 1
            if not is_graphic(next_residual[vertex:]):
                continue
            extend(vertex + 1, next_residual, edges + [(vertex, u) for u in chosen])

    extend(1, list(d.terms), [])
    found.sort(key=lambda g: g.sorted_edges())
    logger.info(f"Enumerated {len(found)} realizations of {d.terms}")
    return RealizationSet(sequence=d, graphs=tuple(found))


def find_alternating_four_cycle(graph: LabeledGraph) -> Optional[Tuple[int, int, int, int]]:
    """Lexicographically least (a, b, c, d) with edges ab, cd and non-edges ad, bc"""
    vertices = range(1, graph.n + 1)
    for a in vertices:
        for b in vertices:
            if not graph.has_edge(a, b):
                continue
            for c in vertices:
                if c in (a, b) or graph.has_edge(b, c):
                    continue
                for d in vertices:
                    if d in (a, b, c):
                        continue
                    if graph.has_edge(c, d) and not graph.has_edge(a, d):
                        return (a, b, c, d)
    return None


def delta_by_partition_counts(
    graph: LabeledGraph,
    d: DegreeSequence,
    k: int,
    c_choice: AbstractSet[int],
) -> int:
    """Delta_k counted on a realization: 2e(A) + 2e'(B) + e(A,C) + e'(B,C).

    B = {1..k}; C is given; A is the rest. e' counts non-adjacent pairs.
    """
    n = d.n
    if graph.degrees() != d.terms:
        raise InvalidPartition(f"Graph degrees {graph.degrees()} do not realize {d.terms}")
    if not 0 <= k <= n:
        raise InvalidPartition(f"k={k} is outside 0..{n}")
    rest = set(range(k + 1, n + 1))
    c_set = set(c_choice)
    if not c_set <= rest:
        raise InvalidPartition(f"C must lie in {{{k + 1}..{n}}}, got {sorted(c_set)}")
    a_set = rest - c_set
    if any(d.degree(v) < k for v in c_set):
        raise InvalidPartition(f"Every vertex of C needs degree at least {k}")
    if any(d.degree(v) > k for v in a_set):
        raise InvalidPartition(f"Every vertex of A needs degree at most {k}")
    b_set = set(range(1, k + 1))

    edges_in_a = sum(1 for u, v in combinations(sorted(a_set), 2) if graph.has_edge(u, v))
    non_edges_in_b = sum(1 for u, v in combinations(sorted(b_set), 2) if not graph.has_edge(u, v))
    edges_a_c = sum(1 for u in a_set for v in c_set if graph.has_edge(u, v))
    non_edges_b_c = sum(1 for u in b_set for v in c_set if not graph.has_edge(u, v))
    return 2 * edges_in_a + 2 * non_edges_in_b + edges_a_c + non_edges_b_c


def forced_pairs_oracle(d: DegreeSequence, cap: Optional[int] = None) -> OracleReport:
    """Classify pairs by brute force: an edge in every / no enumerated realization"""
    realizations = enumerate_realizations(d, cap)
    n = d.n
    pairs = list(all_pairs(n))
    intersection = set(pairs)
    union: Set[Pair] = set()
    for graph in realizations.graphs:
        intersection &= graph.edges
        union |= graph.edges

    entries = {}
    for pair in pairs:
        if pair in intersection:
            entries[pair] = PairClass.FORCED_EDGE
        elif pair not in union:
            entries[pair] = PairClass.FORCED_NON_EDGE
        else:
            entries[pair] = PairClass.UNFORCED

    return OracleReport(
        matrix=ClassificationMatrix(n=n, entries=entries),
        intersection=LabeledGraph(n, frozenset(intersection)),
        union=LabeledGraph(n, frozenset(union)),
        realization_count=len(realizations),
    )


def partition_count_mismatches(graph: LabeledGraph, d: DegreeSequence) -> List[Tuple[int, Tuple[int, ...]]]:
    """(k, C) choices where edge counting disagrees with the Erdos-Gallai table.

    Vertices of degree exactly k may sit in A or C; every such choice is tried.
    """
    delta = eg_profile(d).delta
    mismatches = []
    for k in range(d.n + 1):
        forced_c = [v for v in range(k + 1, d.n + 1) if d.degree(v) > k]
        either = [v for v in range(k + 1, d.n + 1) if d.degree(v) == k]
        for size in range(len(either) + 1):
            for extra in combinations(either, size):
                c_choice = frozenset(forced_c) | frozenset(extra)
                if delta_by_partition_counts(graph, d, k, c_choice) != delta[k]:
                    mismatches.append((k, tuple(sorted(c_choice))))
    return mismatches
