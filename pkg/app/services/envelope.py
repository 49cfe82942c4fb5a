"""Sequence-level structure: EG zeros, split and threshold recognition,
the canonical skeleton, and the intersection/union envelope graphs.

The envelope graphs are threshold graphs. Each is returned twice over: as a
LabeledGraph on the original labels (read off the forced pairs) and as the
creation sequence read from the composition formula over the skeleton.
"""

import logging
from typing import List, Optional, Tuple

from app.exceptions import EmptyCreation, InternalConsistencyError
from app.models import (
    CanonicalSkeleton,
    ClassificationMatrix,
    CreationSequence,
    CreationStep,
    DegreeSequence,
    LabeledGraph,
    PairClass,
    PairMethod,
    SkeletonBlock,
    SequenceLike,
    SkeletonTail,
    all_pairs,
    validate_sequence,
)
from app.services.forced_pairs import classification_matrix, require_graphic
from app.services.graphicality import eg_profile
from config import settings

logger = logging.getLogger(__name__)

Factor = Tuple[CreationStep, int]


def is_split_sequence(d: DegreeSequence) -> bool:
    require_graphic(d)
    profile = eg_profile(d)
    return profile.delta[profile.m] == 0


def is_threshold_sequence(d: DegreeSequence) -> bool:
    """Delta_k = 0 for every k in 1..m"""
    require_graphic(d)
    profile = eg_profile(d)
    return all(profile.delta[k] == 0 for k in range(1, profile.m + 1))


def eg_zero_list(d: DegreeSequence) -> List[int]:
    require_graphic(d)
    return list(eg_profile(d).eg_zeros)


def has_nontrivial_eg_zero(d: SequenceLike) -> bool:
    """Split or canonically decomposable: some k >= 1 with Delta_k = 0 (d must be graphic)"""
    return len(eg_zero_list(validate_sequence(d))) > 1


def canonical_skeleton(d: DegreeSequence) -> CanonicalSkeleton:
    require_graphic(d)
    profile = eg_profile(d)
    terms = d.terms
    n = d.n
    zeros = profile.eg_zeros
    p = zeros[-1]
    q = max(k for k, diff in enumerate(profile.delta) if diff <= 1)

    blocks: List[SkeletonBlock] = []
    assigned = set()
    for index, t in enumerate(zeros):
        # single independent vertices attached below the cliques {1..t}
        for vertex in range(p + 1, n + 1):
            if terms[vertex - 1] == t and vertex not in assigned:
                blocks.append(SkeletonBlock(clique=frozenset(), independent=frozenset({vertex})))
                assigned.add(vertex)
        if index + 1 < len(zeros):
            t_next = zeros[index + 1]
            clique = frozenset(range(t + 1, t_next + 1))
            independent = frozenset(v for v in range(1, n + 1) if t < terms[v - 1] < t_next)
            if (clique | independent) & assigned or clique & independent:
                raise InternalConsistencyError(f"Skeleton blocks of {terms} overlap at zeros {t}, {t_next}")
            blocks.append(SkeletonBlock(clique=clique, independent=independent))
            assigned |= clique | independent

    tail_vertices = frozenset(range(1, n + 1)) - assigned
    split = profile.delta[profile.m] == 0
    if split:
        tail = SkeletonTail(vertices=tail_vertices, split=True, p=p, q=q)
    else:
        b_prime = frozenset(range(p + 1, q + 1))
        a_double_prime = frozenset(v for v in range(q + 1, n + 1) if p < terms[v - 1] <= q)
        if not (b_prime <= tail_vertices and a_double_prime <= tail_vertices):
            raise InternalConsistencyError(f"Tail sets of {terms} leave the final component")
        tail = SkeletonTail(
            vertices=tail_vertices,
            split=False,
            p=p,
            q=q,
            a_prime=tail_vertices - b_prime,
            b_prime=b_prime,
            a_double_prime=a_double_prime,
            b_double_prime=tail_vertices - a_double_prime,
        )
    logger.debug(f"Skeleton of {terms}: {len(blocks)} blocks, tail {sorted(tail_vertices)} split={split}")
    return CanonicalSkeleton(blocks=tuple(blocks), tail=tail)


def is_decomposable_sequence(d: DegreeSequence) -> bool:
    return canonical_skeleton(d).component_count >= 2


def _creation_from_factors(factors: List[Factor]) -> CreationSequence:
    # composition terms are read right to left: C_1^a adds a isolated, C_2^b adds b dominating vertices
    steps: List[CreationStep] = []
    for step, count in reversed(factors):
        steps.extend([step] * count)
    return CreationSequence(tuple(steps))


def intersection_creation(skeleton: CanonicalSkeleton) -> CreationSequence:
    factors: List[Factor] = []
    for block in skeleton.blocks:
        factors += [(CreationStep.ISOLATED, len(block.independent)), (CreationStep.DOMINATING, len(block.clique))]
    tail = skeleton.tail
    if not tail.split:
        factors += [(CreationStep.ISOLATED, len(tail.a_prime)), (CreationStep.DOMINATING, len(tail.b_prime))]
    return _creation_from_factors(factors)


def union_creation(skeleton: CanonicalSkeleton) -> CreationSequence:
    factors: List[Factor] = []
    for block in skeleton.blocks:
        factors += [(CreationStep.DOMINATING, len(block.clique)), (CreationStep.ISOLATED, len(block.independent))]
    tail = skeleton.tail
    if not tail.split:
        factors += [
            (CreationStep.DOMINATING, len(tail.b_double_prime)),
            (CreationStep.ISOLATED, len(tail.a_double_prime)),
        ]
    return _creation_from_factors(factors)


def _cross_checked(d: DegreeSequence) -> ClassificationMatrix:
    """Forced pairs from the difference table, checked against the perturbation classifier.

    The check runs for n <= ENVELOPE_CROSS_CHECK_MAX_N (0 disables it).
    """
    matrix = classification_matrix(d)
    if d.n <= settings.ENVELOPE_CROSS_CHECK_MAX_N:
        independent = classification_matrix(d, PairMethod.GRAPHIC)
        if independent.entries != matrix.entries:
            disputed = [pair for pair in all_pairs(d.n) if independent.get(*pair) is not matrix.get(*pair)]
            raise InternalConsistencyError(f"Pair classifiers disagree on {d.terms} at {disputed}")
    return matrix


def _verified(d: DegreeSequence, graph: LabeledGraph, creation: CreationSequence, which: str):
    if len(creation) != d.n:
        raise InternalConsistencyError(f"{which}({d.terms}) creation has {len(creation)} steps for {d.n} vertices")
    if d.n and build_threshold_graph(creation).degree_sequence() != graph.degree_sequence():
        raise InternalConsistencyError(f"{which}({d.terms}) formula disagrees with the forced pairs")
    return graph, creation


def intersection_envelope(d: DegreeSequence) -> Tuple[LabeledGraph, CreationSequence]:
    """I(d): the forced edges, plus the creation sequence of its isomorphism type"""
    matrix = _cross_checked(d)
    graph = LabeledGraph(d.n, frozenset(matrix.pairs_with(PairClass.FORCED_EDGE)))
    return _verified(d, graph, intersection_creation(canonical_skeleton(d)), "I")


def union_envelope(d: DegreeSequence) -> Tuple[LabeledGraph, CreationSequence]:
    """U(d): every pair except the forced non-edges"""
    matrix = _cross_checked(d)
    non_edges = set(matrix.pairs_with(PairClass.FORCED_NON_EDGE))
    graph = LabeledGraph(d.n, frozenset(p for p in all_pairs(d.n) if p not in non_edges))
    return _verified(d, graph, union_creation(canonical_skeleton(d)), "U")


def build_threshold_graph(creation: CreationSequence) -> LabeledGraph:
    """Threshold graph from a creation sequence.

    Vertices are labeled by descending final degree, ties broken by creation order.
    """
    if not len(creation):
        raise EmptyCreation("A creation sequence needs at least one step")
    built_edges = []
    for vertex, step in enumerate(creation.steps):
        if step is CreationStep.DOMINATING:
            built_edges.extend((earlier, vertex) for earlier in range(vertex))

    degree = [0] * len(creation)
    for a, b in built_edges:
        degree[a] += 1
        degree[b] += 1
    order = sorted(range(len(creation)), key=lambda v: (-degree[v], v))
    label = {vertex: position + 1 for position, vertex in enumerate(order)}
    return LabeledGraph(len(creation), frozenset((label[a], label[b]) for a, b in built_edges))


def creation_sequence_of(graph: LabeledGraph) -> Optional[CreationSequence]:
    """Peel isolated/dominating vertices; None when the graph is not threshold.

    The first step is reported as isolated (it is immaterial).
    """
    remaining = set(range(1, graph.n + 1))
    peeled: List[CreationStep] = []
    while len(remaining) > 1:
        degrees = {v: len(graph.neighbors(v) & remaining) for v in remaining}
        isolated = [v for v in sorted(remaining) if degrees[v] == 0]
        dominating = [v for v in sorted(remaining) if degrees[v] == len(remaining) - 1]
        if isolated:
            peeled.append(CreationStep.ISOLATED)
            remaining.discard(isolated[0])
        elif dominating:
            peeled.append(CreationStep.DOMINATING)
            remaining.discard(dominating[0])
        else:
            return None
    if remaining:
        peeled.append(CreationStep.ISOLATED)
    return CreationSequence(tuple(reversed(peeled)))


def same_threshold_graph(first: CreationSequence, second: CreationSequence) -> bool:
    """Creation sequences describe the same graph iff they agree after the first step"""
    return len(first) == len(second) and first.steps[1:] == second.steps[1:]
