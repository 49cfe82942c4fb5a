"""Forced edge / forced non-edge classification of vertex pairs.

Two independent classifiers are provided: one perturbs the sequence at the
pair and tests graphicality, the other reads the verdict off the Erdos-Gallai
differences of the sequence itself. Both must agree on every pair.
"""

import logging
from typing import List, Optional, Sequence, Tuple

from app.exceptions import BadPair, InternalConsistencyError, NotGraphic
from app.models import (
    ClassificationMatrix,
    DegreeSequence,
    IntList,
    PairClass,
    PairMethod,
    all_pairs,
)
from app.services.graphicality import eg_profile, is_graphic

logger = logging.getLogger(__name__)


def _check_pair(d: DegreeSequence, i: int, j: int):
    if not (1 <= i < j <= d.n):
        raise BadPair(f"Pair ({i}, {j}) is not a pair 1 <= i < j <= {d.n}")


def require_graphic(d: DegreeSequence):
    if not is_graphic(d):
        raise NotGraphic(f"Sequence {d.terms} is not graphic")


def perturbed_plus(d: DegreeSequence, i: int, j: int) -> IntList:
    """d with positions i and j raised by one, not re-sorted"""
    _check_pair(d, i, j)
    terms = list(d.terms)
    terms[i - 1] += 1
    terms[j - 1] += 1
    return tuple(terms)


def perturbed_minus(d: DegreeSequence, i: int, j: int) -> IntList:
    """d with positions i and j lowered by one, not re-sorted; may contain -1"""
    _check_pair(d, i, j)
    terms = list(d.terms)
    terms[i - 1] -= 1
    terms[j - 1] -= 1
    return tuple(terms)


def classify_pair_via_graphicality(d: DegreeSequence, i: int, j: int) -> PairClass:
    _check_pair(d, i, j)
    require_graphic(d)
    return _classify_by_perturbation(d, i, j)


def _classify_by_perturbation(d: DegreeSequence, i: int, j: int) -> PairClass:
    edge_forced = not is_graphic(perturbed_plus(d, i, j))
    non_edge_forced = not is_graphic(perturbed_minus(d, i, j))
    if edge_forced and non_edge_forced:
        raise InternalConsistencyError(
            f"Pair ({i}, {j}) of {d.terms} tested both forced edge and forced non-edge"
        )
    if edge_forced:
        return PairClass.FORCED_EDGE
    if non_edge_forced:
        return PairClass.FORCED_NON_EDGE
    return PairClass.UNFORCED


class DeltaIndex:
    """Prefix counts of the k in 0..n with Delta_k = 0 and with Delta_k <= 1.

    A forced edge needs some k with Delta_k <= 1 and j <= k, or Delta_k = 0 and
    i <= k <= min(j - 1, d_j). A forced non-edge needs some k < i with
    Delta_k <= 1 and d_i <= k, or Delta_k = 0 and d_j <= k < d_i. k = 0 is
    included (Delta_0 = 0).
    """

    def __init__(self, delta: Sequence[int]):
        self.zeros = [0]
        self.small = [0]
        for diff in delta:
            self.zeros.append(self.zeros[-1] + (diff == 0))
            self.small.append(self.small[-1] + (diff <= 1))

    @staticmethod
    def _any(counts: List[int], low: int, high: int) -> bool:
        return low <= high and counts[high + 1] > counts[low]

    def classify(self, terms: Sequence[int], i: int, j: int) -> PairClass:
        d_i = terms[i - 1]
        d_j = terms[j - 1]
        last = len(self.small) - 2
        if self._any(self.small, j, last) or self._any(self.zeros, i, min(j - 1, d_j)):
            return PairClass.FORCED_EDGE
        if self._any(self.small, d_i, i - 1) or self._any(self.zeros, d_j, min(d_i, i) - 1):
            return PairClass.FORCED_NON_EDGE
        return PairClass.UNFORCED


def classify_pair_via_deltas(d: DegreeSequence, i: int, j: int) -> PairClass:
    _check_pair(d, i, j)
    require_graphic(d)
    return DeltaIndex(eg_profile(d).delta).classify(d.terms, i, j)


def classification_matrix(
    d: DegreeSequence,
    method: PairMethod = PairMethod.DELTA,
    cap: Optional[int] = None,
) -> ClassificationMatrix:
    """Verdict for every pair {i, j}.

    DELTA reuses a single Erdos-Gallai profile; GRAPHIC runs two graphicality
    tests per pair; ORACLE enumerates realizations (bounded by cap).
    """
    method = PairMethod(method)
    if method is PairMethod.ORACLE:
        from app.services.realization import forced_pairs_oracle

        return forced_pairs_oracle(d, cap).matrix

    require_graphic(d)
    if method is PairMethod.DELTA:
        index = DeltaIndex(eg_profile(d).delta)
        entries = {(i, j): index.classify(d.terms, i, j) for i, j in all_pairs(d.n)}
    else:
        entries = {(i, j): _classify_by_perturbation(d, i, j) for i, j in all_pairs(d.n)}

    matrix = ClassificationMatrix(n=d.n, entries=entries)
    logger.debug(f"Classified {len(matrix)} pairs of {d.terms} via {method.value}: {matrix.forced_count()} forced")
    return matrix


def forced_fraction(matrix: ClassificationMatrix) -> float:
    """Share of pairs that are forced; 1.0 exactly for threshold sequences"""
    if not len(matrix):
        return 1.0
    return matrix.forced_count() / len(matrix)


def interval_violations(d: DegreeSequence, matrix: ClassificationMatrix) -> List[Tuple[int, int, int]]:
    """Triples (i, j, k) breaking the forcible-interval property.

    For distinct i, j, k with d_k >= d_j: ij forced edge implies ik forced edge,
    and ik forced non-edge implies ij forced non-edge.
    """
    violations = []
    n = d.n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if len({i, j, k}) < 3 or d.degree(k) < d.degree(j):
                    continue
                if matrix.get(i, j) is PairClass.FORCED_EDGE and matrix.get(i, k) is not PairClass.FORCED_EDGE:
                    violations.append((i, j, k))
                elif matrix.get(i, k) is PairClass.FORCED_NON_EDGE and matrix.get(i, j) is not PairClass.FORCED_NON_EDGE:
                    violations.append((i, j, k))
    return violations
