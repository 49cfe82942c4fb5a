import logging
from typing import Sequence

from app.exceptions import NotSorted
from app.models import DegreeSequence, EGProfile, IntList, SequenceLike, as_terms

logger = logging.getLogger(__name__)


def strong_index(terms: Sequence[int]) -> int:
    """m(pi) = max{i : pi_i >= i - 1}, 0 for the empty list"""
    m = 0
    for i, term in enumerate(terms, start=1):
        if term >= i - 1:
            m = i
    return m


def erdos_gallai_sides(terms: Sequence[int]):
    """LHS_k and RHS_k for k = 0..n of a nonincreasing integer list.

    The terms that are at least k form a prefix, so one suffix-sum scan with a
    boundary moving left as k grows gives every RHS_k in linear time.
    """
    n = len(terms)
    for position in range(1, n):
        if terms[position - 1] < terms[position]:
            raise NotSorted(
                f"Terms must be nonincreasing: position {position} has {terms[position - 1]}, "
                f"position {position + 1} has {terms[position]}"
            )
    lhs = [0] * (n + 1)
    rhs = [0] * (n + 1)
    suffix = [0] * (n + 1)
    for index in range(n - 1, -1, -1):
        suffix[index] = suffix[index + 1] + terms[index]

    # boundary: number of terms that are at least k
    boundary = n
    for k in range(1, n + 1):
        lhs[k] = lhs[k - 1] + terms[k - 1]
        while boundary > 0 and terms[boundary - 1] < k:
            boundary -= 1
        split = max(boundary, k)
        rhs[k] = k * (k - 1) + k * (split - k) + suffix[split]
    return tuple(lhs), tuple(rhs)


def erdos_gallai_differences(terms: Sequence[int]) -> IntList:
    """Delta_0..Delta_n for any nonincreasing integer list (Delta_0 = 0 by the empty-sum convention)"""
    lhs, rhs = erdos_gallai_sides(terms)
    return tuple(r - l for l, r in zip(lhs, rhs))


def eg_profile(d: DegreeSequence) -> EGProfile:
    """Erdos-Gallai profile of a validated degree sequence"""
    lhs, rhs = erdos_gallai_sides(d.terms)
    delta = tuple(r - l for l, r in zip(lhs, rhs))
    m = strong_index(d.terms)
    eg_zeros = tuple(k for k in range(m + 1) if delta[k] == 0)
    logger.debug(f"EG profile for {d.terms}: m={m}, delta={delta}, zeros={eg_zeros}")
    return EGProfile(lhs=lhs, rhs=rhs, delta=delta, m=m, eg_zeros=eg_zeros)


def is_graphic(raw: SequenceLike) -> bool:
    """Erdos-Gallai test on 1..m(pi) after sorting; total on any integer list"""
    terms = as_terms(raw)
    if any(t < 0 for t in terms):
        return False
    if sum(terms) % 2:
        return False
    ordered = sorted(terms, reverse=True)
    n = len(ordered)
    m = strong_index(ordered)

    suffix = [0] * (n + 1)
    for index in range(n - 1, -1, -1):
        suffix[index] = suffix[index + 1] + ordered[index]

    # boundary: first 0-based index holding a term smaller than k
    boundary = n
    lhs = 0
    for k in range(1, m + 1):
        lhs += ordered[k - 1]
        while boundary > 0 and ordered[boundary - 1] < k:
            boundary -= 1
        split = max(boundary, k)
        rhs = k * (k - 1) + k * (split - k) + suffix[split]
        if lhs > rhs:
            logger.debug(f"{tuple(terms)} fails the Erdos-Gallai inequality at k={k}")
            return False
    return True


def complement_sequence(d: DegreeSequence) -> DegreeSequence:
    """(n-1-d_n, ..., n-1-d_1); label i in d corresponds to label n+1-i here"""
    n = d.n
    return DegreeSequence(tuple(n - 1 - t for t in reversed(d.terms)))
