"""Dominance (majorization) order on nonincreasing integer lists of fixed
length and sum.

Positions are 1-based throughout. A unit transformation (p, q) with p < q raises
term p and lowers term q by one, keeping the list nonincreasing and nonnegative.
"""

import logging
from enum import Enum
from itertools import accumulate
from typing import List, NamedTuple, Optional, Set

from app.exceptions import InternalConsistencyError, NoForcedStructure
from app.models import (
    DegreeSequence,
    IntList,
    LiftResult,
    SequenceLike,
    TransformStep,
    as_terms,
)
from app.services.envelope import has_nontrivial_eg_zero
from app.services.forced_pairs import require_graphic
from app.services.graphicality import eg_profile, is_graphic

logger = logging.getLogger(__name__)


class Cover(NamedTuple):
    result: IntList
    p: int
    q: int


class Relation(str, Enum):
    MAJORIZES = "majorizes"
    MAJORIZED = "majorized"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"
    MISMATCH = "mismatch"


def majorizes(a: SequenceLike, b: SequenceLike) -> bool:
    """a dominates b; false (not an error) when lengths or sums differ"""
    a_terms, b_terms = as_terms(a), as_terms(b)
    if len(a_terms) != len(b_terms) or sum(a_terms) != sum(b_terms):
        return False
    return all(x >= y for x, y in zip(accumulate(a_terms), accumulate(b_terms)))


def compare(a: SequenceLike, b: SequenceLike) -> Relation:
    a_terms, b_terms = as_terms(a), as_terms(b)
    if len(a_terms) != len(b_terms) or sum(a_terms) != sum(b_terms):
        return Relation.MISMATCH
    if a_terms == b_terms:
        return Relation.EQUAL
    if majorizes(a_terms, b_terms):
        return Relation.MAJORIZES
    if majorizes(b_terms, a_terms):
        return Relation.MAJORIZED
    return Relation.INCOMPARABLE


def unit_transform(b: SequenceLike, p: int, q: int) -> Optional[IntList]:
    """Raise term p, lower term q; None when the result leaves the poset"""
    terms = list(as_terms(b))
    if not 1 <= p < q <= len(terms):
        return None
    terms[p - 1] += 1
    terms[q - 1] -= 1
    if terms[q - 1] < 0:
        return None
    if any(terms[i] < terms[i + 1] for i in range(len(terms) - 1)):
        return None
    return tuple(terms)


def _moves(b: IntList) -> List[Cover]:
    n = len(b)
    moves = []
    for p in range(1, n + 1):
        for q in range(p + 1, n + 1):
            result = unit_transform(b, p, q)
            if result is not None:
                moves.append(Cover(result, p, q))
    return moves


def unit_transformations(b: SequenceLike) -> List[IntList]:
    """Distinct results of one unit transformation, each strictly above b"""
    seen = []
    for move in _moves(as_terms(b)):
        if move.result not in seen:
            seen.append(move.result)
    return seen


def is_elementary(b: SequenceLike, p: int, q: int) -> bool:
    """Brylawski: the move (p, q) is a cover iff q = p + 1 or b_p = b_q"""
    terms = as_terms(b)
    return unit_transform(terms, p, q) is not None and (q == p + 1 or terms[p - 1] == terms[q - 1])


def elementary_covers(b: SequenceLike) -> List[Cover]:
    terms = as_terms(b)
    return [move for move in _moves(terms) if is_elementary(terms, move.p, move.q)]


def elementary_upset(b: SequenceLike, depth: int) -> Set[IntList]:
    """Sequences reachable from b by at most depth elementary transformations (b included)"""
    frontier = {as_terms(b)}
    reached = set(frontier)
    for _ in range(depth):
        frontier = {cover.result for terms in frontier for cover in elementary_covers(terms)} - reached
        reached |= frontier
    return reached


def _first_index(terms: List[int], value: int) -> int:
    return terms.index(value) + 1


def _last_index(terms: List[int], value: int) -> int:
    return len(terms) - terms[::-1].index(value)


def _closing_moves(e: IntList, k: int) -> List[TransformStep]:
    """Elementary steps realizing the unit move from position k (b) to k + 1 (c).

    b is the smallest degree among the first k positions and c the largest
    degree after them; the net effect raises one copy of deg(b) and lowers one
    copy of deg(c). Positions are resolved on the current sequence at each step.
    """
    current = list(e)
    deg_b, deg_c = e[k - 1], e[k]
    repeated_b = e.count(deg_b) > 1
    repeated_c = e.count(deg_c) > 1
    plan: List[TransformStep] = []

    def move(p: int, q: int):
        plan.append(TransformStep(p, q))
        current[p - 1] += 1
        current[q - 1] -= 1

    if deg_b == deg_c or (not repeated_b and not repeated_c):
        move(_first_index(current, deg_b), _last_index(current, deg_c))
    elif repeated_b and repeated_c and deg_b > deg_c + 1:
        move(_first_index(current, deg_b), _last_index(current, deg_b))
        move(_first_index(current, deg_c), _last_index(current, deg_c))
        move(_first_index(current, deg_b - 1), _last_index(current, deg_c + 1))
    elif repeated_b:
        move(_first_index(current, deg_b), _last_index(current, deg_b))
        move(_first_index(current, deg_b - 1), _last_index(current, deg_c))
    else:
        move(_first_index(current, deg_c), _last_index(current, deg_c))
        move(_first_index(current, deg_b), _last_index(current, deg_c + 1))
    return plan


def _apply_verified(e: IntList, plan: List[TransformStep]) -> IntList:
    current = e
    for step in plan:
        if not is_elementary(current, step.p, step.q):
            raise InternalConsistencyError(f"Step ({step.p}, {step.q}) on {current} is not an elementary transformation")
        current = unit_transform(current, step.p, step.q)
        if not is_graphic(current):
            raise InternalConsistencyError(f"Intermediate {current} is not graphic")
    return current


def _search_upset(e: IntList, depth: int = 3) -> Optional[LiftResult]:
    """Breadth-first search for the nearest split or decomposable sequence above e"""
    frontier = [(e, ())]
    seen = {e}
    for _ in range(depth):
        next_frontier = []
        for terms, path in frontier:
            for cover in elementary_covers(terms):
                if cover.result in seen or not is_graphic(cover.result):
                    continue
                seen.add(cover.result)
                steps = path + (TransformStep(cover.p, cover.q),)
                if has_nontrivial_eg_zero(cover.result):
                    return LiftResult(source=e, target=DegreeSequence(cover.result), steps=steps)
                next_frontier.append((cover.result, steps))
        frontier = next_frontier
    return None


def lift_to_decomposable(e: DegreeSequence) -> LiftResult:
    """A split or decomposable sequence at most three elementary transformations above e.

    Uses the least k with Delta_k(e) = 1 and moves one unit from the largest
    degree after position k to the smallest degree among the first k positions.
    """
    require_graphic(e)
    profile = eg_profile(e)
    small = [k for k in range(1, e.n + 1) if profile.delta[k] <= 1]
    if not small:
        raise NoForcedStructure(f"{e.terms} has no k >= 1 with Delta_k <= 1; nothing to lift")
    if has_nontrivial_eg_zero(e):
        return LiftResult(source=e.terms, target=e, steps=())

    k = small[0]
    target = None
    if k < e.n and e.terms[k] >= k:
        try:
            plan = _closing_moves(e.terms, k)
            target = _apply_verified(e.terms, plan)
        except (InternalConsistencyError, ValueError) as exc:
            logger.warning(f"Planned lift of {e.terms} at k={k} failed verification: {exc}")
    if target is None or not has_nontrivial_eg_zero(target):
        logger.warning(f"Direct lift of {e.terms} at k={k} did not close a gap; searching the upset")
        fallback = _search_upset(e.terms)
        if fallback is None:
            raise InternalConsistencyError(f"No split or decomposable sequence within 3 steps above {e.terms}")
        return fallback

    logger.info(f"Lifted {e.terms} to {target} in {len(plan)} elementary steps (k={k})")
    return LiftResult(source=e.terms, target=DegreeSequence(target), steps=tuple(plan))


def nearest_decomposable_within(e: SequenceLike, depth: int) -> List[IntList]:
    """Split or decomposable sequences at most depth elementary steps above e"""
    return sorted(
        (terms for terms in elementary_upset(e, depth) if is_graphic(terms) and has_nontrivial_eg_zero(terms)),
        reverse=True,
    )
