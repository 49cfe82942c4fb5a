from itertools import combinations_with_replacement

import pytest

from app.exceptions import NoForcedStructure, NotGraphic
from app.models import DegreeSequence, TransformStep, all_pairs
from app.services.dominance import (
    Cover,
    Relation,
    compare,
    elementary_covers,
    elementary_upset,
    is_elementary,
    lift_to_decomposable,
    majorizes,
    nearest_decomposable_within,
    unit_transform,
    unit_transformations,
)
from app.services.envelope import has_nontrivial_eg_zero, is_split_sequence
from app.services.forced_pairs import classification_matrix
from app.services.graphicality import eg_profile, is_graphic
from tests.sequences import LIFT_EXAMPLE, LIFT_TARGET, graphic_sequences


def test_majorization():
    assert majorizes((4, 3, 3, 2, 2), (3, 3, 3, 3, 2))
    assert not majorizes((3, 3, 3, 3, 2), (4, 3, 3, 2, 2))
    assert majorizes((2, 2), (2, 2))
    assert not majorizes((3, 1), (2, 1, 1))
    assert not majorizes((3, 1), (2, 1))


@pytest.mark.parametrize(
    "a,b,relation",
    [
        ((4, 3, 3, 2, 2), (3, 3, 3, 3, 2), Relation.MAJORIZES),
        ((3, 3, 3, 3, 2), (4, 3, 3, 2, 2), Relation.MAJORIZED),
        ((2, 1, 1), (2, 1, 1), Relation.EQUAL),
        ((3, 3, 0), (4, 1, 1), Relation.INCOMPARABLE),
        ((3, 1), (2, 1, 1), Relation.MISMATCH),
        ((3, 1), (2, 1), Relation.MISMATCH),
    ],
)
def test_compare(a, b, relation):
    assert compare(a, b) is relation


def test_unit_transform():
    assert unit_transform((3, 3, 3, 3, 2), 1, 5) == (4, 3, 3, 3, 1)
    assert unit_transform((3, 3, 3, 3, 2), 1, 2) is None
    assert unit_transform((3, 3, 3, 3, 2), 5, 1) is None
    assert unit_transform((1, 0), 1, 2) is None
    assert unit_transform(DegreeSequence((1, 1)), 1, 2) == (2, 0)


def test_covers_of_constant_block():
    start = (3, 3, 3, 3, 2)
    assert elementary_covers(start) == [Cover((4, 3, 3, 2, 2), 1, 4)]
    assert (4, 3, 3, 3, 1) in unit_transformations(start)
    assert not is_elementary(start, 1, 5)


def test_every_unit_transformation_dominates():
    start = (5, 3, 3, 2, 1, 1)
    for result in unit_transformations(start):
        assert compare(result, start) is Relation.MAJORIZES
    for cover in elementary_covers(start):
        assert cover.result in unit_transformations(start)


def test_covers_have_nothing_strictly_between():
    start = (3, 3, 2, 2, 1, 1)
    above = unit_transformations(start)
    for cover in elementary_covers(start):
        between = [
            t for t in above if t != cover.result and majorizes(cover.result, t) and majorizes(t, start) and t != start
        ]
        assert between == []


def test_upset_depth():
    assert elementary_upset((1, 1), 0) == {(1, 1)}
    assert elementary_upset((1, 1), 2) == {(1, 1), (2, 0)}


def test_lift_example_takes_three_steps():
    result = lift_to_decomposable(DegreeSequence(LIFT_EXAMPLE))
    assert result.target.terms == LIFT_TARGET
    assert result.step_count == 3
    assert result.steps == (TransformStep(1, 5), TransformStep(6, 12), TransformStep(5, 6))
    current = LIFT_EXAMPLE
    for step in result.steps:
        assert is_elementary(current, step.p, step.q)
        current = unit_transform(current, step.p, step.q)
        assert is_graphic(current)
    assert current == LIFT_TARGET
    assert eg_profile(result.target).delta[5] == 0


def test_lift_example_is_sharp():
    assert nearest_decomposable_within(LIFT_EXAMPLE, 2) == []


def test_lift_of_split_sequence_is_empty():
    result = lift_to_decomposable(DegreeSequence((3, 1, 1, 1, 0)))
    assert result.steps == ()
    assert result.target.terms == (3, 1, 1, 1, 0)


@pytest.mark.parametrize("terms", [(1, 1, 1, 1), (2, 1, 1, 1, 1)])
def test_lift_needs_a_forced_pair(terms):
    with pytest.raises(NoForcedStructure):
        lift_to_decomposable(DegreeSequence(terms))


def test_lift_needs_a_graphic_sequence():
    with pytest.raises(NotGraphic):
        lift_to_decomposable(DegreeSequence((3, 3, 1, 1)))


@pytest.mark.parametrize("n", range(2, 8))
def test_lift_reaches_decomposable_within_three_steps(n):
    for d in graphic_sequences(n):
        if not any(diff <= 1 for diff in eg_profile(d).delta[1:]):
            continue
        result = lift_to_decomposable(d)
        assert result.step_count <= 3, d.terms
        assert majorizes(result.target, d)
        assert has_nontrivial_eg_zero(result.target), d.terms


def _graphic_covers(d: DegreeSequence):
    for cover in elementary_covers(d):
        if is_graphic(cover.result):
            yield DegreeSequence(cover.result)


def _check_persistence(d: DegreeSequence):
    matrix = classification_matrix(d)
    for above in _graphic_covers(d):
        upper = classification_matrix(above)
        for pair in all_pairs(d.n):
            if matrix.get(*pair).is_forced:
                assert upper.get(*pair) is matrix.get(*pair), (d.terms, above.terms, pair)
        if is_split_sequence(d):
            assert is_split_sequence(above), (d.terms, above.terms)
        if has_nontrivial_eg_zero(d):
            assert has_nontrivial_eg_zero(above), (d.terms, above.terms)


@pytest.mark.parametrize("n", range(2, 7))
def test_forced_structure_persists_upward(n):
    for d in graphic_sequences(n):
        if sum(d.terms) <= 12:
            _check_persistence(d)


@pytest.mark.slow
def test_forced_structure_persists_upward_large():
    for d in graphic_sequences(7):
        if sum(d.terms) <= 12:
            _check_persistence(d)


def _lists_with_sum(n: int, total: int):
    return [terms for terms in combinations_with_replacement(range(total, -1, -1), n) if sum(terms) == total]


def _minimal_strict_majorizers(b, candidates):
    above = [t for t in candidates if t != b and majorizes(t, b)]
    return {t for t in above if not any(u != t and majorizes(t, u) for u in above)}


@pytest.mark.parametrize("n", range(1, 7))
def test_covers_are_the_minimal_strict_majorizers(n):
    for total in range(0, 13):
        candidates = _lists_with_sum(n, total)
        for b in candidates:
            covers = {cover.result for cover in elementary_covers(b)}
            assert covers == _minimal_strict_majorizers(b, candidates), b


def test_nearest_decomposable_accepts_plain_tuples():
    assert has_nontrivial_eg_zero((3, 1, 1, 1, 0))
    assert not has_nontrivial_eg_zero((1, 1, 1, 1))
    for terms in nearest_decomposable_within((1, 1, 1, 1), 1):
        assert is_graphic(terms) and has_nontrivial_eg_zero(terms)
        assert compare(terms, (1, 1, 1, 1)) is Relation.MAJORIZES
