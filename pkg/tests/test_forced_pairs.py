import pytest

from app.exceptions import BadPair, InternalConsistencyError, NotGraphic
from app.models import DegreeSequence, PairClass, PairMethod, all_pairs
from app.services import forced_pairs
from app.services.forced_pairs import (
    classification_matrix,
    classify_pair_via_deltas,
    classify_pair_via_graphicality,
    forced_fraction,
    interval_violations,
    perturbed_minus,
    perturbed_plus,
)
from app.services.graphicality import complement_sequence, is_graphic
from tests.sequences import WORKED_EXAMPLE, graphic_sequences

E, N, U = PairClass.FORCED_EDGE, PairClass.FORCED_NON_EDGE, PairClass.UNFORCED

WORKED_VERDICTS = {
    (1, 2): E,
    (1, 3): U,
    (1, 4): U,
    (1, 5): N,
    (2, 3): U,
    (2, 4): U,
    (2, 5): N,
    (3, 4): N,
    (3, 5): N,
    (4, 5): N,
}


@pytest.mark.parametrize("method", list(PairMethod))
def test_worked_example(method):
    matrix = classification_matrix(DegreeSequence(WORKED_EXAMPLE), method)
    assert matrix.entries == WORKED_VERDICTS


@pytest.mark.parametrize("method", list(PairMethod))
def test_perfect_matching_forces_nothing(method):
    matrix = classification_matrix(DegreeSequence((1, 1, 1, 1)), method)
    assert matrix.forced_count() == 0


@pytest.mark.parametrize("method", list(PairMethod))
def test_threshold_sequence_forces_everything(method):
    matrix = classification_matrix(DegreeSequence((3, 1, 1, 1, 0)), method)
    assert matrix.pairs_with(E) == [(1, 2), (1, 3), (1, 4)]
    assert matrix.forced_count() == 10
    assert forced_fraction(matrix) == 1.0


def test_path_plus_edge_forces_nothing():
    matrix = classification_matrix(DegreeSequence((2, 1, 1, 1, 1)))
    assert matrix.forced_count() == 0


def test_forced_fraction():
    assert forced_fraction(classification_matrix(DegreeSequence(WORKED_EXAMPLE))) == pytest.approx(0.6)
    assert forced_fraction(classification_matrix(DegreeSequence((0,)))) == 1.0


def test_perturbations_are_not_resorted():
    d = DegreeSequence(WORKED_EXAMPLE)
    assert perturbed_plus(d, 3, 5) == (2, 2, 2, 1, 1)
    assert perturbed_plus(d, 1, 2) == (3, 3, 1, 1, 0)
    assert perturbed_minus(d, 4, 5) == (2, 2, 1, 0, -1)


@pytest.mark.parametrize("pair", [(2, 1), (1, 1), (0, 2), (4, 6)])
def test_bad_pairs(pair):
    d = DegreeSequence(WORKED_EXAMPLE)
    with pytest.raises(BadPair):
        classify_pair_via_deltas(d, *pair)
    with pytest.raises(BadPair):
        classify_pair_via_graphicality(d, *pair)


def test_non_graphic_sequence_is_rejected():
    d = DegreeSequence((3, 3, 1, 1))
    with pytest.raises(NotGraphic):
        classify_pair_via_deltas(d, 1, 2)
    with pytest.raises(NotGraphic):
        classification_matrix(d, PairMethod.GRAPHIC)


def test_both_perturbations_failing_is_an_internal_error(monkeypatch):
    monkeypatch.setattr(forced_pairs, "is_graphic", lambda terms: tuple(terms) == WORKED_EXAMPLE)
    with pytest.raises(InternalConsistencyError):
        classify_pair_via_graphicality(DegreeSequence(WORKED_EXAMPLE), 1, 2)


@pytest.mark.parametrize(
    "terms,pair",
    [
        # Delta_1 = 1 and d_5 = 1: k = d_i closes the non-edge
        ((4, 2, 2, 2, 1, 1), (5, 6)),
        # two degree-0 vertices, through k = 0
        ((1, 1, 0, 0), (3, 4)),
        # Delta_1 = 0, d_j = 1 <= k = 1 < d_i = 2
        ((3, 2, 2, 1, 0), (3, 4)),
    ],
)
@pytest.mark.parametrize("method", list(PairMethod))
def test_non_edges_at_the_degree_boundary(terms, pair, method):
    d = DegreeSequence(terms)
    assert classification_matrix(d, method).get(*pair) is N
    assert not is_graphic(perturbed_minus(d, *pair))


def _check_complement_duality(d: DegreeSequence):
    n = d.n
    matrix = classification_matrix(d)
    dual = classification_matrix(complement_sequence(d))
    for i, j in all_pairs(n):
        assert (matrix.get(i, j) is N) == (dual.get(n + 1 - j, n + 1 - i) is E), (d.terms, i, j)
        assert (matrix.get(i, j) is E) == (dual.get(n + 1 - j, n + 1 - i) is N), (d.terms, i, j)


@pytest.mark.parametrize("n", range(2, 8))
def test_complement_swaps_forced_edges_and_non_edges(n):
    for d in graphic_sequences(n):
        _check_complement_duality(d)


def _assert_methods_agree(d: DegreeSequence):
    by_delta = classification_matrix(d, PairMethod.DELTA)
    by_graphic = classification_matrix(d, PairMethod.GRAPHIC)
    by_oracle = classification_matrix(d, PairMethod.ORACLE)
    for pair in all_pairs(d.n):
        assert by_delta.get(*pair) is by_graphic.get(*pair) is by_oracle.get(*pair), (d.terms, pair)


@pytest.mark.parametrize("n", range(1, 7))
def test_methods_agree(n):
    for d in graphic_sequences(n):
        _assert_methods_agree(d)


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_methods_agree_large(n):
    for d in graphic_sequences(n):
        _assert_methods_agree(d)


@pytest.mark.parametrize("n", range(2, 7))
def test_forced_pairs_form_intervals(n):
    for d in graphic_sequences(n):
        assert interval_violations(d, classification_matrix(d)) == [], d.terms
