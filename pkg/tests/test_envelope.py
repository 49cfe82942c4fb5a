import networkx as nx
import pytest

from app.exceptions import EmptyCreation, InternalConsistencyError, NotGraphic
from app.models import ClassificationMatrix, CreationSequence, DegreeSequence, PairClass, PairMethod, SkeletonBlock
from app.services import envelope
from app.services.envelope import (
    build_threshold_graph,
    canonical_skeleton,
    creation_sequence_of,
    eg_zero_list,
    has_nontrivial_eg_zero,
    intersection_envelope,
    is_decomposable_sequence,
    is_split_sequence,
    is_threshold_sequence,
    same_threshold_graph,
    union_envelope,
)
from app.services.notation import format_creation, parse_creation
from app.services.realization import find_alternating_four_cycle, forced_pairs_oracle, realize
from config import settings
from tests.sequences import ENVELOPE_EXAMPLE, WORKED_EXAMPLE, graphic_sequences


def test_envelope_example_creation_sequences():
    d = DegreeSequence(ENVELOPE_EXAMPLE)
    intersection, creation_i = intersection_envelope(d)
    union, creation_u = union_envelope(d)
    assert format_creation(creation_i) == "IIIIDDIII"
    assert format_creation(creation_u) == "DDDDIIIDD"
    assert intersection.sorted_edges() == [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (2, 6)]
    assert len(union.edges) == 21
    assert not union.has_edge(7, 8)
    assert not union.has_edge(3, 9)


def test_envelope_example_skeleton():
    skeleton = canonical_skeleton(DegreeSequence(ENVELOPE_EXAMPLE))
    assert skeleton.blocks == (SkeletonBlock(clique=frozenset({1, 2}), independent=frozenset({7, 8, 9})),)
    tail = skeleton.tail
    assert tail.vertices == frozenset({3, 4, 5, 6})
    assert not tail.split
    assert (tail.p, tail.q) == (2, 2)
    assert tail.b_prime == frozenset()
    assert tail.a_double_prime == frozenset()
    assert skeleton.component_count == 2


def test_worked_example_is_split():
    d = DegreeSequence(WORKED_EXAMPLE)
    assert is_split_sequence(d)
    assert not is_threshold_sequence(d)
    assert eg_zero_list(d) == [0, 2]
    skeleton = canonical_skeleton(d)
    assert skeleton.tail.split and skeleton.tail.vertices == frozenset()
    assert skeleton.blocks == (
        SkeletonBlock(clique=frozenset(), independent=frozenset({5})),
        SkeletonBlock(clique=frozenset({1, 2}), independent=frozenset({3, 4})),
    )
    assert format_creation(intersection_envelope(d)[1]) == "DDIII"
    assert format_creation(union_envelope(d)[1]) == "IIDDI"


def test_threshold_sequence_creation():
    d = DegreeSequence((3, 1, 1, 1, 0))
    assert is_threshold_sequence(d)
    assert is_decomposable_sequence(d)
    graph, creation = intersection_envelope(d)
    assert format_creation(creation) == "DIIDI"
    assert graph == union_envelope(d)[0]
    assert graph.sorted_edges() == [(1, 2), (1, 3), (1, 4)]


def test_perfect_matching_envelopes():
    d = DegreeSequence((1, 1, 1, 1))
    assert not is_split_sequence(d)
    assert not has_nontrivial_eg_zero(d)
    assert not is_decomposable_sequence(d)
    tail = canonical_skeleton(d).tail
    assert (tail.p, tail.q) == (0, 0)
    assert tail.a_prime == tail.b_double_prime == frozenset({1, 2, 3, 4})
    intersection, creation_i = intersection_envelope(d)
    union, creation_u = union_envelope(d)
    assert intersection.edges == frozenset()
    assert len(union.edges) == 6
    assert (format_creation(creation_i), format_creation(creation_u)) == ("IIII", "DDDD")


def test_union_drops_pairs_of_tail_vertices_with_degree_q():
    d = DegreeSequence((4, 2, 2, 2, 1, 1))
    tail = canonical_skeleton(d).tail
    assert (tail.p, tail.q) == (0, 1)
    assert tail.a_double_prime == frozenset({5, 6})
    assert tail.b_double_prime == frozenset({1, 2, 3, 4})
    union, creation_u = union_envelope(d)
    assert format_creation(creation_u) == "IIDDDD"
    assert build_threshold_graph(creation_u).degree_sequence() == (5, 5, 5, 5, 4, 4)
    assert not union.has_edge(5, 6)
    assert len(union.edges) == 14
    assert union == forced_pairs_oracle(d).union


def test_envelope_rejects_disagreeing_classifiers(monkeypatch):
    real = envelope.classification_matrix

    def skewed(d, method=PairMethod.DELTA, cap=None):
        matrix = real(d, method, cap)
        if method is PairMethod.GRAPHIC:
            entries = dict(matrix.entries)
            entries[(1, 2)] = PairClass.UNFORCED
            return ClassificationMatrix(n=matrix.n, entries=entries)
        return matrix

    monkeypatch.setattr(envelope, "classification_matrix", skewed)
    with pytest.raises(InternalConsistencyError):
        union_envelope(DegreeSequence(WORKED_EXAMPLE))
    monkeypatch.setattr(settings, "ENVELOPE_CROSS_CHECK_MAX_N", 0)
    assert format_creation(union_envelope(DegreeSequence(WORKED_EXAMPLE))[1]) == "IIDDI"


def test_non_graphic_sequence_has_no_envelope():
    with pytest.raises(NotGraphic):
        intersection_envelope(DegreeSequence((3, 3, 1, 1)))


def test_build_threshold_graph():
    star = build_threshold_graph(parse_creation("DIIDI"))
    assert star.degree_sequence() == (3, 1, 1, 1, 0)
    assert star.degrees() == (3, 1, 1, 1, 0)
    with pytest.raises(EmptyCreation):
        build_threshold_graph(CreationSequence(()))


def test_creation_sequence_of_recognizes_threshold_graphs():
    d = DegreeSequence(ENVELOPE_EXAMPLE)
    intersection, creation_i = intersection_envelope(d)
    union, creation_u = union_envelope(d)
    assert same_threshold_graph(creation_sequence_of(intersection), creation_i)
    assert same_threshold_graph(creation_sequence_of(union), creation_u)


def test_creation_sequence_of_rejects_non_threshold_graph():
    assert creation_sequence_of(realize(DegreeSequence((1, 1, 1, 1)))) is None


def test_same_threshold_graph_ignores_first_step():
    assert same_threshold_graph(parse_creation("IDD"), parse_creation("DDD"))
    assert not same_threshold_graph(parse_creation("IDI"), parse_creation("IID"))


def _check_envelopes(d: DegreeSequence):
    oracle = forced_pairs_oracle(d)
    for graph, creation, expected in (
        (*intersection_envelope(d), oracle.intersection),
        (*union_envelope(d), oracle.union),
    ):
        assert graph == expected, d.terms
        assert find_alternating_four_cycle(graph) is None, d.terms
        assert creation_sequence_of(graph) is not None, d.terms
        assert is_threshold_sequence(DegreeSequence(graph.degree_sequence()))
        if d.n:
            rebuilt = build_threshold_graph(creation).to_networkx()
            assert nx.is_isomorphic(rebuilt, graph.to_networkx()), d.terms


@pytest.mark.parametrize("n", range(1, 7))
def test_envelopes_are_threshold_and_match_oracle(n):
    for d in graphic_sequences(n):
        _check_envelopes(d)


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_envelopes_are_threshold_and_match_oracle_large(n):
    for d in graphic_sequences(n):
        _check_envelopes(d)


@pytest.mark.parametrize("n", range(1, 7))
def test_skeleton_partitions_the_vertices(n):
    for d in graphic_sequences(n):
        skeleton = canonical_skeleton(d)
        covered = frozenset(skeleton.tail.vertices).union(*(block.vertices for block in skeleton.blocks))
        assert covered == frozenset(range(1, n + 1)), d.terms
        assert is_split_sequence(d) == (not skeleton.tail.vertices)
        assert sum(len(block.vertices) for block in skeleton.blocks) + len(skeleton.tail.vertices) == n
