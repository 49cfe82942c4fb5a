import pytest
from hypothesis import given, strategies as st

from app.exceptions import ParseError, SequenceTooLong
from app.models import ClassificationMatrix, LabeledGraph, PairClass
from app.services.notation import (
    format_creation,
    format_matrix,
    format_sequence,
    parse_creation,
    parse_sequence,
    to_dot,
)
from config import settings
from tests.sequences import LIFT_EXAMPLE


@pytest.mark.parametrize(
    "text,expected",
    [
        ("2,2,1,1,0", (2, 2, 1, 1, 0)),
        ("15^5,6^7,3^7", LIFT_EXAMPLE),
        ("(2, 2, 1)", (2, 2, 1)),
        (" 3^2 , 0 ", (3, 3, 0)),
        ("", ()),
        ("()", ()),
        ("-1,2", (-1, 2)),
        ("4^1", (4,)),
    ],
)
def test_parse_sequence(text, expected):
    assert parse_sequence(text) == expected


def test_exponent_form_has_nineteen_terms():
    assert len(parse_sequence("15^5,6^7,3^7")) == 19


@pytest.mark.parametrize("text", ["3^0", "a,b", "1,,2", "2^", "1.5", "2^-1", "1 2"])
def test_malformed_sequences(text):
    with pytest.raises(ParseError):
        parse_sequence(text)


def test_huge_multiplicity_is_rejected_before_expanding():
    with pytest.raises(SequenceTooLong):
        parse_sequence("0^2000000000")


def test_running_length_is_bounded(monkeypatch):
    monkeypatch.setattr(settings, "MAX_SEQUENCE_LENGTH", 5)
    assert parse_sequence("1^3,2^2") == (1, 1, 1, 2, 2)
    with pytest.raises(SequenceTooLong):
        parse_sequence("1^3,2^3")


def test_format_sequence():
    assert format_sequence((2, 2, 1, 1, 0)) == "2,2,1,1,0"
    assert format_sequence(LIFT_EXAMPLE, compact=True) == "15^5,6^7,3^7"
    assert format_sequence((4, 3, 3), compact=True) == "4,3^2"
    assert format_sequence(()) == ""


@given(st.lists(st.integers(min_value=-5, max_value=40), max_size=30), st.booleans())
def test_formatted_sequences_reparse(terms, compact):
    assert parse_sequence(format_sequence(terms, compact)) == tuple(terms)


def test_creation_text():
    creation = parse_creation("DIIDI")
    assert format_creation(creation) == "DIIDI"
    assert format_creation(parse_creation("d, i")) == "DI"
    with pytest.raises(ParseError):
        parse_creation("DXI")


def test_dot_lists_isolated_vertices():
    graph = LabeledGraph.from_edges(3, [(1, 2)])
    assert to_dot(graph) == "graph G {\n  1 -- 2;\n  3;\n}"
    assert to_dot(LabeledGraph(0)) == "graph G {\n}"


def test_matrix_grid():
    matrix = ClassificationMatrix(
        n=3,
        entries={(1, 2): PairClass.FORCED_EDGE, (1, 3): PairClass.UNFORCED, (2, 3): PairClass.FORCED_NON_EDGE},
    )
    assert format_matrix(matrix).splitlines() == [
        "  1 2 3",
        "1 - E .",
        "2 E - N",
        "3 . N -",
    ]
