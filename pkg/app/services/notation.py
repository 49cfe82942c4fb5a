import re
from itertools import groupby
from typing import Iterable, List

from app.exceptions import ParseError, SequenceTooLong
from app.models import CreationSequence, CreationStep, IntList, LabeledGraph
from config import settings

TERM_PATTERN = re.compile(r"^([+-]?\d+)(?:\^(\d+))?$")


def parse_sequence(text: str) -> IntList:
    """Expand comma form "2,2,1,1,0" or exponent form "15^5,6^7,3^7".

    Surrounding parentheses and whitespace are ignored; empty text (or "()")
    is the empty sequence. Terms may be signed, so invalid degree lists can
    still be parsed and reported on.
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1].strip()
    if not body:
        return ()

    terms: List[int] = []
    for position, chunk in enumerate(body.split(","), start=1):
        match = TERM_PATTERN.match(chunk.strip())
        if not match:
            raise ParseError(f"Cannot read term {position} ({chunk.strip()!r}) of {text!r}")
        value = int(match.group(1))
        multiplicity = 1 if match.group(2) is None else int(match.group(2))
        if multiplicity < 1:
            raise ParseError(f"Multiplicity of {value} must be at least 1, got {multiplicity}")
        if len(terms) + multiplicity > settings.MAX_SEQUENCE_LENGTH:
            raise SequenceTooLong(
                f"{text[:40]!r} expands to more than {settings.MAX_SEQUENCE_LENGTH} terms"
            )
        terms.extend([value] * multiplicity)
    return tuple(terms)


def format_sequence(terms: Iterable[int], compact: bool = False) -> str:
    """Comma form, or exponent form grouping runs of equal terms"""
    terms = list(terms)
    if not compact:
        return ",".join(str(t) for t in terms)
    parts = []
    for value, run in groupby(terms):
        count = len(list(run))
        parts.append(str(value) if count == 1 else f"{value}^{count}")
    return ",".join(parts)


def format_creation(creation: CreationSequence) -> str:
    return "".join(step.value for step in creation.steps)


def parse_creation(text: str) -> CreationSequence:
    cleaned = re.sub(r"[\s,]", "", text.upper())
    try:
        return CreationSequence(tuple(CreationStep(ch) for ch in cleaned))
    except ValueError:
        raise ParseError(f"Creation sequence {text!r} may only contain I and D")


def to_dot(graph: LabeledGraph) -> str:
    """Graphviz text; vertices without edges are listed as bare nodes"""
    lines = ["graph G {"]
    touched = set()
    for a, b in graph.sorted_edges():
        lines.append(f"  {a} -- {b};")
        touched.update((a, b))
    for vertex in range(1, graph.n + 1):
        if vertex not in touched:
            lines.append(f"  {vertex};")
    lines.append("}")
    return "\n".join(lines)


def format_matrix(matrix) -> str:
    """Text grid of pair verdicts: E forced edge, N forced non-edge, . unforced"""
    n = matrix.n
    width = len(str(n))
    header = " " * (width + 1) + " ".join(str(j).rjust(width) for j in range(1, n + 1))
    rows = [header]
    for i in range(1, n + 1):
        cells = []
        for j in range(1, n + 1):
            cells.append("-".rjust(width) if i == j else matrix.get(i, j).symbol.rjust(width))
        rows.append(f"{str(i).rjust(width)} " + " ".join(cells))
    return "\n".join(rows)
