"""Assemble report documents from domain results.

The CLI `--json` output and the HTTP responses share these shapes.
"""

from typing import Iterable, List, Optional

from app.models import (
    ClassificationMatrix,
    DegreeSequence,
    IntList,
    LabeledGraph,
    PairMethod,
    SequenceLike,
    validate_partition,
    validate_sequence,
)
from app.schemas import (
    AnalysisReport,
    CoverEntry,
    CoversReport,
    DecomposeReport,
    EnvelopeGraph,
    EnvelopeReport,
    LiftBody,
    LiftReport,
    OracleResult,
    PairStatus,
    PairsReport,
    RelationReport,
    SequenceInput,
    SkeletonBlockReport,
    SkeletonTailReport,
    StepReport,
)
from app.services.dominance import compare, elementary_covers, lift_to_decomposable, unit_transformations
from app.services.envelope import (
    canonical_skeleton,
    intersection_envelope,
    is_split_sequence,
    is_threshold_sequence,
    union_envelope,
)
from app.services.forced_pairs import classification_matrix, forced_fraction
from app.services.graphicality import erdos_gallai_differences, is_graphic, strong_index
from app.services.notation import format_creation, parse_sequence
from app.services.realization import forced_pairs_oracle
from config import settings


def read_terms(raw: SequenceInput, normalize: bool = False) -> IntList:
    """Text or integer list to a term tuple, sorted descending when asked"""
    terms = parse_sequence(raw) if isinstance(raw, str) else tuple(int(t) for t in raw)
    if normalize:
        terms = tuple(sorted(terms, reverse=True))
    return terms


def read_sequence(raw: SequenceInput, normalize: bool = False) -> DegreeSequence:
    return validate_sequence(read_terms(raw, normalize))


def read_partition(raw: SequenceInput, normalize: bool = False) -> IntList:
    return validate_partition(read_terms(raw, normalize))


def _sorted_list(vertices: Optional[Iterable[int]]) -> Optional[List[int]]:
    return None if vertices is None else sorted(vertices)


def _edge_list(graph: LabeledGraph) -> List[List[int]]:
    return [list(edge) for edge in graph.sorted_edges()]


def _pair_list(matrix: ClassificationMatrix) -> List[PairStatus]:
    return [PairStatus(i=i, j=j, status=matrix.get(i, j).value) for i, j in sorted(matrix.entries)]


def analysis_report(d: DegreeSequence) -> AnalysisReport:
    graphic = is_graphic(d)
    delta = erdos_gallai_differences(d.terms)
    m = strong_index(d.terms)
    return AnalysisReport(
        n=d.n,
        sequence=list(d.terms),
        graphic=graphic,
        m=m,
        delta=list(delta),
        eg_zeros=[k for k in range(m + 1) if delta[k] == 0],
        split=is_split_sequence(d) if graphic else None,
        threshold=is_threshold_sequence(d) if graphic else None,
    )


def pairs_report(d: DegreeSequence, method: Optional[str] = None, cap: Optional[int] = None) -> PairsReport:
    chosen = PairMethod(method or settings.DEFAULT_PAIR_METHOD)
    matrix = classification_matrix(d, chosen, cap)
    return PairsReport(
        n=d.n,
        sequence=list(d.terms),
        method=chosen.value,
        pairs=_pair_list(matrix),
        forced_count=matrix.forced_count(),
        forced_fraction=forced_fraction(matrix),
    )


def envelope_report(d: DegreeSequence, which: str) -> EnvelopeReport:
    graph, creation = intersection_envelope(d) if which == "I" else union_envelope(d)
    return EnvelopeReport(
        n=d.n,
        sequence=list(d.terms),
        envelope=EnvelopeGraph(which=which, edges=_edge_list(graph), creation=format_creation(creation)),
    )


def decompose_report(d: DegreeSequence) -> DecomposeReport:
    skeleton = canonical_skeleton(d)
    tail = skeleton.tail
    return DecomposeReport(
        n=d.n,
        sequence=list(d.terms),
        components=skeleton.component_count,
        decomposable=skeleton.component_count >= 2,
        blocks=[
            SkeletonBlockReport(clique=sorted(block.clique), independent=sorted(block.independent))
            for block in skeleton.blocks
        ],
        tail=SkeletonTailReport(
            vertices=sorted(tail.vertices),
            split=tail.split,
            p=tail.p,
            q=tail.q,
            a_prime=_sorted_list(tail.a_prime),
            b_prime=_sorted_list(tail.b_prime),
            a_double_prime=_sorted_list(tail.a_double_prime),
            b_double_prime=_sorted_list(tail.b_double_prime),
        ),
    )


def oracle_result(d: DegreeSequence, cap: Optional[int] = None) -> OracleResult:
    report = forced_pairs_oracle(d, cap)
    intersection, _ = intersection_envelope(d)
    union, _ = union_envelope(d)
    agrees = (
        report.intersection == intersection
        and report.union == union
        and report.matrix.entries == classification_matrix(d).entries
    )
    return OracleResult(
        n=d.n,
        sequence=list(d.terms),
        realization_count=report.realization_count,
        pairs=_pair_list(report.matrix),
        intersection=_edge_list(report.intersection),
        union=_edge_list(report.union),
        agrees=agrees,
    )


def relation_report(a: SequenceLike, b: SequenceLike) -> RelationReport:
    a_terms, b_terms = validate_partition(a), validate_partition(b)
    return RelationReport(a=list(a_terms), b=list(b_terms), relation=compare(a_terms, b_terms).value)


def covers_report(b: SequenceLike) -> CoversReport:
    terms = validate_partition(b)
    return CoversReport(
        sequence=list(terms),
        covers=[CoverEntry(result=list(c.result), p=c.p, q=c.q) for c in elementary_covers(terms)],
        unit_transformations=[list(t) for t in unit_transformations(terms)],
    )


def lift_report(e: DegreeSequence) -> LiftReport:
    result = lift_to_decomposable(e)
    return LiftReport(
        n=e.n,
        sequence=list(e.terms),
        lift=LiftBody(
            target=list(result.target.terms),
            steps=[StepReport(p=step.p, q=step.q) for step in result.steps],
        ),
    )
