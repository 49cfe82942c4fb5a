from fastapi import APIRouter

from app.exceptions import SequenceAnalysisError
from app.routes.sequences import ERROR_RESPONSES, as_http_error
from app.schemas import CompareRequest, CoversReport, LiftReport, RelationReport, SequenceRequest
from app.services import reports

router = APIRouter(prefix="/api/dominance", tags=["dominance"])


@router.post(
    "/compare",
    response_model=RelationReport,
    summary="Compare in the dominance order",
    description="Lists of different length or sum are reported as `mismatch`, not rejected.",
    responses={400: ERROR_RESPONSES[400]},
)
def compare_sequences(request: CompareRequest):
    try:
        a = reports.read_partition(request.a, request.normalize)
        b = reports.read_partition(request.b, request.normalize)
        return reports.relation_report(a, b)
    except SequenceAnalysisError as e:
        raise as_http_error(e)


@router.post(
    "/covers",
    response_model=CoversReport,
    summary="Elementary transformations",
    responses={400: ERROR_RESPONSES[400]},
)
def covers(request: SequenceRequest):
    try:
        return reports.covers_report(reports.read_partition(request.sequence, request.normalize))
    except SequenceAnalysisError as e:
        raise as_http_error(e)


@router.post(
    "/lift",
    response_model=LiftReport,
    summary="Lift to a split or decomposable sequence",
    description="""
    For a graphic sequence with at least one forced pair, returns a split or
    canonically decomposable sequence at most three elementary transformations
    above it, together with the steps. A sequence with no forced pair is
    rejected with 422.
    """,
    responses=ERROR_RESPONSES,
)
def lift(request: SequenceRequest):
    try:
        return reports.lift_report(reports.read_sequence(request.sequence, request.normalize))
    except SequenceAnalysisError as e:
        raise as_http_error(e)
