from fastapi import APIRouter, HTTPException

from app.exceptions import SequenceAnalysisError
from app.schemas import (
    AnalysisReport,
    DecomposeReport,
    EnvelopeReport,
    EnvelopeRequest,
    ErrorResponse,
    OracleRequest,
    OracleResult,
    PairsReport,
    PairsRequest,
    SequenceRequest,
)
from app.services import reports

router = APIRouter(prefix="/api", tags=["sequences"])

ERROR_RESPONSES = {
    400: {"description": "Malformed or invalid sequence", "model": ErrorResponse},
    413: {"description": "Sequence too long for the requested analysis", "model": ErrorResponse},
    422: {"description": "Sequence is not graphic", "model": ErrorResponse},
}


def as_http_error(e: SequenceAnalysisError) -> HTTPException:
    return HTTPException(status_code=e.http_status, detail=str(e))


@router.post(
    "/analyze",
    response_model=AnalysisReport,
    summary="Erdos-Gallai analysis",
    description="""
    Graphicality, strong index m, the Erdos-Gallai difference table for k = 0..n,
    the Erdos-Gallai zeros, and the split/threshold flags.

    A sequence that is not graphic is still analyzed (`graphic: false`); only
    malformed input is rejected.
    """,
    responses={400: ERROR_RESPONSES[400], 413: ERROR_RESPONSES[413]},
)
def analyze(request: SequenceRequest):
    try:
        return reports.analysis_report(reports.read_sequence(request.sequence, request.normalize))
    except SequenceAnalysisError as e:
        raise as_http_error(e)


@router.post(
    "/pairs",
    response_model=PairsReport,
    summary="Classify vertex pairs",
    description="""
    Forced edge / forced non-edge / unforced verdict for every pair i < j.

    ### Methods:
    - **delta**: read off the Erdos-Gallai differences (default)
    - **graphic**: perturb the pair and test graphicality
    - **oracle**: enumerate every realization (small n only)
    """,
    responses=ERROR_RESPONSES,
)
def pairs(request: PairsRequest):
    try:
        d = reports.read_sequence(request.sequence, request.normalize)
        return reports.pairs_report(d, request.method, request.cap)
    except SequenceAnalysisError as e:
        raise as_http_error(e)


@router.post(
    "/envelope",
    response_model=EnvelopeReport,
    summary="Envelope graph",
    description="Intersection (I) or union (U) of all realizations, as labeled edges plus a creation sequence.",
    responses=ERROR_RESPONSES,
)
def envelope(request: EnvelopeRequest):
    try:
        d = reports.read_sequence(request.sequence, request.normalize)
        return reports.envelope_report(d, request.which)
    except SequenceAnalysisError as e:
        raise as_http_error(e)


@router.post(
    "/decompose",
    response_model=DecomposeReport,
    summary="Canonical skeleton",
    responses=ERROR_RESPONSES,
)
def decompose(request: SequenceRequest):
    try:
        return reports.decompose_report(reports.read_sequence(request.sequence, request.normalize))
    except SequenceAnalysisError as e:
        raise as_http_error(e)


@router.post(
    "/oracle",
    response_model=OracleResult,
    summary="Exhaustive realization oracle",
    description="""
    Enumerates every labeled realization and cross-checks the resulting
    envelopes against the Erdos-Gallai classifier.

    Limited to sequences with at most `cap` terms (default and ceiling come
    from `ORACLE_DEFAULT_CAP` and `ORACLE_MAX_CAP`).
    """,
    responses=ERROR_RESPONSES,
)
def oracle(request: OracleRequest):
    try:
        d = reports.read_sequence(request.sequence, request.normalize)
        return reports.oracle_result(d, request.cap)
    except SequenceAnalysisError as e:
        raise as_http_error(e)
