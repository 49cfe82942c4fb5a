from pydantic import BaseModel, Field
from typing import Optional, Dict, Any, List, Union

SequenceInput = Union[str, List[int]]


# Request schemas
class SequenceRequest(BaseModel):
    sequence: SequenceInput = Field(
        ...,
        description="Degree sequence as comma/exponent text (\"15^5,6^7,3^7\") or a list of integers",
        example="2,2,1,1,0"
    )
    normalize: bool = Field(
        False,
        description="Sort the terms descending before analysis (labels bind to positions otherwise)",
        example=False
    )

    class Config:
        json_schema_extra = {
            "example": {
                "sequence": "2,2,1,1,0",
                "normalize": False
            }
        }


class PairsRequest(SequenceRequest):
    method: Optional[str] = Field(
        None,
        description="Classifier: delta (Erdos-Gallai differences), graphic (perturbation tests) or oracle (enumeration)",
        example="delta",
        pattern="^(delta|graphic|oracle)$"
    )
    cap: Optional[int] = Field(None, description="Largest n the oracle may enumerate", example=10, ge=0)


class EnvelopeRequest(SequenceRequest):
    which: str = Field(
        ...,
        description="I for the intersection envelope (forced edges), U for the union envelope",
        example="I",
        pattern="^(I|U)$"
    )

    class Config:
        json_schema_extra = {
            "example": {
                "sequence": "7,6,3,3,3,3,1,1,1",
                "which": "I"
            }
        }


class OracleRequest(SequenceRequest):
    cap: Optional[int] = Field(None, description="Largest n to enumerate", example=10, ge=0)


class CompareRequest(BaseModel):
    a: SequenceInput = Field(..., description="First nonincreasing list", example="4,3,3,2,2")
    b: SequenceInput = Field(..., description="Second nonincreasing list", example="3,3,3,3,2")
    normalize: bool = Field(False, description="Sort both lists descending first")


# Report schemas (shared by the HTTP API and `--json` CLI output)
class PairStatus(BaseModel):
    i: int = Field(..., description="Smaller vertex label", example=1)
    j: int = Field(..., description="Larger vertex label", example=2)
    status: str = Field(..., description="forced_edge, forced_non_edge or unforced", example="forced_edge")


class AnalysisReport(BaseModel):
    n: int = Field(..., description="Number of vertices", example=5)
    sequence: List[int] = Field(..., description="Terms in label order", example=[2, 2, 1, 1, 0])
    graphic: bool = Field(..., description="Whether some simple graph realizes the sequence", example=True)
    m: int = Field(..., description="Strong index max{i : d_i >= i - 1}", example=2)
    delta: List[int] = Field(..., description="Erdos-Gallai differences for k = 0..n", example=[0, 1, 0, 2, 6, 14])
    eg_zeros: List[int] = Field(..., description="k in 0..m with a zero difference", example=[0, 2])
    split: Optional[bool] = Field(None, description="Split sequence (null when not graphic)", example=False)
    threshold: Optional[bool] = Field(None, description="Threshold sequence (null when not graphic)", example=False)

    class Config:
        json_schema_extra = {
            "example": {
                "n": 5,
                "sequence": [2, 2, 1, 1, 0],
                "graphic": True,
                "m": 2,
                "delta": [0, 1, 0, 2, 6, 14],
                "eg_zeros": [0, 2],
                "split": False,
                "threshold": False
            }
        }


class PairsReport(BaseModel):
    n: int = Field(..., description="Number of vertices", example=5)
    sequence: List[int] = Field(..., description="Terms in label order", example=[2, 2, 1, 1, 0])
    method: str = Field(..., description="Classifier used", example="delta")
    pairs: List[PairStatus] = Field(..., description="Verdict for every pair i < j in lexicographic order")
    forced_count: int = Field(..., description="Number of forced pairs", example=6)
    forced_fraction: float = Field(..., description="Share of pairs that are forced", example=0.6)


class EnvelopeGraph(BaseModel):
    which: str = Field(..., description="I or U", example="I")
    edges: List[List[int]] = Field(..., description="Edges [i, j] on the original labels", example=[[1, 2]])
    creation: str = Field(..., description="Creation sequence over {I, D} in build order", example="IIIIDDIII")


class EnvelopeReport(BaseModel):
    n: int = Field(..., description="Number of vertices", example=9)
    sequence: List[int] = Field(..., description="Terms in label order")
    envelope: EnvelopeGraph


class SkeletonBlockReport(BaseModel):
    clique: List[int] = Field(..., description="Vertices of the clique part", example=[1, 2])
    independent: List[int] = Field(..., description="Vertices of the independent part", example=[7, 8, 9])


class SkeletonTailReport(BaseModel):
    vertices: List[int] = Field(..., description="Vertices of the final component", example=[3, 4, 5, 6])
    split: bool = Field(..., description="True when every vertex sits in a block", example=False)
    p: int = Field(..., description="Largest Erdos-Gallai zero", example=2)
    q: int = Field(..., description="Largest k with a difference of at most 1", example=6)
    a_prime: Optional[List[int]] = None
    b_prime: Optional[List[int]] = None
    a_double_prime: Optional[List[int]] = None
    b_double_prime: Optional[List[int]] = None


class DecomposeReport(BaseModel):
    n: int = Field(..., description="Number of vertices", example=9)
    sequence: List[int] = Field(..., description="Terms in label order")
    components: int = Field(..., description="Blocks plus a nonempty tail", example=2)
    decomposable: bool = Field(..., description="At least two canonical components", example=True)
    blocks: List[SkeletonBlockReport] = Field(..., description="Outer components, outermost first")
    tail: SkeletonTailReport


class OracleResult(BaseModel):
    n: int = Field(..., description="Number of vertices", example=5)
    sequence: List[int] = Field(..., description="Terms in label order")
    realization_count: int = Field(..., description="Number of labeled realizations", example=2)
    pairs: List[PairStatus] = Field(..., description="Oracle verdict for every pair")
    intersection: List[List[int]] = Field(..., description="Edges present in every realization")
    union: List[List[int]] = Field(..., description="Edges present in some realization")
    agrees: bool = Field(..., description="Oracle envelopes and verdicts match the Erdos-Gallai classifier", example=True)


class RelationReport(BaseModel):
    a: List[int]
    b: List[int]
    relation: str = Field(..., description="majorizes, majorized, equal, incomparable or mismatch", example="majorizes")


class CoverEntry(BaseModel):
    result: List[int] = Field(..., description="Sequence reached", example=[4, 3, 3, 2, 2])
    p: int = Field(..., description="Position raised (1-based)", example=1)
    q: int = Field(..., description="Position lowered (1-based)", example=4)


class CoversReport(BaseModel):
    sequence: List[int] = Field(..., description="Starting sequence", example=[3, 3, 3, 3, 2])
    covers: List[CoverEntry] = Field(..., description="Elementary transformations (covers in the dominance order)")
    unit_transformations: List[List[int]] = Field(..., description="Every sequence one unit transformation above")


class StepReport(BaseModel):
    p: int = Field(..., description="Position raised (1-based)", example=1)
    q: int = Field(..., description="Position lowered (1-based)", example=5)


class LiftBody(BaseModel):
    target: List[int] = Field(..., description="Split or decomposable sequence reached")
    steps: List[StepReport] = Field(..., description="Elementary transformations applied in order")


class LiftReport(BaseModel):
    n: int
    sequence: List[int] = Field(..., description="Starting sequence")
    lift: LiftBody

    class Config:
        json_schema_extra = {
            "example": {
                "n": 19,
                "sequence": [15, 15, 15, 15, 15, 6, 6, 6, 6, 6, 6, 6, 3, 3, 3, 3, 3, 3, 3],
                "lift": {
                    "target": [16, 15, 15, 15, 15, 6, 6, 6, 6, 6, 6, 5, 3, 3, 3, 3, 3, 3, 3],
                    "steps": [{"p": 1, "q": 5}, {"p": 6, "q": 12}, {"p": 5, "q": 6}]
                }
            }
        }


# Error schemas
class ErrorResponse(BaseModel):
    detail: Optional[str] = Field(
        None,
        description="Detailed error message",
        example="Sequence (3, 3, 1, 1) is not graphic"
    )


# Health check schemas
class HealthResponse(BaseModel):
    status: str = Field(..., description="Overall system health status", example="healthy")
    uptime_seconds: int = Field(..., description="Seconds since startup", example=42)
    startup_checks: Dict[str, Any] = Field(..., description="Result of the startup self-checks")
    limits: Dict[str, int] = Field(
        ...,
        description="Configured size limits",
        example={"oracle_default_cap": 10, "oracle_max_cap": 12}
    )
    documentation: str = Field(..., description="API documentation URL", example="/api-docs")
