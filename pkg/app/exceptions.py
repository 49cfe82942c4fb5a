"""Error types raised by the sequence analyses.

Every error carries the CLI exit code and the HTTP status it maps to, so the
two front ends report failures the same way.
"""


class SequenceAnalysisError(ValueError):
    exit_code: int = 1
    http_status: int = 400


class ParseError(SequenceAnalysisError):
    """Malformed sequence or creation text"""


class NotSorted(SequenceAnalysisError):
    """Terms are not supplied in nonincreasing order"""


class TermOutOfRange(SequenceAnalysisError):
    """A term is negative, or at least n for a degree sequence"""


class SequenceTooLong(SequenceAnalysisError):
    http_status = 413


class BadPair(SequenceAnalysisError):
    """Vertex pair is not 1 <= i < j <= n"""


class NotGraphic(SequenceAnalysisError):
    exit_code = 2
    http_status = 422


class TooLarge(SequenceAnalysisError):
    """Sequence is longer than the enumeration cap"""
    exit_code = 3
    http_status = 413


class InvalidPartition(SequenceAnalysisError):
    """A/B/C split violates the degree constraints"""


class EmptyCreation(SequenceAnalysisError):
    pass


class NoForcedStructure(SequenceAnalysisError):
    """No k >= 1 with an Erdos-Gallai difference of at most 1"""
    http_status = 422


class InternalConsistencyError(SequenceAnalysisError):
    """A result failed its own verification; indicates a bug"""
    exit_code = 70
    http_status = 500
