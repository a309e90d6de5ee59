"""Timed words, timed tableaux, Knuth rewriting, Greene invariants, and the
real-matrix RSK correspondence, all over exact rational durations."""

from .errors import (
    AlphabetError,
    DurationError,
    IntervalError,
    InterleavingError,
    InvalidMoveError,
    MatrixError,
    NotARowError,
    NotATableauError,
    OracleCapError,
    ParseError,
    ReconstructionError,
    ShapeMismatchError,
    TimedTabError,
)
from .greene import DEFAULT_ORACLE_CAP, greene, greene_oracle
from .insertion import delete, insert, insertion_tableau, rins, rins_inverse
from .knuth import (
    BACKWARD,
    FORWARD,
    K1,
    K2,
    KnuthMove,
    apply_move,
    equivalent,
    normalize_with_trace,
)
from .rsk import (
    LeadingSequence,
    NonNegMatrix,
    column_word,
    gt_partial_sum_check,
    leading_points,
    row_word,
    rsk,
    rsk_inverse,
    rsk_recording,
    rsk_shadows,
    shadow_pass,
)
from .tableaux import (
    GTPattern,
    RealPartition,
    TimedTableau,
    dominates,
    from_gt,
    inflate,
    interleaves,
)
from .words import IntervalSet, TimedWord, concat, duration_str, to_duration

__version__ = "0.1.0"

__all__ = [
    "AlphabetError",
    "BACKWARD",
    "DEFAULT_ORACLE_CAP",
    "DurationError",
    "FORWARD",
    "GTPattern",
    "IntervalError",
    "IntervalSet",
    "InterleavingError",
    "InvalidMoveError",
    "K1",
    "K2",
    "KnuthMove",
    "LeadingSequence",
    "MatrixError",
    "NonNegMatrix",
    "NotARowError",
    "NotATableauError",
    "OracleCapError",
    "ParseError",
    "RealPartition",
    "ReconstructionError",
    "ShapeMismatchError",
    "TimedTabError",
    "TimedTableau",
    "TimedWord",
    "apply_move",
    "column_word",
    "concat",
    "delete",
    "dominates",
    "duration_str",
    "equivalent",
    "from_gt",
    "greene",
    "greene_oracle",
    "gt_partial_sum_check",
    "inflate",
    "insert",
    "insertion_tableau",
    "interleaves",
    "leading_points",
    "normalize_with_trace",
    "rins",
    "rins_inverse",
    "row_word",
    "rsk",
    "rsk_inverse",
    "rsk_recording",
    "rsk_shadows",
    "shadow_pass",
    "to_duration",
]
