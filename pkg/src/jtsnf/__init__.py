"""Smith normal forms of specialised Jacobi-Trudi matrices."""

from .exactalg import QQ, QQ_q, RatFuncQ, UniPoly, make_monic, poly_divrem, poly_gcd, ratfunc_arith
from .jacobitrudi import (
    ZERO_MINOR,
    JTMatrix,
    SpecializationKind,
    ZeroMarker,
    bracket,
    build_jt,
    f_bracket,
    phi_h,
    q_h,
    submatrix_to_skew,
)
from .partitions import (
    Cell,
    DiagonalHook,
    Partition,
    SkewShape,
    conjugate,
    diagonal_hook,
    hook_union,
    lr_coefficient,
    rank,
    ssyt_count,
)
from .snf import RingMatrix, SnfResult, det, gcd_of_k_minors, snf_reduce, snf_via_minors
from .theorems import (
    PredictedDiagonal,
    VerificationReport,
    claim_c1_check,
    claim_c2_check,
    hook_content_check,
    predict,
    sweep,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "ZERO_MINOR",
    "JTMatrix",
    "SpecializationKind",
    "ZeroMarker",
    "bracket",
    "build_jt",
    "f_bracket",
    "phi_h",
    "q_h",
    "submatrix_to_skew",
    "Cell",
    "DiagonalHook",
    "Partition",
    "SkewShape",
    "conjugate",
    "diagonal_hook",
    "hook_union",
    "lr_coefficient",
    "rank",
    "ssyt_count",
    "PredictedDiagonal",
    "VerificationReport",
    "claim_c1_check",
    "claim_c2_check",
    "hook_content_check",
    "predict",
    "sweep",
    "verify",
    "QQ",
    "QQ_q",
    "RatFuncQ",
    "UniPoly",
    "make_monic",
    "poly_divrem",
    "poly_gcd",
    "ratfunc_arith",
    "RingMatrix",
    "SnfResult",
    "det",
    "gcd_of_k_minors",
    "snf_reduce",
    "snf_via_minors",
]
