"""Specialised Jacobi-Trudi matrices and the submatrix -> skew shape map."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .exactalg import ONE_Q, QQ, QQ_q, RatFuncQ, UniPoly
from .partitions import Partition, PartitionError, SkewShape
from .snf import RingMatrix


class SpecializationKind(enum.Enum):
    N_POLY = "n"  # x_1 = ... = x_n = 1, entries in QQ[n]
    QY_POLY = "qy"  # x_i = q^(i-1), q^n = y, entries in QQ(q)[y]
    Q_BRACKET = "qbracket"  # q-bracket variant, entries in QQ(q)[y]

    @property
    def var(self) -> str:
        return "n" if self is SpecializationKind.N_POLY else "y"

    @property
    def field(self):
        return QQ if self is SpecializationKind.N_POLY else QQ_q

    @classmethod
    def parse(cls, text: str) -> "SpecializationKind":
        for k in cls:
            if text in (k.value, k.name):
                return k
        raise ValueError(f"unknown ring {text!r}")


class ZeroMarker:
    """Returned by :func:`submatrix_to_skew` when the minor vanishes identically."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO_MINOR"

    __str__ = __repr__


ZERO_MINOR = ZeroMarker()


@lru_cache(maxsize=None)
def phi_h(i: int) -> UniPoly:
    """binom(n+i-1, i) as a polynomial in n."""
    if i < 0:
        return UniPoly((), "n", QQ)
    out = UniPoly.constant(1, "n", QQ)
    n = UniPoly.gen("n", QQ)
    for m in range(i):
        out = out * (n + m)
    return out * Fraction(1, factorial(i))


@lru_cache(maxsize=None)
def bracket(k: int) -> RatFuncQ:
    """The q-integer (1 - q^k)/(1 - q)."""
    return (ONE_Q - RatFuncQ.q_power(k)) / (ONE_Q - RatFuncQ.q_power(1))


@lru_cache(maxsize=None)
def q_h(i: int) -> UniPoly:
    """h_i(1, q, ..., q^(n-1)) written in y = q^n.

    prod_{j<i} (1 - q^j y) / prod_{j=1..i} (1 - q^j).
    """
    if i < 0:
        return UniPoly((), "y", QQ_q)
    out = UniPoly.constant(ONE_Q, "y", QQ_q)
    denom = ONE_Q
    for j in range(i):
        out = out * UniPoly((ONE_Q, -RatFuncQ.q_power(j)), "y", QQ_q)
        denom = denom * (ONE_Q - RatFuncQ.q_power(j + 1))
    return out * denom.inverse()


@lru_cache(maxsize=None)
def f_bracket(k: int) -> UniPoly:
    """y (y+(1)) ... (y+(k-1)) / ((1)(2)...(k)); f(0) = 1, f(k<0) = 0."""
    if k < 0:
        return UniPoly((), "y", QQ_q)
    out = UniPoly.constant(ONE_Q, "y", QQ_q)
    denom = ONE_Q
    for j in range(k):
        out = out * UniPoly((bracket(j), ONE_Q), "y", QQ_q)
        denom = denom * bracket(j + 1)
    return out * denom.inverse()


_ENTRY = {
    SpecializationKind.N_POLY: phi_h,
    SpecializationKind.QY_POLY: q_h,
    SpecializationKind.Q_BRACKET: f_bracket,
}


def h_image(kind: SpecializationKind, i: int) -> UniPoly:
    return _ENTRY[kind](i)


@dataclass(frozen=True)
class JTMatrix:
    shape: Partition
    rows: int
    kind: SpecializationKind
    entries: RingMatrix


def _partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


def build_jt(lam, t: int | None, kind: SpecializationKind = SpecializationKind.N_POLY) -> JTMatrix:
    """The t x t matrix [h_{lam_i + j - i}] under the chosen specialisation."""
    lam = _partition(lam)
    if t is None:
        t = len(lam)
    if t < len(lam):
        raise PartitionError("t below length")
    parts = lam.padded(t)
    entries = [[h_image(kind, parts[i] + j - i) for j in range(t)] for i in range(t)]
    return JTMatrix(lam, t, kind, RingMatrix(entries, kind.var, kind.field))


def _check_indices(idx: Sequence[int], t: int) -> tuple[int, ...]:
    idx = tuple(idx)
    if not idx or any(not 1 <= x <= t for x in idx) or any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError(f"index set {idx} must be strictly increasing within 1..{t}")
    return idx


def submatrix_to_skew(lam, t: int, rows: Sequence[int], cols: Sequence[int]):
    """Skew shape whose Jacobi-Trudi matrix is the (1-based) submatrix, or ZERO_MINOR.

    With ``C = cols[-1] - k``: ``rho_a = lam_{i_a} - i_a + a + C`` and
    ``sigma_b = C - j_b + b``, so ``sigma_k = 0``.  If some ``rho_a < sigma_a``
    then the lower-left block of zeros is too large and the minor is 0.
    """
    lam = _partition(lam)
    rows, cols = _check_indices(rows, t), _check_indices(cols, t)
    if len(rows) != len(cols):
        raise ValueError("row and column index sets differ in size")
    k = len(rows)
    c = cols[-1] - k
    rho = [lam[i] - i + a + c for a, i in enumerate(rows, 1)]
    sigma = [c - j + b for b, j in enumerate(cols, 1)]
    if any(r < s for r, s in zip(rho, sigma)):
        return ZERO_MINOR
    return SkewShape(Partition(tuple(rho)), Partition(tuple(sigma)))


def minor_matrix(jt: JTMatrix, rows: Sequence[int], cols: Sequence[int]) -> RingMatrix:
    """1-based submatrix of a JT matrix."""
    return jt.entries.submatrix([i - 1 for i in rows], [j - 1 for j in cols])
