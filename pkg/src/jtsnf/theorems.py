"""Closed-form Smith diagonals for specialised Jacobi-Trudi matrices and the
machinery that checks them: hook-content determinants, the two claims about
the corner submatrices M_k, and exhaustive sweeps.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .exactalg import ONE_Q, RatFuncQ, UniPoly, poly_gcd
from .jacobitrudi import (
    SpecializationKind,
    bracket,
    build_jt,
    minor_matrix,
)
from .partitions import Partition, PartitionError, diagonal_hook, hook_union, partitions_up_to
from .snf import det, gcd_of_k_minors, monic_diagonal, snf_reduce, snf_via_minors

N_POLY = SpecializationKind.N_POLY
QY_POLY = SpecializationKind.QY_POLY
Q_BRACKET = SpecializationKind.Q_BRACKET
METHODS = ("reduce", "minors", "both")


def linear_factor(kind: SpecializationKind, c: int) -> UniPoly:
    """The factor contributed by a cell of content ``c``."""
    if kind is N_POLY:
        return UniPoly((c, 1), "n", kind.field)
    if kind is QY_POLY:
        return UniPoly((ONE_Q, -RatFuncQ.q_power(c)), "y", kind.field)
    return UniPoly((bracket(c), ONE_Q), "y", kind.field)


def factor_str(kind: SpecializationKind, c: int) -> str:
    """Readable form of :func:`linear_factor`, e.g. ``n - 2``, ``1 - q^-1*y``, ``y + [3]``."""
    if kind is N_POLY:
        return "n" if c == 0 else f"n {'+' if c > 0 else '-'} {abs(c)}"
    if kind is QY_POLY:
        return {0: "1 - y", 1: "1 - q*y"}.get(c, f"1 - q^{c}*y")
    return "y" if c == 0 else f"y + [{c}]"


@dataclass(frozen=True)
class PredictedDiagonal:
    kind: SpecializationKind
    entries: tuple[UniPoly, ...]
    factors: tuple[tuple[UniPoly, ...], ...]
    contents: tuple[tuple[int, ...], ...]

    def factored(self) -> list[str]:
        return ["".join(f"({factor_str(self.kind, c)})" for c in cs) if cs else "1"
                for cs in self.contents]


def predict(lam, t: int | None, kind: SpecializationKind = N_POLY) -> PredictedDiagonal:
    """Entry i is the product of the linear factors over the hook D_{t-i+1}."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if t is None:
        t = len(lam)
    if t < len(lam):
        raise PartitionError("t below length")
    one = UniPoly.constant(kind.field.one, kind.var, kind.field)
    entries, factors, contents = [], [], []
    for i in range(1, t + 1):
        cs = tuple(sorted(diagonal_hook(lam, t - i + 1).contents))
        fs = tuple(linear_factor(kind, c) for c in cs)
        prod = one
        for f in fs:
            prod = prod * f
        entries.append(prod)
        factors.append(fs)
        contents.append(cs)
    return PredictedDiagonal(kind, tuple(entries), tuple(factors), tuple(contents))


@dataclass
class VerificationReport:
    shape: Partition
    t: int
    kind: SpecializationKind
    predicted: PredictedDiagonal
    computed: tuple[UniPoly, ...]
    match: bool
    elapsed: float
    method: str
    minors_computed: tuple[UniPoly, ...] | None = None

    def to_json(self) -> dict:
        return {
            "shape": str(self.shape),
            "t": self.t,
            "kind": self.kind.name,
            "predicted": [str(p) for p in monic_diagonal(self.predicted.entries)],
            "computed": [str(c) for c in self.computed],
            "match": self.match,
            "ms": round(self.elapsed * 1000.0, 3),
        }


def verify(lam, t: int | None, kind: SpecializationKind = N_POLY, method: str = "reduce",
           check_transforms: bool = False) -> VerificationReport:
    """Compute the Smith diagonal and compare its monic form to the prediction."""
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if t is None:
        t = len(lam)
    start = time.perf_counter()
    predicted = predict(lam, t, kind)
    m = build_jt(lam, t, kind).entries
    want = monic_diagonal(predicted.entries)
    computed = by_minors = None
    match = True
    if method in ("reduce", "both"):
        res = snf_reduce(m)
        if check_transforms and not res.check(m):
            raise AssertionError(f"bad Smith transforms for {lam}, t={t}, {kind.name}")
        computed = monic_diagonal(res.diagonal)
        match = computed == want
    if method in ("minors", "both"):
        by_minors = snf_via_minors(m)
        match = match and by_minors == want
        if computed is None:
            computed = by_minors
        else:
            match = match and computed == by_minors
    elapsed = time.perf_counter() - start
    return VerificationReport(lam, t, kind, predicted, computed, match, elapsed, method, by_minors)


def hook_content_product(lam) -> UniPoly:
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    out = UniPoly.constant(1, "n")
    for cell in lam.cells():
        out = out * UniPoly((cell.content, 1), "n")
    return out


def hook_content_check(lam, t: int | None = None) -> tuple[Fraction, bool]:
    """det of the N_POLY matrix over prod (n + c(u)); must be a positive constant."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if t is None:
        t = len(lam)
    d = det(build_jt(lam, t, N_POLY).entries)
    quo, rem = divmod(d, hook_content_product(lam))
    if rem or quo.degree != 0:
        return Fraction(0), False
    const = quo.coeffs[0]
    return const, const > 0


def corner_block(lam, t: int, k: int, kind: SpecializationKind = N_POLY):
    """M_k: the last k rows and first k columns of the JT matrix (1-based index lists)."""
    rows = list(range(t - k + 1, t + 1))
    cols = list(range(1, k + 1))
    return rows, cols, minor_matrix(build_jt(lam, t, kind), rows, cols)


def _predicted_prefix(lam, t: int, k: int) -> UniPoly:
    out = UniPoly.constant(1, "n")
    for i in range(1, k + 1):
        for c in diagonal_hook(lam, t - i + 1).contents:
            out = out * UniPoly((c, 1), "n")
    return out


def unit_minor_columns(lam, rows: Sequence[int], t: int) -> list[int] | None:
    """For each row, the column holding its entry h_0 (leftmost such); None if some row has none."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    cols = []
    for i in rows:
        j = i - lam[i]
        if not 1 <= j <= t:
            return None
        cols.append(j)
    return cols


def claim_c1_check(lam, t: int | None, k: int) -> bool:
    """Corner-block claim for one k: a vanishing M_k forces a unit minor.

    If det M_k = 0, take the rows of M_k, pick in each the column of its
    entry 1, and require the resulting minor to be exactly 1.  Otherwise
    require monic(det M_k) to be the product of the hook factors over
    D_t, ..., D_{t-k+1}.
    """
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if t is None:
        t = len(lam)
    if not 1 <= k <= t:
        raise ValueError("need 1 <= k <= t")
    jt = build_jt(lam, t, N_POLY)
    rows, _, mk = corner_block(lam, t, k)
    d = det(mk)
    if not d:
        cols = unit_minor_columns(lam, rows, t)
        if cols is None or any(a >= b for a, b in zip(cols, cols[1:])):
            return False
        return det(minor_matrix(jt, rows, cols)).is_one()
    return d.monic() == _predicted_prefix(lam, t, k)


def minor_gcd_corner_check(lam, t: int | None, k: int) -> bool:
    """Corrected corner-block statement, valid for every t >= len(lam).

    The gcd of the k x k minors equals the Schur polynomial of the union of
    the k innermost diagonal hooks (up to a unit); when that union is empty
    a k x k minor equal to 1 exists.
    """
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if t is None:
        t = len(lam)
    mu = hook_union(lam, t, k)
    jt = build_jt(lam, t, N_POLY)
    if not mu.parts:
        for rows in combinations(range(1, t + 1), k):
            for cols in combinations(range(1, t + 1), k):
                if det(minor_matrix(jt, rows, cols)).is_one():
                    return True
        return False
    return gcd_of_k_minors(jt.entries, k) == hook_content_product(mu).monic()


def claim_c2_check(lam, t: int | None, k: int, samples: int | None = None,
                   seed: int | None = 0) -> bool:
    """Every k x k minor is divisible by det M_k (vacuous when det M_k = 0).

    With ``samples`` set, only that many random (rows, cols) pairs are tested.
    """
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if t is None:
        t = len(lam)
    _, _, mk = corner_block(lam, t, k)
    d = det(mk)
    if not d:
        return True
    jt = build_jt(lam, t, N_POLY)
    row_sets = list(combinations(range(1, t + 1), k))
    pairs: Iterable
    if samples is None:
        pairs = ((r, c) for r in row_sets for c in row_sets)
    else:
        rng = random.Random(seed)
        pairs = [(rng.choice(row_sets), rng.choice(row_sets)) for _ in range(samples)]
    for rows, cols in pairs:
        if not d.divides(det(minor_matrix(jt, rows, cols))):
            return False
    return True


def is_squarefree(p: UniPoly) -> bool:
    if p.degree <= 0:
        return True
    return poly_gcd(p, p.derivative()).degree == 0


@dataclass
class SweepReport:
    cases: list[VerificationReport] = field(default_factory=list)
    total_ms: float = 0.0

    @property
    def failures(self) -> list[VerificationReport]:
        return [c for c in self.cases if not c.match]

    def merge(self, other: "SweepReport") -> "SweepReport":
        return SweepReport(self.cases + other.cases, self.total_ms + other.total_ms)

    def to_json(self) -> dict:
        return {
            "cases": [c.to_json() for c in self.cases],
            "failures": [c.to_json() for c in self.failures],
            "total_ms": round(self.total_ms, 3),
        }


def sweep_cases(max_weight: int, extra_rows: int, kinds: Iterable[SpecializationKind]):
    """(lam, t, kind) in sweep order: weight ascending, reverse-lex within a weight.

    A 0 x 0 matrix is skipped, so the empty partition starts at t = 1.
    """
    kinds = list(kinds)
    for lam in partitions_up_to(max_weight):
        for t in range(max(len(lam), 1), len(lam) + extra_rows + 1):
            for kind in kinds:
                yield lam, t, kind


def _run_case(args) -> VerificationReport:
    lam, t, kind, method = args
    return verify(lam, t, kind, method)


def sweep(max_weight: int, extra_rows: int = 0, kinds: Iterable[SpecializationKind] = (N_POLY,),
          method: str = "reduce", workers: int = 1) -> SweepReport:
    """Verify every case up to the bounds; failures are collected, not raised."""
    if max_weight < 0 or extra_rows < 0:
        raise ValueError("sweep bounds must be non-negative")
    cases = [(lam, t, kind, method) for lam, t, kind in sweep_cases(max_weight, extra_rows, kinds)]
    start = time.perf_counter()
    if workers > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_case, cases, chunksize=4))
    else:
        results = [_run_case(c) for c in cases]
    return SweepReport(results, (time.perf_counter() - start) * 1000.0)
