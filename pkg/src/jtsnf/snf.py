"""Smith normal form over F[x] for a field F (QQ or QQ(q)).

Two independent routes: :func:`snf_reduce` does Euclidean elimination and
records the unimodular transforms; :func:`snf_via_minors` takes quotients of
successive gcds of k x k minors.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .exactalg import QQ, ExactAlgebraError, Field, UniPoly, make_monic, poly_gcd


class SnfError(ArithmeticError):
    pass


class RingMatrix:
    """Dense rectangular matrix of :class:`UniPoly` sharing one ring."""

    __slots__ = ("entries", "rows", "cols", "var", "field")

    def __init__(self, entries: Iterable[Iterable[UniPoly]], var: str | None = None,
                 field: Field | None = None):
        rows = [tuple(r) for r in entries]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        self.entries: tuple[tuple[UniPoly, ...], ...] = tuple(rows)
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        sample = rows[0][0] if rows and rows[0] else None
        self.var = var if var is not None else (sample.var if sample is not None else "n")
        self.field = field if field is not None else (sample.field if sample is not None else QQ)
        for r in rows:
            for e in r:
                if e.var != self.var or e.field is not self.field:
                    raise ExactAlgebraError("matrix entries from different rings")

    @classmethod
    def identity(cls, size: int, var: str = "n", field: Field = QQ) -> "RingMatrix":
        one = UniPoly.constant(field.one, var, field)
        zero = one.zero()
        return cls([[one if i == j else zero for j in range(size)] for i in range(size)], var, field)

    @classmethod
    def diagonal(cls, diag: Sequence[UniPoly], rows: int, cols: int, var: str = "n",
                 field: Field = QQ) -> "RingMatrix":
        zero = UniPoly((), var, field)
        return cls([[diag[i] if i == j and i < len(diag) else zero for j in range(cols)]
                    for i in range(rows)], var, field)

    def __getitem__(self, ij: tuple[int, int]) -> UniPoly:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, RingMatrix) and self.entries == other.entries

    def __mul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        zero = UniPoly((), self.var, self.field)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RingMatrix(out, self.var, self.field)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RingMatrix":
        """0-based row/column selection."""
        return RingMatrix([[self.entries[i][j] for j in cols] for i in rows], self.var, self.field)

    def map(self, fn) -> "RingMatrix":
        return RingMatrix([[fn(e) for e in r] for r in self.entries])

    def is_zero(self) -> bool:
        return all(not e for r in self.entries for e in r)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.entries)


@dataclass(frozen=True)
class SnfResult:
    diagonal: tuple[UniPoly, ...]
    left: RingMatrix
    right: RingMatrix
    units_absorbed: object  # det(M) = units_absorbed * prod(diagonal) for square M

    def check(self, m: RingMatrix) -> bool:
        """P*M*Q is the stored diagonal matrix."""
        d = RingMatrix.diagonal(self.diagonal, m.rows, m.cols, m.var, m.field)
        return self.left * m * self.right == d


def snf_reduce(m: RingMatrix) -> SnfResult:
    """Smith form by Euclidean elimination with transform tracking.

    Pivots are nonzero entries of least degree (ties broken by row, then
    column).  Each pivot is scaled to be monic as soon as it is placed; the
    scalings and swaps are folded into ``units_absorbed``.
    """
    rows, cols = m.rows, m.cols
    var, field = m.var, m.field
    a = [list(r) for r in m.entries]
    p = [list(r) for r in RingMatrix.identity(rows, var, field).entries]
    q = [list(r) for r in RingMatrix.identity(cols, var, field).entries]
    det_pq = field.one  # det(P) * det(Q), kept to recover the absorbed unit

    def swap_rows(i, j):
        nonlocal det_pq
        if i != j:
            a[i], a[j] = a[j], a[i]
            p[i], p[j] = p[j], p[i]
            det_pq = -det_pq

    def swap_cols(i, j):
        nonlocal det_pq
        if i != j:
            for r in a:
                r[i], r[j] = r[j], r[i]
            for r in q:
                r[i], r[j] = r[j], r[i]
            det_pq = -det_pq

    def scale_row(i, c):
        nonlocal det_pq
        a[i] = [e * c for e in a[i]]
        p[i] = [e * c for e in p[i]]
        det_pq = det_pq * c

    def addmul_row(dst, src, f):
        # row_dst -= f * row_src
        a[dst] = [x - f * y if y else x for x, y in zip(a[dst], a[src])]
        p[dst] = [x - f * y if y else x for x, y in zip(p[dst], p[src])]

    def addmul_col(dst, src, f):
        for r in a:
            if r[src]:
                r[dst] = r[dst] - f * r[src]
        for r in q:
            if r[src]:
                r[dst] = r[dst] - f * r[src]

    def place_monic(d):
        u = a[d][d].lc
        if u != field.one:
            scale_row(d, field.one / u)

    diag: list[UniPoly] = []
    for d in range(min(rows, cols)):
        best = None
        for i in range(d, rows):
            for j in range(d, cols):
                e = a[i][j]
                if e and (best is None or e.degree < best[0]):
                    best = (e.degree, i, j)
                    if best[0] == 0:
                        break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, i0, j0 = best
        swap_rows(d, i0)
        swap_cols(d, j0)
        place_monic(d)
        while True:
            # clear column d below the pivot
            moved = False
            for i in range(d + 1, rows):
                if a[i][d]:
                    f, r = divmod(a[i][d], a[d][d])
                    addmul_row(i, d, f)
                    if r:
                        moved = True
            if moved:
                i_min = min((i for i in range(d + 1, rows) if a[i][d]), key=lambda i: (a[i][d].degree, i))
                swap_rows(d, i_min)
                place_monic(d)
                continue
            for j in range(d + 1, cols):
                if a[d][j]:
                    f, r = divmod(a[d][j], a[d][d])
                    addmul_col(j, d, f)
                    if r:
                        moved = True
            if moved:
                j_min = min((j for j in range(d + 1, cols) if a[d][j]), key=lambda j: (a[d][j].degree, j))
                swap_cols(d, j_min)
                place_monic(d)
                continue
            # divisibility fix-up: pull an offending row into the pivot row
            bad = None
            piv = a[d][d]
            if piv.degree > 0:
                for i in range(d + 1, rows):
                    for j in range(d + 1, cols):
                        if a[i][j] and a[i][j] % piv:
                            bad = i
                            break
                    if bad is not None:
                        break
            if bad is None:
                break
            a[d] = [x + y for x, y in zip(a[d], a[bad])]
            p[d] = [x + y for x, y in zip(p[d], p[bad])]
        diag.append(a[d][d])

    zero = UniPoly((), var, field)
    diag += [zero] * (min(rows, cols) - len(diag))
    units = field.one / det_pq
    return SnfResult(tuple(diag), RingMatrix(p, var, field), RingMatrix(q, var, field), units)


def det(m: RingMatrix) -> UniPoly:
    """Determinant by fraction-free (Bareiss) elimination with exact division."""
    if m.rows != m.cols:
        raise SnfError("determinant of a non-square matrix")
    size = m.rows
    one = UniPoly.constant(m.field.one, m.var, m.field)
    if size == 0:
        return one
    if size == 1:
        return m.entries[0][0]
    if size == 2:
        (a, b), (c, d) = m.entries
        return a * d - b * c
    a = [list(r) for r in m.entries]
    sign = 1
    prev = one
    for k in range(size - 1):
        if not a[k][k]:
            piv = next((i for i in range(k + 1, size) if a[i][k]), None)
            if piv is None:
                return one.zero()
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, size):
            aik = a[i][k]
            for j in range(k + 1, size):
                num = akk * a[i][j] - aik * a[k][j]
                a[i][j] = num.exact_div(prev) if not prev.is_one() else num
            a[i][k] = one.zero()
        prev = akk
    out = a[-1][-1]
    return -out if sign < 0 else out


def _minor_index_sets(size: int, k: int):
    return list(combinations(range(size), k))


def minors(m: RingMatrix, k: int):
    """Yield ``(rows, cols, det)`` for every k x k minor, rows/cols 0-based, lexicographic."""
    for rs in _minor_index_sets(m.rows, k):
        for cs in _minor_index_sets(m.cols, k):
            yield rs, cs, det(m.submatrix(rs, cs))


def gcd_of_k_minors(m: RingMatrix, k: int) -> UniPoly:
    """Monic gcd of all k x k minors, or zero when every minor vanishes."""
    if not 1 <= k <= min(m.rows, m.cols):
        raise SnfError(f"minor size {k} out of range for a {m.rows}x{m.cols} matrix")
    g = None
    for _, _, d in minors(m, k):
        if not d:
            continue
        g = d.monic() if g is None else poly_gcd(g, d)
        if g.degree == 0:
            return g
    return g if g is not None else UniPoly((), m.var, m.field)


def snf_via_minors(m: RingMatrix) -> tuple[UniPoly, ...]:
    """Smith diagonal as quotients of consecutive minor gcds."""
    prev = UniPoly.constant(m.field.one, m.var, m.field)
    out = []
    for k in range(1, min(m.rows, m.cols) + 1):
        g = gcd_of_k_minors(m, k)
        if not g:
            out.append(g)
            prev = g
            continue
        if not prev:
            raise SnfError("minor gcd chain violated")
        quo, rem = divmod(g, prev)
        if rem:
            raise SnfError("minor gcd chain violated")
        out.append(quo.monic())
        prev = g
    return tuple(out)


def monic_diagonal(diag: Sequence[UniPoly]) -> tuple[UniPoly, ...]:
    return tuple(d.monic() if d else d for d in diag)


def unit_of(p: UniPoly):
    """Leading coefficient when ``p`` is a nonzero constant, else None."""
    if p.degree == 0:
        return make_monic(p)[0]
    return None
