"""Partitions, diagonal hooks, skew shapes, SSYT counts and LR coefficients.

Cells are 1-based ``(row, col)`` pairs in English notation; the content of
cell ``(i, j)`` is ``j - i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence


class PartitionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts; trailing zeros are dropped."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise PartitionError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"parts not weakly decreasing: {parts}")
        if any(p == 0 for p in parts):
            raise PartitionError(f"zero part inside {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``7,5,5,2``; ``-`` or the empty string is the empty partition."""
        text = text.strip()
        if text in ("", "-", "()", "∅"):
            return cls(())
        try:
            parts = tuple(int(x) for x in text.strip("()").split(","))
        except ValueError:
            raise PartitionError(f"bad partition syntax: {text!r}") from None
        return cls(parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "-"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based part access, zero past the length."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1] if i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self, t: int) -> tuple[int, ...]:
        return self.parts + (0,) * (t - len(self.parts))

    def cells(self) -> Iterator["Cell"]:
        for i, p in enumerate(self.parts, 1):
            for j in range(1, p + 1):
                yield Cell(i, j)

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(self[i] >= other[i] for i in range(1, len(other) + 1))


class Cell(NamedTuple):
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = field(default_factory=Partition)

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise PartitionError(f"{self.inner} is not contained in {self.outer}")

    @classmethod
    def parse(cls, text: str) -> "SkewShape":
        outer, _, inner = text.partition("/")
        return cls(Partition.parse(outer), Partition.parse(inner))

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def rows(self) -> list[tuple[int, int]]:
        """Per row ``i`` (1-based), the column range ``(inner_i, outer_i]`` as a pair."""
        return [(self.inner[i], self.outer[i]) for i in range(1, len(self.outer) + 1)]

    def cells(self) -> Iterator[Cell]:
        for i, (lo, hi) in enumerate(self.rows(), 1):
            for j in range(lo + 1, hi + 1):
                yield Cell(i, j)


@dataclass(frozen=True)
class DiagonalHook:
    index: int
    cells: tuple[Cell, ...]

    @property
    def contents(self) -> list[int]:
        return [c.content for c in self.cells]

    def __bool__(self) -> bool:
        return bool(self.cells)


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


def conjugate(lam) -> Partition:
    lam = _as_partition(lam)
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def rank(lam) -> int:
    """Durfee square side: the largest ``i`` with ``lam_i >= i``."""
    lam = _as_partition(lam)
    r = 0
    for i, p in enumerate(lam.parts, 1):
        if p >= i:
            r = i
        else:
            break
    return r


def diagonal_hook(lam, k: int) -> DiagonalHook:
    """Cells ``(k, j)`` with ``j >= k`` and ``(i, k)`` with ``i > k``."""
    if k < 1:
        raise PartitionError("hook index must be >= 1")
    lam = _as_partition(lam)
    if lam[k] < k:
        return DiagonalHook(k, ())
    arm = tuple(Cell(k, j) for j in range(k, lam[k] + 1))
    leg = tuple(Cell(i, k) for i in range(k + 1, conjugate(lam)[k] + 1))
    return DiagonalHook(k, arm + leg)


def hook_union(lam, t: int, k: int) -> Partition:
    """The union of the hooks ``D_{t-k+1}, ..., D_t`` as a partition.

    Those are the cells with both coordinates above ``t - k``; the shape is
    returned shifted back to the corner.
    """
    lam = _as_partition(lam)
    if not 1 <= k <= t:
        raise PartitionError(f"need 1 <= k <= t, got k={k}, t={t}")
    if t < len(lam):
        raise PartitionError("t below length")
    s = t - k
    return Partition(tuple(max(lam[s + a] - s, 0) for a in range(1, k + 1)))


def partitions_of(n: int) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for p in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - p, p):
                yield (p,) + rest

    for parts in gen(n, n):
        yield Partition(parts)


def partitions_up_to(max_weight: int) -> Iterator[Partition]:
    for w in range(max_weight + 1):
        yield from partitions_of(w)


def subpartitions(rho) -> Iterator[Partition]:
    """All partitions contained in ``rho``."""
    rho = _as_partition(rho)

    def gen(i, bound):
        if i > len(rho):
            yield ()
            return
        for p in range(min(bound, rho[i]), -1, -1):
            if p == 0:
                yield ()
            else:
                for rest in gen(i + 1, p):
                    yield (p,) + rest

    for parts in gen(1, rho[1]):
        yield Partition(parts)


# ---------------------------------------------------------------------------
# tableaux


def _as_skew(shape) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape
    return SkewShape(_as_partition(shape))


def ssyt_count(shape, max_entry: int) -> int:
    """Number of SSYT of a (skew) shape with entries in ``1..max_entry``.

    Columns are filled left to right, each top to bottom with strictly
    increasing entries, and each entry must be at least its left neighbour.
    Completions are memoised on (column, previous column filling).
    """
    shape = _as_skew(shape)
    n = max_entry
    if shape.size == 0:
        return 1
    if n <= 0:
        return 0
    rows = shape.rows()
    width = shape.outer[1]
    # column j occupies rows (top, bottom] in 1-based row numbers
    cols = []
    for j in range(1, width + 1):
        present = [i for i, (lo, hi) in enumerate(rows, 1) if lo < j <= hi]
        cols.append((present[0], present[-1]) if present else None)

    @lru_cache(maxsize=None)
    def count(j: int, prev: tuple) -> int:
        # prev: (first_row, entries) of column j-1, or () if absent
        if j > width:
            return 1
        span = cols[j - 1]
        if span is None:
            return count(j + 1, ())
        top, bottom = span
        height = bottom - top + 1
        left = {}
        if prev:
            r0, vals = prev
            for off, v in enumerate(vals):
                left[r0 + off] = v
        total = 0
        filling = [0] * height

        def place(pos: int, lower: int):
            nonlocal total
            if pos == height:
                total += count(j + 1, (top, tuple(filling)))
                return
            lo = max(lower, left.get(top + pos, 1))
            hi = n - (height - pos - 1)
            for v in range(lo, hi + 1):
                filling[pos] = v
                place(pos + 1, v + 1)

        place(0, 1)
        return total

    return count(1, ())


def is_lattice_word(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for w in word:
        counts[w] = counts.get(w, 0) + 1
        if w > 1 and counts[w] > counts.get(w - 1, 0):
            return False
    return True


def lr_tableaux(rho, sigma, tau) -> Iterator[dict]:
    """LR tableaux of shape ``rho/sigma`` and content ``tau``.

    The reverse reading word reads each row right to left, top row first; it
    must be a lattice word.  Cells are filled in that same order so the
    lattice condition is checked as each entry is placed.
    """
    rho, sigma, tau = map(_as_partition, (rho, sigma, tau))
    if not rho.contains(sigma) or rho.size != sigma.size + tau.size:
        return
    order = [
        Cell(i, j)
        for i in range(1, len(rho) + 1)
        for j in range(rho[i], sigma[i], -1)
    ]
    m = len(tau)
    counts = [0] * (m + 1)
    filling: dict[Cell, int] = {}

    def place(pos: int):
        if pos == len(order):
            yield dict(filling)
            return
        i, j = order[pos]
        hi = filling.get(Cell(i, j + 1), m)
        lo = 1
        above = Cell(i - 1, j)
        if above in filling:
            lo = filling[above] + 1
        for v in range(lo, min(hi, m) + 1):
            if counts[v] >= tau[v]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[order[pos]] = v
            yield from place(pos + 1)
            del filling[order[pos]]
            counts[v] -= 1

    yield from place(0)


def lr_coefficient(rho, sigma, tau) -> int:
    """Littlewood-Richardson coefficient ``c^rho_{sigma, tau}``; 0 when sizes or containment fail."""
    return sum(1 for _ in lr_tableaux(rho, sigma, tau))
