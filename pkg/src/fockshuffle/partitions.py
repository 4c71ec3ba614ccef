"""Young diagrams: arms, legs, corners, holes, box characters.

Rows are indexed from 1 and ``lam[i]`` for ``i`` past the last row is 0.
Box ``(i, j)`` sits in row ``i`` and column ``j``.  Following the naming
used throughout this package, the *leg* of a box counts the boxes to its
right and the *arm* counts the boxes below it.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .exact.laurent import LaurentPoly

Box = tuple[int, int]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def row(self, i: int) -> int:
        """Length of row i (1-based); 0 beyond the diagram."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def boxes(self) -> list[Box]:
        return [(i, j) for i in range(1, len(self) + 1) for j in range(1, self[i - 1] + 1)]

    def contains(self, box: Box) -> bool:
        i, j = box
        return i >= 1 and j >= 1 and j <= self.row(i)

    def add_box(self, k: int) -> "Partition":
        """The diagram with a box appended to row k."""
        if k not in addable_rows(self):
            raise ValueError(f"row {k} is not addable to {self}")
        parts = list(self) + [0]
        parts[k - 1] += 1
        return Partition(parts)

    def remove_box(self, k: int) -> "Partition":
        if k not in removable_rows(self):
            raise ValueError(f"row {k} is not removable from {self}")
        parts = list(self)
        parts[k - 1] -= 1
        return Partition(parts)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def multiplicities(self) -> dict[int, int]:
        m: dict[int, int] = {}
        for p in self:
            m[p] = m.get(p, 0) + 1
        return m

    def to_text(self) -> str:
        return "[" + ",".join(str(p) for p in self) + "]"

    def __repr__(self):
        return f"Partition({self.to_text()})"

    __str__ = to_text


def parse_partition(text: str) -> Partition:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"partition must look like [3,1,1], got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return Partition()
    return Partition(int(x) for x in body.split(","))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order ([n] first)."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def gen(n, maxp):
        if n == 0:
            yield ()
            return
        for k in range(min(n, maxp), 0, -1):
            for rest in gen(n - k, k):
                yield (k,) + rest

    return tuple(Partition(p) for p in gen(n, n))


def partitions_upto(n: int) -> list[Partition]:
    return [p for k in range(n + 1) for p in partitions_of(k)]


def leg(lam: Partition, box: Box) -> int:
    """Boxes to the right of ``box`` in its row."""
    _check_box(lam, box)
    i, j = box
    return lam.row(i) - j


def arm(lam: Partition, box: Box) -> int:
    """Boxes below ``box`` in its column."""
    _check_box(lam, box)
    i, j = box
    return sum(1 for p in lam if p >= j) - i


def _check_box(lam: Partition, box: Box):
    if not lam.contains(box):
        raise ValueError(f"box {box} is outside {lam}")


def addable_rows(lam: Partition) -> list[int]:
    """Rows k such that a box can be appended to row k (holes, including the first empty row)."""
    return [k for k in range(1, len(lam) + 2) if k == 1 or lam.row(k - 1) > lam.row(k)]


def removable_rows(lam: Partition) -> list[int]:
    """Rows whose last box is a corner."""
    return [k for k in range(1, len(lam) + 1) if lam.row(k) > lam.row(k + 1)]


def chi(box: Box) -> LaurentPoly:
    """Character t1^(j-1) t2^(i-1) of box (i, j)."""
    i, j = box
    return LaurentPoly.monomial((j - 1, i - 1))


def chi_exponent(box: Box) -> tuple[int, int]:
    i, j = box
    return (j - 1, i - 1)


def sigma_boxes(lam: Partition, box: Box, which: int) -> list[Box]:
    """Boxes of ``lam`` strictly left of ``box`` in its row (1) or strictly above it in its column (2)."""
    i, j = box
    if which == 1:
        return [(i, k) for k in range(1, j) if lam.contains((i, k))]
    if which == 2:
        return [(k, j) for k in range(1, i) if lam.contains((k, j))]
    raise ValueError("which must be 1 or 2")


def character_sum(lam: Partition) -> LaurentPoly:
    """Sum of box characters."""
    return LaurentPoly({chi_exponent(b): 1 for b in lam.boxes()}, 2)


def dominates(lam: Partition, mu: Partition) -> bool:
    """lam >= mu in dominance order (same size assumed)."""
    s1 = s2 = 0
    for k in range(max(len(lam), len(mu))):
        s1 += lam.row(k + 1)
        s2 += mu.row(k + 1)
        if s1 < s2:
            return False
    return True


def dominance_order(n: int, tiebreak: str = "revlex") -> list[Partition]:
    """Partitions of n in a total order refining dominance, smallest first.

    ``revlex`` breaks ties so that lexicographically smaller partitions come
    first; ``conjugate`` breaks ties by the reverse-lexicographic order of
    the conjugates.  Both orders extend dominance.
    """
    parts = list(partitions_of(n))
    if tiebreak == "revlex":
        key = lambda p: tuple(p)  # noqa: E731
    elif tiebreak == "conjugate":
        key = lambda p: tuple(-x for x in p.conjugate())  # noqa: E731
    else:
        raise ValueError(f"unknown tiebreak {tiebreak!r}")
    # lex order on parts and reverse-lex order on conjugates both extend dominance
    return sorted(parts, key=key)


def is_vertical_strip(lam: Partition, mu: Partition) -> bool:
    """lam / mu is a vertical strip: mu inside lam and at most one box per row."""
    if len(lam) < len(mu):
        return False
    return all(0 <= lam.row(i) - mu.row(i) <= 1 for i in range(1, len(lam) + 1))


def strip_rows(lam: Partition, mu: Partition) -> list[int]:
    """Rows of the vertical strip lam / mu, increasing."""
    return [i for i in range(1, len(lam) + 1) if lam.row(i) - mu.row(i) == 1]


def add_rows(mu: Partition, rows: Iterable[int]) -> Partition | None:
    """Add one box to each row in ``rows`` in the given order; None if some step is invalid."""
    lam = mu
    for k in rows:
        if k not in addable_rows(lam):
            return None
        lam = lam.add_box(k)
    return lam
