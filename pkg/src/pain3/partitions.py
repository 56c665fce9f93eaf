"""Young diagrams and the hook-length quantities used by the instanton sum."""

from __future__ import annotations

import operator
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

MAX_SIZE = 64


class Partition(tuple):
    """A Young diagram stored as a weakly decreasing tuple of positive parts.

    Being a tuple, partitions are immutable, hashable and compare
    lexicographically.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        parts = tuple(operator.index(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def transpose(self) -> "Partition":
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def part(self, k: int) -> int:
        """1-based row length, zero past the last row."""
        return self[k - 1] if k <= len(self) else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        """Cells (row, column), both 1-based."""
        for k, p in enumerate(self, start=1):
            for l in range(1, p + 1):
                yield k, l

    def hooks(self) -> list[int]:
        conj = self.transpose()
        return [self[k - 1] - l + conj[l - 1] - k + 1 for k, l in self.cells()]

    def __repr__(self):
        return f"Partition({list(self)})"


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partition_table(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> enumerate_partitions(3)
    [Partition([3]), Partition([2, 1]), Partition([1, 1, 1])]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_SIZE:
        raise ValueError(f"partitions beyond size {MAX_SIZE} are not supported")
    return list(_partition_table(n))


def partition_count(n: int) -> int:
    """p(n) from Euler's pentagonal recurrence (independent of the enumerator)."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def dim_ratio_exact(lam: Partition) -> Fraction:
    """dim(lam) / |lam|! = 1 / (product of hook lengths), exactly."""
    denom = 1
    for h in lam.hooks():
        denom *= h
    return Fraction(1, denom)


def dim_ratio(lam: Partition) -> float:
    out = 1.0
    for h in lam.hooks():
        out /= h
    return out


def dimension(lam: Partition) -> int:
    """Dimension of the irreducible S_n representation labelled by ``lam``."""
    d = dim_ratio_exact(lam)
    n = lam.size
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    value = d * fact
    assert value.denominator == 1
    return int(value)
