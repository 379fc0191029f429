"""Integer partitions and cross-section counts (exact integer arithmetic)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod


@dataclass(frozen=True)
class PartitionVector:
    """Multiplicities ``j[i-1]`` of the part ``i`` in a partition of ``n``."""

    n: int
    j: tuple[int, ...]

    def __post_init__(self):
        if len(self.j) != self.n or any(v < 0 for v in self.j):
            raise ValueError(f"bad multiplicity vector {self.j} for n={self.n}")
        if sum(i * v for i, v in enumerate(self.j, 1)) != self.n:
            raise ValueError(f"{self.j} is not a partition of {self.n}")

    def parts(self) -> list[int]:
        return [i for i in range(self.n, 0, -1) for _ in range(self.j[i - 1])]


def _partitions(n: int, largest: int):
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def partition_vectors(n: int) -> list[PartitionVector]:
    """Partitions of ``n`` by enumeration, in reverse-lexicographic order of parts.

    ``n`` first, ``1 + ... + 1`` last.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for parts in _partitions(n, n):
        j = [0] * n
        for k in parts:
            j[k - 1] += 1
        out.append(PartitionVector(n, tuple(j)))
    return out


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def count_r_cross_sections_isn(n: int) -> int:
    """Number of ordered partitions of {1..n}: sum over set partitions of prod |M_i|!.

    Grouped by block-size multiplicities this is ``sum n! / prod_k j_k!``.
    """
    return sum(factorial(n) // prod(factorial(v) for v in pv.j) for pv in partition_vectors(n))


def count_noniso_isn(n: int) -> int:
    return partition_count(n)


def noniso_wreath_terms(m: int, n: int) -> list[tuple[PartitionVector, int]]:
    """``(j, prod_i C(p_m + j_i - 1, j_i))`` for each partition vector of ``n``."""
    pm = partition_count(m)
    return [(pv, prod(comb(pm + ji - 1, ji) for ji in pv.j)) for pv in partition_vectors(n)]


def count_noniso_wreath(m: int, n: int) -> int:
    """Non-isomorphic R-cross-sections of IS_m wr_p IS_n.

    Each block size ``i`` occurring ``j_i`` times contributes the number of
    multisets of size ``j_i`` drawn from the ``p_m`` inner isomorphism types.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    return sum(v for _, v in noniso_wreath_terms(m, n))
