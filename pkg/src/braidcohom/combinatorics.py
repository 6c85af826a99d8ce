"""Exact integer combinatorics shared by the rest of the package.

Everything here works on Python ints, so no counting path can overflow or
round.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator, Sequence


@dataclass(frozen=True, order=True)
class Partition:
    """A partition of ``n`` stored as a weakly decreasing tuple of parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def j(self) -> int:
        return len(self.parts)

    @property
    def degree(self) -> int:
        """Cohomological degree ``n - j`` this partition contributes to."""
        return self.n - self.j

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def big_parts(self) -> tuple[int, ...]:
        return tuple(p for p in self.parts if p >= 2)

    def num_ones(self) -> int:
        return sum(1 for p in self.parts if p == 1)

    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for p in self.parts:
            out.append(acc)
            acc += p
        return tuple(out)

    def runs(self) -> list[tuple[int, int, int]]:
        """Maximal runs of equal parts as ``(start_index, length, part)``."""
        out = []
        i = 0
        while i < len(self.parts):
            k = i
            while k + 1 < len(self.parts) and self.parts[k + 1] == self.parts[i]:
                k += 1
            out.append((i, k - i + 1, self.parts[i]))
            i = k + 1
        return out

    def centralizer_order(self) -> int:
        """``|Z_lambda| = prod p^m * m!`` over distinct parts ``p`` of multiplicity ``m``."""
        return prod(p**m * factorial(m) for p, m in self.multiplicities().items())

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def _partitions_bounded(n: int, j: int, largest: int) -> Iterator[tuple[int, ...]]:
    # reverse-lexicographic: try the biggest first part first
    if j == 0:
        if n == 0:
            yield ()
        return
    if n < j:
        return
    hi = min(largest, n - (j - 1))
    lo = -(-n // j)  # first part is at least the average
    for first in range(hi, lo - 1, -1):
        for rest in _partitions_bounded(n - first, j - 1, first):
            yield (first,) + rest


def partitions_with_parts(n: int, j: int) -> list[Partition]:
    """All partitions of ``n`` with exactly ``j`` parts, reverse-lexicographic."""
    if n < 1 or j < 1 or j > n:
        raise ValueError(f"need 1 <= j <= n, got n={n}, j={j}")
    return [Partition(p) for p in _partitions_bounded(n, j, n)]


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` (``n >= 1``) ordered by number of parts, then reverse-lex."""
    out: list[Partition] = []
    for j in range(1, n + 1):
        out.extend(partitions_with_parts(n, j))
    return out


@dataclass(frozen=True)
class Composition:
    terms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if any(t < 1 for t in self.terms):
            raise ValueError(f"composition terms must be positive: {self.terms}")

    @property
    def total(self) -> int:
        return sum(self.terms)


def compositions(total: int, b: int) -> list[Composition]:
    """Ordered ``b``-tuples of positive integers summing to ``total``.

    Lexicographic order. ``b > total`` yields an empty list.
    """
    if b < 1:
        raise ValueError(f"need b >= 1, got {b}")

    def rec(rem: int, k: int) -> Iterator[tuple[int, ...]]:
        if k == 1:
            if rem >= 1:
                yield (rem,)
            return
        for first in range(1, rem - k + 2):
            for rest in rec(rem - first, k - 1):
                yield (first,) + rest

    return [Composition(t) for t in rec(total, b)]


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero when ``k > n`` or ``k < 0``."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def multinomial(total: int, parts: Sequence[int]) -> int:
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial parts must be nonnegative: {parts}")
    if sum(parts) != total:
        raise ValueError(f"multinomial parts {list(parts)} do not sum to {total}")
    out, rem = 1, total
    for p in parts:
        out *= comb(rem, p)
        rem -= p
    return out


@lru_cache(maxsize=None)
def _stirling_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = (prev[k - 1] if k - 1 < len(prev) else 0) + (n - 1) * (prev[k] if k < len(prev) else 0)
    return tuple(row)


def stirling_cycle(n: int, j: int) -> int:
    """Unsigned Stirling number of the first kind: permutations of ``n`` with ``j`` cycles."""
    if n < 1 or j < 1 or j > n:
        raise ValueError(f"need 1 <= j <= n, got n={n}, j={j}")
    return _stirling_row(n)[j]


def prime_factors(m: int) -> list[int]:
    """Distinct primes dividing ``m`` in increasing order."""
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def euler_phi(m: int) -> int:
    out = m
    for p in prime_factors(m):
        out -= out // p
    return out


def divisors(m: int) -> list[int]:
    return [k for k in range(1, m + 1) if m % k == 0]
