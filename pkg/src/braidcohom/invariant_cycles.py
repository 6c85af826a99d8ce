"""Full invariant cycle sets: the complete invariant of a double coset.

A marked configuration ``delta`` is a 0/1 vector of length ``n``; cutting it
into consecutive blocks of sizes ``lambda_1, ..., lambda_j`` and recording the
gaps between marks in each block (up to rotation) gives one cycle invariant
per block. Within runs of equal parts the list is kept in normal form: more
marks first, then lexicographically smaller cycles, Empty last.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import Iterator, Sequence

from .combinatorics import Partition, partitions_with_parts
from .necklace import EMPTY, canonical_rotation, cycle_is_admissible, enumerate_admissible_cycles


def _order_key(chi: tuple[int, ...]):
    return (-len(chi), chi)


def normalize(partition: Partition, cycles: Sequence[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    out = [canonical_rotation(c) for c in cycles]
    for start, length, _ in partition.runs():
        out[start:start + length] = sorted(out[start:start + length], key=_order_key)
    return tuple(out)


@dataclass(frozen=True)
class FullInvariantSet:
    partition: Partition
    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cycles = tuple(tuple(c) for c in self.cycles)
        object.__setattr__(self, "cycles", cycles)
        if len(cycles) != self.partition.j:
            raise ValueError(f"{len(cycles)} cycles for a partition with {self.partition.j} parts")
        for lam, chi in zip(self.partition, cycles):
            if len(chi) > lam:
                raise ValueError(f"{len(chi)} marks on a part of size {lam}")
            if chi and sum(chi) != lam - len(chi):
                raise ValueError(f"cycle {chi} on part {lam} must sum to {lam - len(chi)}")
            if any(a < 0 for a in chi):
                raise ValueError(f"negative gap in {chi}")

    @property
    def q(self) -> int:
        return sum(len(c) for c in self.cycles)

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def degree(self) -> int:
        return self.partition.degree

    def marks(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)

    def is_normal(self) -> bool:
        return normalize(self.partition, self.cycles) == self.cycles

    def normal_form(self) -> "FullInvariantSet":
        return FullInvariantSet(self.partition, normalize(self.partition, self.cycles))

    def label(self) -> str:
        """Text label, e.g. ``λ=(6,6,3,2,1,1); χ=[(0,1,2),(0,1,2),(2),(0,0),(0),-]``."""
        parts = [("(" + ",".join(map(str, c)) + ")") if c else "-" for c in self.cycles]
        return f"λ={self.partition}; χ=[{','.join(parts)}]"


def chi_from_delta(partition: Partition, delta: Sequence[int]) -> FullInvariantSet:
    delta = tuple(int(b) for b in delta)
    if len(delta) != partition.n:
        raise ValueError(f"delta has length {len(delta)}, partition needs {partition.n}")
    if any(b not in (0, 1) for b in delta):
        raise ValueError("delta entries must be 0 or 1")
    cycles = []
    for off, lam in zip(partition.offsets(), partition):
        marks = [t for t in range(lam) if delta[off + t]]
        if not marks:
            cycles.append(EMPTY)
            continue
        gaps = [b - a - 1 for a, b in zip(marks, marks[1:])]
        gaps.append(lam - marks[-1] + marks[0] - 1)
        cycles.append(tuple(gaps))
    return FullInvariantSet(partition, normalize(partition, cycles))


def delta_from_chi(chi_set: FullInvariantSet) -> tuple[int, ...]:
    """Canonical marked vector: each block's first mark sits at the block start."""
    delta = [0] * chi_set.n
    for off, chi in zip(chi_set.partition.offsets(), chi_set.cycles):
        pos = off
        for gap in chi:
            delta[pos] = 1
            pos += gap + 1
    return tuple(delta)


def is_admissible(chi_set: FullInvariantSet) -> bool:
    """Whether the double coset labelled by ``chi_set`` carries an invariant."""
    parts, cycles = chi_set.partition.parts, chi_set.cycles
    for lam, chi in zip(parts, cycles):
        if not cycle_is_admissible(lam, chi):
            return False
    for i in range(len(parts) - 1):
        if parts[i] == parts[i + 1] and parts[i] % 2 == 0:
            a, b = cycles[i], cycles[i + 1]
            if not (len(a) > len(b) or (len(a) == len(b) and a < b)):
                return False
    return True


def _check_range(n: int, q: int, degree: int) -> None:
    if not 0 <= q <= n - q:
        raise ValueError(f"require n−q ≥ q ≥ 0, got n={n}, q={q}")
    if not 0 <= degree <= n - 1:
        raise ValueError(f"degree must lie in 0..{n - 1}, got {degree}")


def _admissible_sets_for(partition: Partition, q: int) -> Iterator[FullInvariantSet]:
    n = partition.n
    groups = defaultdict(int)
    for lam in partition.big_parts():
        groups[lam] += 1
    ones = partition.num_ones()
    lower = max(0, q - ones)

    choices = []
    for lam, m in groups.items():  # parts are decreasing, so dict order is too
        options = []
        for d in range(min(lam, q), -1, -1):
            options.extend(enumerate_admissible_cycles(lam, d))
        pick = combinations_with_replacement if lam % 2 else combinations
        choices.append(list(pick(options, m)))

    for combo in product(*choices):
        used = sum(len(c) for group in combo for c in group)
        if not lower <= used <= q:
            continue
        cycles = [c for group in combo for c in group]
        cycles += [(0,)] * (q - used) + [EMPTY] * (ones - (q - used))
        yield FullInvariantSet(partition, tuple(cycles))
    del n


def enumerate_admissible_sets(n: int, q: int, degree: int) -> list[FullInvariantSet]:
    """Every admissible normal-form invariant set for ``(n, q)`` in the given degree."""
    _check_range(n, q, degree)
    out = []
    for partition in partitions_with_parts(n, n - degree):
        out.extend(_admissible_sets_for(partition, q))
    return out


def stability_map(chi_set: FullInvariantSet) -> FullInvariantSet:
    """Add one mark on an unmarked 1-part, carrying a ``(n, q)`` label to ``(n, q + 1)``."""
    n, q = chi_set.n, chi_set.q
    if chi_set.degree > n - q - 2:
        raise ValueError(f"degree {chi_set.degree} is outside the injective range ≤ {n - q - 2}")
    parts = chi_set.partition.parts
    cycles = list(chi_set.cycles)
    for i, (lam, chi) in enumerate(zip(parts, cycles)):
        if lam == 1 and chi == EMPTY:
            cycles[i] = (0,)
            return FullInvariantSet(chi_set.partition, normalize(chi_set.partition, cycles))
    raise ValueError("no unmarked 1-part: the set is outside the stability map's domain")


def all_chi_sets(partition: Partition, q: int) -> set[FullInvariantSet]:
    """Every invariant set reached by some weight-``q`` marking (brute force over deltas)."""
    out = set()
    for marked in combinations(range(partition.n), q):
        delta = [0] * partition.n
        for i in marked:
            delta[i] = 1
        out.add(chi_from_delta(partition, delta))
    return out
