"""Brute-force dimensions from the centralizer characters.

For every partition ``lambda`` the degree ``n - j`` cohomology is a sum of
representations induced from one-dimensional characters ``zeta`` of the
centralizer ``Z_lambda``. A double coset ``G s Z_lambda`` contributes one
invariant exactly when ``zeta`` is trivial on every ``z`` with
``s z s^-1`` in ``G``. This module builds ``Z_lambda`` explicitly, finds the
double cosets as orbits of marked vectors, and runs that test over all of
``Z_lambda`` in the kernel backend.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .combinatorics import Partition, partitions_with_parts

DEFAULT_CAP = 10


class OracleCapError(ValueError):
    """Raised instead of starting a brute-force run beyond the configured size cap."""


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``range(n)`` given by its images; ``(a * b)(x) = a(b(x))``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_transpositions(cls, n: int, pairs) -> "Permutation":
        img = list(range(n))
        for a, b in pairs:
            img[a], img[b] = img[b], img[a]
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.images[x] for x in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(self.n):
            if start in seen:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1


@dataclass(frozen=True)
class RootOfUnity:
    """``exp(2 pi i r)`` with ``r`` an exact rational in ``[0, 1)``."""

    r: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r) % 1)

    @classmethod
    def minus_one(cls) -> "RootOfUnity":
        return cls(Fraction(1, 2))

    @classmethod
    def from_sign(cls, s: int) -> "RootOfUnity":
        return cls(Fraction(0) if s > 0 else Fraction(1, 2))

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity(self.r + other.r)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.r * k)

    def is_one(self) -> bool:
        return self.r == 0


def _perm_sign(images: Sequence[int]) -> int:
    return Permutation(tuple(images)).sign()


@dataclass(frozen=True)
class CentralizerElement:
    """``z = nu * c``: ``c`` rotates block ``i`` by ``exponents[i]``, then ``nu``
    carries block ``i`` onto block ``block_targets[i]`` (equal sizes only)."""

    block_targets: tuple[int, ...]
    exponents: tuple[int, ...]

    def to_permutation(self, partition: Partition) -> Permutation:
        offs = partition.offsets()
        img = [0] * partition.n
        for i, lam in enumerate(partition):
            tgt, k = self.block_targets[i], self.exponents[i]
            if partition[tgt] != lam:
                raise ValueError("block permutation mixes parts of different sizes")
            for t in range(lam):
                img[offs[i] + t] = offs[tgt] + (t + k) % lam
        return Permutation(tuple(img))

    @classmethod
    def from_permutation(cls, partition: Partition, perm: Permutation) -> "CentralizerElement":
        """Decompose a permutation commuting with the standard element of cycle type ``partition``."""
        if perm.n != partition.n:
            raise ValueError(f"permutation of {perm.n} points used with a partition of {partition.n}")
        offs = partition.offsets()
        block_of = [i for i, lam in enumerate(partition) for _ in range(lam)]
        targets, exps = [], []
        for i in range(partition.j):
            y = perm(offs[i])
            targets.append(block_of[y])
            exps.append(y - offs[block_of[y]])
        z = cls(tuple(targets), tuple(exps))
        try:
            same = z.to_permutation(partition) == perm
        except ValueError:
            same = False
        if not same:
            raise ValueError("permutation does not centralize the standard element")
        return z


def standard_element(partition: Partition) -> Permutation:
    """``c_lambda``: the product of the consecutive block cycles."""
    return CentralizerElement(tuple(range(partition.j)), tuple(1 for _ in partition)).to_permutation(partition)


def centralizer_elements(partition: Partition) -> Iterator[CentralizerElement]:
    """Every element of ``Z_lambda`` once, as block permutation times rotations."""
    run_perms = [
        [tuple(start + x for x in p) for p in itertools.permutations(range(length))]
        for start, length, _ in partition.runs()
    ]
    rot_ranges = [range(lam) for lam in partition]
    for choice in itertools.product(*run_perms):
        targets = tuple(x for block in choice for x in block)
        for exps in itertools.product(*rot_ranges):
            yield CentralizerElement(targets, exps)


def zeta_eval(partition: Partition, z, whole_sign: bool = False) -> RootOfUnity:
    """Value of the centralizer character at ``z``.

    Default convention: ``zeta(nu c) = alpha(nu) * sign(c) * prod exp(2 pi i k_i / lambda_i)``.
    With ``whole_sign`` the sign character is taken on the whole of ``z``.
    """
    if isinstance(z, Permutation):
        z = CentralizerElement.from_permutation(partition, z)
    value = RootOfUnity()
    for start, length, lam in partition.runs():
        local = [t - start for t in z.block_targets[start:start + length]]
        if sorted(local) != list(range(length)):
            raise ValueError("block permutation does not preserve runs of equal parts")
        s = _perm_sign(local)
        if lam % 2 == 0:
            value = value * RootOfUnity.from_sign(s)  # alpha(nu_i) = (-1)^(lambda_i + 1)
        elif whole_sign:
            value = value * RootOfUnity.from_sign(s)
    for lam, k in zip(partition, z.exponents):
        if not 0 <= k < lam:
            raise ValueError(f"rotation exponent {k} outside 0..{lam - 1}")
        value = value * RootOfUnity(Fraction(k, lam))
        if lam % 2 == 0 and k % 2:
            value = value * RootOfUnity.minus_one()
    return value


# double cosets -------------------------------------------------------------

def young_coset_representatives(n: int, q: int) -> list[Permutation]:
    """Representatives of ``G \\ S_n``: products of disjoint transpositions across the P/Q split."""
    if not 0 <= q <= n - q:
        raise ValueError(f"require n−q ≥ q ≥ 0, got n={n}, q={q}")
    p_side, q_side = range(n - q), range(n - q, n)
    out = []
    for d in range(q + 1):
        for ks in itertools.combinations(p_side, d):
            for ls in itertools.combinations(q_side, d):
                out.append(Permutation.from_transpositions(n, zip(ks, ls)))
    return out


def delta_of(s: Permutation, q: int) -> tuple[int, ...]:
    """Marked vector of a coset: position ``i`` is marked when ``s(i)`` lies in the last ``q``."""
    n = s.n
    return tuple(1 if s(i) >= n - q else 0 for i in range(n))


def _generators(partition: Partition) -> list[Permutation]:
    gens = []
    j = partition.j
    for i in range(j):
        if partition[i] > 1:
            exps = tuple(1 if b == i else 0 for b in range(j))
            gens.append(CentralizerElement(tuple(range(j)), exps).to_permutation(partition))
    for i in range(j - 1):
        if partition[i] == partition[i + 1]:
            tg = list(range(j))
            tg[i], tg[i + 1] = i + 1, i
            gens.append(CentralizerElement(tuple(tg), (0,) * j).to_permutation(partition))
    return gens


def delta_orbit(partition: Partition, delta: Sequence[int]) -> set[tuple[int, ...]]:
    """The right ``Z_lambda``-orbit of one marked vector."""
    gens = _generators(partition)
    start = tuple(delta)
    seen, queue = {start}, deque([start])
    while queue:
        cur = queue.popleft()
        for g in gens:
            nxt = tuple(cur[g(a)] for a in range(len(cur)))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def delta_orbits(partition: Partition, deltas: Sequence[tuple[int, ...]]) -> list[list[tuple[int, ...]]]:
    """Partition ``deltas`` into right ``Z_lambda``-orbits, ``delta -> delta o z``."""
    gens = _generators(partition)
    index = {d: i for i, d in enumerate(deltas)}
    seen = [False] * len(deltas)
    orbits = []
    for i, d in enumerate(deltas):
        if seen[i]:
            continue
        seen[i] = True
        orbit, queue = [d], deque([d])
        while queue:
            cur = queue.popleft()
            for g in gens:
                nxt = tuple(cur[g(a)] for a in range(len(cur)))
                k = index.get(nxt)
                if k is None:
                    raise ValueError("delta set is not closed under Z_lambda")
                if not seen[k]:
                    seen[k] = True
                    orbit.append(nxt)
                    queue.append(nxt)
        orbits.append(orbit)
    return orbits


def double_coset_reps(n: int, q: int, partition: Partition) -> list[Permutation]:
    """One permutation per double coset ``G s Z_lambda``."""
    if partition.n != n:
        raise ValueError(f"partition of {partition.n} used with n={n}")
    reps = young_coset_representatives(n, q)
    by_delta = {}
    for s in reps:
        by_delta.setdefault(delta_of(s, q), s)
    orbits = delta_orbits(partition, list(by_delta))
    return [by_delta[orbit[0]] for orbit in orbits]


# indicator -------------------------------------------------------------------

def _kernel_args(partition: Partition, delta: Sequence[int]):
    parts = np.array(partition.parts, dtype=np.int64)
    j = len(parts)
    offs = partition.offsets()
    width = int(parts.max())
    ok = np.zeros((j, j, width), dtype=np.bool_)
    for i in range(j):
        for t in range(j):
            lam = partition[i]
            if partition[t] != lam:
                continue
            for k in range(lam):
                ok[i, t, k] = all(delta[offs[t] + (x + k) % lam] == delta[offs[i] + x] for x in range(lam))
    runs = partition.runs()
    run_start = np.array([r[0] for r in runs], dtype=np.int64)
    run_len = np.array([r[1] for r in runs], dtype=np.int64)
    tables = [_kernels.permutation_table(int(m)) for m in run_len]
    run_perm_count = np.array([t[0].shape[0] for t in tables], dtype=np.int64)
    run_perm_offset = np.zeros(len(runs), dtype=np.int64)
    flat = []
    acc = 0
    for r, (perms, _) in enumerate(tables):
        run_perm_offset[r] = acc
        flat.append(perms.ravel())
        acc += perms.size
    run_perms = np.concatenate(flat).astype(np.int64)
    run_perm_sign = np.ones((len(runs), int(run_perm_count.max())), dtype=np.int8)
    for r, (_, signs) in enumerate(tables):
        run_perm_sign[r, :signs.shape[0]] = signs
    modulus = lcm(2, *partition.parts)
    return ok, parts, run_start, run_len, run_perms, run_perm_offset, run_perm_count, run_perm_sign, modulus


def indicator_details(partition: Partition, delta: Sequence[int], whole_sign: bool = False,
                      kernels=None) -> tuple[int, int]:
    """``(indicator, |stabilizer of delta in Z_lambda|)`` by scanning all of ``Z_lambda``."""
    kernels = kernels or _kernels.backend
    args = _kernel_args(partition, tuple(delta))
    trivial, stab = kernels.centralizer_indicator(*args, bool(whole_sign))
    return int(trivial), int(stab)


def indicator(partition: Partition, s: Permutation, q: int, whole_sign: bool = False) -> int:
    """1 when ``zeta`` is trivial on every ``z`` with ``s z s^-1`` in ``G``, else 0."""
    return indicator_details(partition, delta_of(s, q), whole_sign)[0]


def oracle_dim(n: int, q: int, degree: int, cap: int = DEFAULT_CAP, whole_sign: bool = False) -> int:
    if n > cap:
        raise OracleCapError(f"character oracle refuses n={n} > cap {cap}; raise --oracle-cap to allow it")
    if not 0 <= q <= n - q:
        raise ValueError(f"require n−q ≥ q ≥ 0, got n={n}, q={q}")
    if not 0 <= degree <= n - 1:
        raise ValueError(f"degree must lie in 0..{n - 1}, got {degree}")
    total = 0
    for partition in partitions_with_parts(n, n - degree):
        for s in double_coset_reps(n, q, partition):
            total += indicator(partition, s, q, whole_sign)
    return total
