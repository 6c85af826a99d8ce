"""Single-cycle invariants: counting and enumerating the admissible necklaces
``Pi(lambda, d)`` of one cycle block.

A cycle invariant is the tuple of gap lengths between the ``d`` marked points
of a ``lambda``-cycle, taken up to rotation. Tuples are plain ``tuple[int, ...]``
in canonical (lexicographically minimal) rotation; the empty tuple is the
Empty invariant of an unmarked block.

``pi_count`` evaluates the closed inclusion-exclusion formula;
``enumerate_admissible_cycles`` scans every marked block through the kernel
backend and filters by the rotation-multiplicity rules. The two are checked
against each other in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd, prod

import numpy as np

from . import _kernels
from .combinatorics import binomial, divisors, euler_phi, multinomial, prime_factors

EMPTY: tuple[int, ...] = ()

# Pi(2, d) is given directly rather than by the lambda >= 3 formula
_PI_TWO = {0: 1, 1: 1, 2: 1}


def rotations(chi: tuple[int, ...]) -> list[tuple[int, ...]]:
    return [chi[r:] + chi[:r] for r in range(len(chi))]


def canonical_rotation(chi) -> tuple[int, ...]:
    chi = tuple(chi)
    if not chi:
        return EMPTY
    return min(rotations(chi))


def min_rotation_multiplicity(chi) -> int:
    """How many of the ``d`` rotations of ``chi`` equal its minimal rotation."""
    chi = tuple(chi)
    if not chi:
        raise ValueError("the Empty invariant has no rotations")
    rots = rotations(chi)
    low = min(rots)
    return sum(1 for r in rots if r == low)


def cycle_is_admissible(lam: int, chi) -> bool:
    """Per-block admissibility of a cycle invariant on a part of size ``lam``."""
    d = len(chi)
    if lam == 1:
        return d <= 1
    if lam >= 3 and not 1 <= d <= lam - 1:
        return False
    if d == 0:
        return True
    k = min_rotation_multiplicity(chi)
    if lam % 4 == 2:
        return k <= 2
    return k == 1


@dataclass(frozen=True)
class SupportPattern:
    """Distinct values ``a`` (increasing) used ``t`` times each in a cycle tuple."""

    t: tuple[int, ...]
    a: tuple[int, ...]

    @property
    def d(self) -> int:
        return sum(self.t)

    @property
    def weight(self) -> int:
        return sum(ti * ai for ti, ai in zip(self.t, self.a))

    def gcd(self) -> int:
        g = 0
        for ti in self.t:
            g = gcd(g, ti)
        return g


def _patterns(d_left: int, w_left: int, min_value: int):
    if d_left == 0:
        if w_left == 0:
            yield (), ()
        return
    # the smallest remaining value is used at least once, everything else is >= it
    for value in range(min_value, w_left + 1):
        if value * d_left > w_left:
            break
        for times in range(1, d_left + 1):
            if value * times > w_left:
                break
            for t, a in _patterns(d_left - times, w_left - value * times, value + 1):
                yield (times,) + t, (value,) + a


def support_patterns(lam: int, d: int) -> list[SupportPattern]:
    """Every ``(t, a)`` with ``sum t = d`` and ``sum t*a = lam - d``."""
    if lam < 3 or not 1 <= d <= lam - 1:
        raise ValueError(f"support patterns need lam >= 3 and 1 <= d <= lam-1, got ({lam}, {d})")
    out = [SupportPattern(t, a) for t, a in _patterns(d, lam - d, 0)]
    out.sort(key=lambda T: (len(T.t), T.a, T.t))
    return out


def pi_k_term(T: SupportPattern, k: int, j: int, d: int) -> int:
    """Sum over ``j``-sets of primes of ``gcd(t)/k`` of the shrunken multinomial."""
    g = T.gcd()
    if k < 1 or g % k:
        raise ValueError(f"k={k} does not divide gcd(t)={g}")
    primes = prime_factors(g // k)
    if not 0 <= j <= len(primes):
        raise ValueError(f"j={j} outside 0..{len(primes)}")
    total = 0
    for chosen in combinations(primes, j):
        div = k * prod(chosen)
        total += multinomial(d // div, [ti // div for ti in T.t])
    return total


def _exact_period_count(T: SupportPattern, k: int, d: int) -> int:
    # tuples with content T whose rotation stabilizer has order exactly k
    m = len(prime_factors(T.gcd() // k))
    return sum((-1) ** j * pi_k_term(T, k, j, d) for j in range(m + 1))


@lru_cache(maxsize=None)
def pi_count(lam: int, d: int) -> int:
    """``|Pi(lam, d)|`` from the closed form, asserting every division is exact."""
    if lam < 2 or not 0 <= d <= lam:
        raise ValueError(f"need lam >= 2 and 0 <= d <= lam, got ({lam}, {d})")
    if lam == 2:
        return _PI_TWO[d]
    if d == 0 or d == lam:
        return 0
    total = 0
    for T in support_patterns(lam, d):
        orbits = _exact_period_count(T, 1, d)
        if orbits % d:
            raise ArithmeticError(f"inexact division by d={d} for {T} (lam={lam})")
        total += orbits // d
        if lam % 4 == 2 and T.gcd() % 2 == 0:
            twos = 2 * _exact_period_count(T, 2, d)
            if twos % d:
                raise ArithmeticError(f"inexact division by d={d} for {T}, k=2 (lam={lam})")
            total += twos // d
    return total


@lru_cache(maxsize=32)
def _scan(lam: int) -> dict[int, tuple[np.ndarray, np.ndarray]]:
    """Canonical marked ``lam``-blocks grouped by mark count: ``d -> (gaps, multiplicity)``."""
    masks, weights, mults = _kernels.backend.necklace_scan(lam)
    shifts = np.arange(lam - 1, -1, -1, dtype=np.int64)
    out = {}
    for d in range(1, lam + 1):
        sel = weights == d
        m = masks[sel]
        if m.size == 0:
            out[d] = (np.zeros((0, d), dtype=np.int64), np.zeros(0, dtype=np.int64))
            continue
        bits = (m[:, None] >> shifts[None, :]) & 1
        pos = np.nonzero(bits)[1].reshape(-1, d)
        gaps = np.empty_like(pos)
        gaps[:, :-1] = np.diff(pos, axis=1) - 1
        gaps[:, -1] = lam - pos[:, -1] + pos[:, 0] - 1
        order = np.lexsort(gaps.T[::-1])
        out[d] = (gaps[order], mults[sel][order])
    return out


def enumerate_admissible_cycles(lam: int, d: int) -> list[tuple[int, ...]]:
    """All admissible canonical cycle invariants of a ``lam``-block with ``d`` marks, sorted."""
    if lam < 2 or not 0 <= d <= lam:
        raise ValueError(f"need lam >= 2 and 0 <= d <= lam, got ({lam}, {d})")
    if d == 0:
        return [EMPTY] if lam < 3 else []
    if lam >= 3 and d == lam:
        return []
    gaps, mult = _scan(lam)[d]
    keep = mult <= 2 if lam % 4 == 2 else mult == 1
    return [tuple(row) for row in gaps[keep].tolist()]


def count_admissible_cycles(lam: int, d: int) -> int:
    """Same as ``len(enumerate_admissible_cycles(lam, d))`` without building tuples."""
    if lam < 2 or not 0 <= d <= lam:
        raise ValueError(f"need lam >= 2 and 0 <= d <= lam, got ({lam}, {d})")
    if d == 0:
        return 1 if lam < 3 else 0
    if lam >= 3 and d == lam:
        return 0
    _, mult = _scan(lam)[d]
    return int(np.count_nonzero(mult <= 2 if lam % 4 == 2 else mult == 1))


def necklace_count_burnside(lam: int, d: int) -> int:
    """Binary necklaces of length ``lam`` with ``d`` ones, by Burnside's lemma."""
    g = gcd(lam, d)
    total = sum(euler_phi(k) * binomial(lam // k, d // k) for k in divisors(g))
    assert total % lam == 0
    return total // lam
