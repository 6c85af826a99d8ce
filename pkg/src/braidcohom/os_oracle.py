"""Invariant dimensions straight from Arnold's presentation of H*(P_n).

Generators ``w_ab`` (``a < b``, points ``0..n-1``) anticommute and satisfy

    w_xb w_yb = w_xy w_yb - w_xy w_xb        for x < y < b,

which is the three-term relation solved for the product of two generators
sharing their larger index. Repeating it straightens any word into the
standard basis of monomials whose larger indices are distinct. A permutation
acts by relabelling points, and the invariant dimension is the average trace
over the Young subgroup, computed class by class.

Pure Python with exact integers: it is a slow, independent check for small ``n``.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import factorial, prod
from typing import Sequence

from .combinatorics import partitions, stirling_cycle

DEFAULT_CAP = 7

Generator = tuple[int, int]
Monomial = tuple[Generator, ...]


class OracleCapError(ValueError):
    """Raised instead of starting a run beyond the configured size cap."""


def generator(a: int, b: int) -> Generator:
    if a == b:
        raise ValueError(f"w_{a}{b} is not a generator")
    return (a, b) if a < b else (b, a)


def _key(g: Generator):
    return (g[1], g[0])


def sort_word(word: Sequence[Generator]) -> tuple[int, Monomial]:
    """Sign and sorted form of a word of anticommuting generators; sign 0 if a letter repeats."""
    w = [generator(*g) for g in word]
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(w)):
        x = w[i]
        k = i
        while k > 0 and _key(w[k - 1]) > _key(x):
            w[k] = w[k - 1]
            k -= 1
            sign = -sign
        w[k] = x
    if any(w[i] == w[i + 1] for i in range(len(w) - 1)):
        return 0, ()
    return sign, tuple(w)


def is_standard(m: Monomial) -> bool:
    tops = [g[1] for g in m]
    return all(a < b for a, b in zip(tops, tops[1:])) and all(g[0] < g[1] for g in m)


def basis(n: int, k: int) -> list[Monomial]:
    """Standard monomials of degree ``k``: one generator below each of ``k`` distinct tops."""
    out = []
    for tops in combinations(range(1, n), k):
        for lows in product(*(range(t) for t in tops)):
            out.append(tuple(zip(lows, tops)))
    return out


@lru_cache(maxsize=None)
def _straighten_sorted(word: Monomial) -> tuple[tuple[Monomial, int], ...]:
    if len(word) < 2 or word[-1][1] != word[-2][1]:
        if is_standard(word):
            return ((word, 1),)
        # the last letter has a unique top, so straighten the prefix and append it
        return tuple((m + (word[-1],), c) for m, c in _straighten_sorted(word[:-1]))
    (x, b), (y, _) = word[-2], word[-1]  # sorted, so x < y
    prefix = word[:-2]
    acc: dict[Monomial, int] = defaultdict(int)
    for coeff, tail in ((1, ((x, y), (y, b))), (-1, ((x, y), (x, b)))):
        sign, w = sort_word(prefix + tail)
        if not sign:
            continue
        for m, c in _straighten_sorted(w):
            acc[m] += sign * coeff * c
    return tuple((m, c) for m, c in sorted(acc.items()) if c)


def straighten(word: Sequence[Generator]) -> dict[Monomial, int]:
    """Coordinates of a product of generators in the standard basis."""
    sign, w = sort_word(word)
    if not sign:
        return {}
    return {m: sign * c for m, c in _straighten_sorted(w)}


def straighten_pairwise(word: Sequence[Generator]) -> dict[Monomial, int]:
    """Second rewriting order for confluence checks: rewrite the leftmost
    clashing pair of tops first instead of the topmost one."""
    todo = {tuple(generator(*g) for g in word): 1}
    done: dict[Monomial, int] = defaultdict(int)
    while todo:
        nxt: dict[Monomial, int] = defaultdict(int)
        for w, c in todo.items():
            sign, s = sort_word(w)
            if not sign:
                continue
            clash = next((i for i in range(len(s) - 1) if s[i][1] == s[i + 1][1]), None)
            if clash is None:
                done[s] += sign * c
                continue
            (x, b), (y, _) = s[clash], s[clash + 1]
            head, rest = s[:clash], s[clash + 2:]
            nxt[head + ((x, y), (y, b)) + rest] += sign * c
            nxt[head + ((x, y), (x, b)) + rest] -= sign * c
        todo = {w: c for w, c in nxt.items() if c}
    return {m: c for m, c in done.items() if c}


def act(perm: Sequence[int], m: Monomial) -> Monomial:
    return tuple((perm[a], perm[b]) for a, b in m)


def action_matrix(perm: Sequence[int], n: int, k: int) -> list[list[int]]:
    """Matrix of ``perm`` on degree ``k`` in the standard basis (columns are images)."""
    B = basis(n, k)
    index = {m: i for i, m in enumerate(B)}
    M = [[0] * len(B) for _ in B]
    for col, m in enumerate(B):
        for img, c in straighten(act(perm, m)).items():
            M[index[img]][col] += c
    return M


def trace(perm: Sequence[int], n: int, k: int) -> int:
    total = 0
    for m in basis(n, k):
        total += straighten(act(perm, m)).get(m, 0)
    return total


def _cycle_perm(cycle_type: Sequence[int], start: int, img: list[int]) -> None:
    pos = start
    for length in cycle_type:
        for t in range(length):
            img[pos + t] = pos + (t + 1) % length
        pos += length


def _class_size(cycle_type: Sequence[int]) -> int:
    counts = defaultdict(int)
    for c in cycle_type:
        counts[c] += 1
    z = prod(c ** m * factorial(m) for c, m in counts.items())
    return factorial(sum(cycle_type)) // z


def young_classes(n: int, q: int):
    """``(representative, class size)`` for each conjugacy class of ``S_{n-q} x S_q``."""
    left = [p.parts for p in partitions(n - q)] if n - q else [()]
    right = [p.parts for p in partitions(q)] if q else [()]
    for mu in left:
        for nu in right:
            img = list(range(n))
            _cycle_perm(mu, 0, img)
            _cycle_perm(nu, n - q, img)
            yield tuple(img), _class_size(mu) * _class_size(nu)


def invariant_dim_os(n: int, q: int, k: int, cap: int = DEFAULT_CAP) -> int:
    if n > cap:
        raise OracleCapError(f"Orlik-Solomon oracle refuses n={n} > cap {cap}; raise --oracle-cap to allow it")
    if not 0 <= q <= n - q:
        raise ValueError(f"require n−q ≥ q ≥ 0, got n={n}, q={q}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"degree must lie in 0..{n - 1}, got {k}")
    total = sum(size * trace(rep, n, k) for rep, size in young_classes(n, q))
    order = factorial(n - q) * factorial(q)
    avg = Fraction(total, order)
    if avg.denominator != 1:
        raise ArithmeticError(f"average trace {avg} is not an integer for n={n}, q={q}, k={k}")
    return int(avg)


def basis_size_check(n: int) -> bool:
    return all(len(basis(n, k)) == stirling_cycle(n, n - k) for k in range(n))
