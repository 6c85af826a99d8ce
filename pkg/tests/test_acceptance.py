"""Acceptance criteria, one test each, all exact.

Every test prints a single ``[PASS]``/``[FAIL]`` line (also under pytest's
capture) and then asserts. Time budgets are part of the criteria and are
checked too. Run directly with ``python3 tests/test_acceptance.py`` for just
the summary lines.
"""

import sys
import time
from math import factorial

import pytest

from braidcohom.character_oracle import delta_orbit, oracle_dim
from braidcohom.combinatorics import Partition, partitions_with_parts, stirling_cycle
from braidcohom.dimension import closed_form, dim_invariant, table
from braidcohom.invariant_cycles import chi_from_delta, delta_from_chi, enumerate_admissible_sets
from braidcohom.necklace import EMPTY, canonical_rotation, enumerate_admissible_cycles, pi_count
from braidcohom.os_oracle import basis, invariant_dim_os


def _report(number, ok, detail, elapsed, budget, capsys=None):
    in_time = elapsed < budget
    line = (f"[{'PASS' if ok and in_time else 'FAIL'}] criterion {number}: {detail}"
            f" ({elapsed:.2f}s, budget {budget:g}s)")
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    return ok and in_time


def criterion_1():
    bad = []
    for n in range(3, 15):
        want = [1] + [2] * (n - 2) + [1]
        got = [dim_invariant(n, 1, i) for i in range(n)]
        bad += [(n, i, g, w) for i, (g, w) in enumerate(zip(got, want)) if g != w]
    return not bad, f"q=1 table, 3<=n<=14, {len(bad)} mismatches {bad}", 1


def criterion_2():
    bad, checked = [], 0
    for n in range(6, 15):
        for i in range(n):
            checked += 1
            got, want = dim_invariant(n, 2, i), closed_form(2, n, i)
            if got != want:
                bad.append((n, i, got, want))
    detail = f"q=2 printed table, 6<=n<=14, {checked} entries, {len(bad)} mismatches"
    if bad:
        # keep the reason visible next to the failure
        detail += " (n, i, engine, printed): " + ", ".join(map(str, bad))
        # degree n - 2 only involves two-part partitions, so the oracle stays cheap past its default cap
        by_oracle = [(n, i) for n, i, got, _ in bad if oracle_dim(n, 2, i, cap=n) == got]
        detail += f"; character oracle agrees with the engine at {by_oracle}"
    return not bad, detail, 5


def criterion_3():
    anchors_bad = [(n, [dim_invariant(n, 3, i) for i in range(1, 5)]) for n in range(9, 15)
                   if [dim_invariant(n, 3, i) for i in range(1, 5)] != [3, 5, 9, 16]]
    mismatches, unresolved = [], []
    for n in range(8, 15):
        for i in range(n):
            got, printed = dim_invariant(n, 3, i), closed_form(3, n, i)
            if got != printed:
                ref = oracle_dim(n, 3, i) if n <= 10 else len(enumerate_admissible_sets(n, 3, i))
                mismatches.append((n, i, got, printed, ref))
                if ref != got:
                    unresolved.append((n, i))
    ok = not anchors_bad and not unresolved
    detail = (f"q=3 anchors 3,5,9,16 for 9<=n<=14 {'hold' if not anchors_bad else anchors_bad}; "
              f"full table 8<=n<=14: {len(mismatches)} mismatches vs printed {mismatches}, "
              f"{len(unresolved)} where engine != oracle")
    return ok, detail, 30


def criterion_4():
    bad = [(lam, d) for lam in range(2, 25) for d in range(lam + 1)
           if pi_count(lam, d) != len(enumerate_admissible_cycles(lam, d))]
    printed = ([pi_count(2, d) for d in range(3)] == [1, 1, 1]
               and (pi_count(4, 2), pi_count(5, 2), pi_count(6, 2)) == (1, 2, 3))
    return (not bad and printed,
            f"closed form = enumeration for 2<=lambda<=24, all d: {len(bad)} mismatches; printed values "
            f"{'match' if printed else 'differ'}", 10)


def criterion_5():
    bad = []
    for n in range(1, 11):
        for q in range(0, n // 2 + 1):
            for i in range(n):
                e = dim_invariant(n, q, i)
                s = len(enumerate_admissible_sets(n, q, i))
                o = oracle_dim(n, q, i)
                if not e == s == o:
                    bad.append(("char", n, q, i, e, s, o))
    for n in range(1, 8):
        for q in range(0, min(3, n // 2) + 1):
            for i in range(n):
                e, o = dim_invariant(n, q, i), invariant_dim_os(n, q, i)
                if e != o:
                    bad.append(("os", n, q, i, e, o))
    return not bad, f"engine = enumeration = character oracle (n<=10), = OS oracle (n<=7, q<=3): {bad or 'all equal'}", 600


def criterion_6():
    bad = []
    for n in range(2, 11):
        want = [1, 1] + [0] * (n - 2)
        paths = {
            "engine": table(n, 0).as_list(),
            "enumeration": [len(enumerate_admissible_sets(n, 0, i)) for i in range(n)],
            "character": [oracle_dim(n, 0, i) for i in range(n)],
        }
        bad += [(n, k) for k, v in paths.items() if v != want]
    return not bad, f"q=0 gives (1,1,0,...) for n<=10 on three paths: {bad or 'all agree'}", 60


def criterion_7():
    bad, pairs = [], 0
    for n in range(2, 15):
        for q in range(0, n):
            if n - q - 1 < q + 1:
                continue
            pairs += 1
            lo, hi = table(n, q).as_list(), table(n, q + 1).as_list()
            if any(lo[i] != hi[i] for i in range(q)) or any(lo[i] > hi[i] for i in range(n - q - 1)):
                bad.append((n, q))
    return not bad, f"stability over {pairs} (n, q) pairs with n<=14: {bad or 'all hold'}", 60


def criterion_8():
    b = [(n, k) for n in range(1, 9) for k in range(n) if len(basis(n, k)) != stirling_cycle(n, n - k)]
    z = [(n, j) for n in range(1, 13) for j in range(1, n + 1)
         if sum(factorial(n) // lam.centralizer_order() for lam in partitions_with_parts(n, j)) != stirling_cycle(n, j)]
    return not b and not z, f"|basis(n,k)| = c(n,n-k) for n<=8 and sum n!/|Z| = c(n,j) for n<=12: {(b, z) if b or z else 'exact'}", 10


def criterion_9():
    lam = Partition((6, 6, 3, 2, 1, 1))
    delta = (1, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 0)
    printed = [(1, 2, 0), (2, 0, 1), (2,), (0, 0), (0,), EMPTY]
    chi = chi_from_delta(lam, delta)
    cycles_ok = list(chi.cycles) == [canonical_rotation(c) for c in printed]
    back = delta_from_chi(chi)
    inverse_ok = chi_from_delta(lam, back) == chi and back in delta_orbit(lam, delta)
    return (cycles_ok and inverse_ok,
            f"worked example gives {chi.label()}, each cycle a rotation of the printed one: {cycles_ok}; "
            f"delta_from_chi lands in the same Z_lambda orbit: {inverse_ok}", 1)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


def _run(number, capsys=None):
    t0 = time.perf_counter()
    ok, detail, budget = CRITERIA[number - 1]()
    return _report(number, ok, detail, time.perf_counter() - t0, budget, capsys)


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number, capsys):
    assert _run(number, capsys)


if __name__ == "__main__":
    results = [_run(k) for k in range(1, len(CRITERIA) + 1)]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
