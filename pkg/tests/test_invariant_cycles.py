from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from braidcohom.character_oracle import delta_orbit, delta_orbits
from braidcohom.combinatorics import Partition, partitions, partitions_with_parts
from braidcohom.dimension import dim_invariant
from braidcohom.invariant_cycles import (
    FullInvariantSet,
    all_chi_sets,
    chi_from_delta,
    delta_from_chi,
    enumerate_admissible_sets,
    is_admissible,
    normalize,
    stability_map,
)
from braidcohom.necklace import EMPTY, canonical_rotation

EXAMPLE_LAMBDA = Partition((6, 6, 3, 2, 1, 1))
EXAMPLE_DELTA = (1, 0, 1, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 0)
EXAMPLE_CHI = [(1, 2, 0), (2, 0, 1), (2,), (0, 0), (0,), EMPTY]


def weight_q_deltas(n, q):
    for marked in combinations(range(n), q):
        delta = [0] * n
        for i in marked:
            delta[i] = 1
        yield tuple(delta)


def test_worked_example_cycles():
    chi = chi_from_delta(EXAMPLE_LAMBDA, EXAMPLE_DELTA)
    assert list(chi.cycles) == [canonical_rotation(c) for c in EXAMPLE_CHI]
    assert chi.marks() == (3, 3, 1, 2, 1, 0)
    assert chi.q == 10
    assert chi.label() == "λ=(6,6,3,2,1,1); χ=[(0,1,2),(0,1,2),(2),(0,0),(0),-]"


def test_worked_example_round_trip_up_to_orbit():
    chi = chi_from_delta(EXAMPLE_LAMBDA, EXAMPLE_DELTA)
    back = delta_from_chi(chi)
    assert chi_from_delta(EXAMPLE_LAMBDA, back) == chi
    orbit = delta_orbit(EXAMPLE_LAMBDA, EXAMPLE_DELTA)
    assert back in orbit
    assert all(chi_from_delta(EXAMPLE_LAMBDA, d) == chi for d in orbit)


def test_worked_example_is_not_admissible():
    # the two 6-blocks are even, equal and carry equal cycles
    assert not is_admissible(chi_from_delta(EXAMPLE_LAMBDA, EXAMPLE_DELTA))


def test_chi_from_delta_small_cases():
    for n in range(1, 6):
        assert chi_from_delta(Partition((n,)), (0,) * n).cycles == (EMPTY,)
    assert chi_from_delta(Partition((2, 2)), (1, 1, 0, 0)).cycles == ((0, 0), EMPTY)
    assert chi_from_delta(Partition((2, 2)), (0, 0, 1, 1)).cycles == ((0, 0), EMPTY)
    with pytest.raises(ValueError):
        chi_from_delta(Partition((2, 2)), (1, 1, 0))
    with pytest.raises(ValueError):
        chi_from_delta(Partition((2,)), (2, 0))


def test_delta_from_chi_examples():
    assert delta_from_chi(FullInvariantSet(Partition((5,)), (EMPTY,))) == (0,) * 5
    assert delta_from_chi(FullInvariantSet(Partition((3,)), ((2,),))) == (1, 0, 0)


def test_full_invariant_set_validation():
    with pytest.raises(ValueError):
        FullInvariantSet(Partition((3,)), ((1,),))
    with pytest.raises(ValueError):
        FullInvariantSet(Partition((3, 1)), ((2,),))


def test_round_trip_is_identity_on_all_sets():
    for n in range(1, 11):
        for lam in partitions(n):
            for q in range(0, n // 2 + 1):
                for chi in all_chi_sets(lam, q):
                    assert chi_from_delta(lam, delta_from_chi(chi)) == chi


def test_orbits_match_invariant_sets():
    # the invariant separates right Z_lambda orbits of marked vectors
    for n in range(2, 10):
        for q in range(0, n // 2 + 1):
            deltas = list(weight_q_deltas(n, q))
            for lam in partitions(n):
                orbits = delta_orbits(lam, deltas)
                labels = [{chi_from_delta(lam, d) for d in orbit} for orbit in orbits]
                assert all(len(s) == 1 for s in labels)
                assert len({next(iter(s)) for s in labels}) == len(orbits)


def test_is_admissible_examples():
    assert not is_admissible(FullInvariantSet(Partition((2, 2)), ((0, 0), (0, 0))))
    assert is_admissible(FullInvariantSet(Partition((2, 2)), ((0, 0), EMPTY)))
    assert is_admissible(FullInvariantSet(Partition((3,)), ((2,),)))
    assert not is_admissible(FullInvariantSet(Partition((4,)), ((1, 1),)))
    # equal odd parts may repeat a cycle
    assert is_admissible(FullInvariantSet(Partition((3, 3)), ((2,), (2,))))


def test_enumerate_admissible_sets_examples():
    for n in range(2, 9):
        assert len(enumerate_admissible_sets(n, 0, 0)) == 1
        one = enumerate_admissible_sets(n, 0, 1)
        assert len(one) == 1 and one[0].partition.parts[0] == 2
        assert all(c == EMPTY for c in one[0].cycles)
    assert len(enumerate_admissible_sets(6, 2, 2)) == 4


def test_enumeration_is_normal_admissible_and_distinct():
    for n in range(2, 10):
        for q in range(0, n // 2 + 1):
            for d in range(n):
                sets = enumerate_admissible_sets(n, q, d)
                assert len(set(sets)) == len(sets)
                for s in sets:
                    assert s.is_normal() and is_admissible(s) and s.q == q and s.degree == d


def test_enumeration_agrees_with_brute_force_filter():
    for n in range(2, 9):
        for q in range(0, n // 2 + 1):
            for lam in partitions(n):
                want = {s for s in all_chi_sets(lam, q) if is_admissible(s)}
                got = {s for s in enumerate_admissible_sets(n, q, lam.degree) if s.partition == lam}
                assert got == want


def test_enumeration_agrees_with_engine():
    for n in range(2, 13):
        for q in range(0, min(3, n // 2) + 1):
            for d in range(n):
                assert len(enumerate_admissible_sets(n, q, d)) == dim_invariant(n, q, d)


def test_enumerate_rejects_bad_range():
    with pytest.raises(ValueError):
        enumerate_admissible_sets(5, 3, 1)
    with pytest.raises(ValueError):
        enumerate_admissible_sets(5, 1, 5)


def test_stability_map_degree_zero():
    (src,) = enumerate_admissible_sets(6, 1, 0)
    (dst,) = enumerate_admissible_sets(6, 2, 0)
    assert stability_map(src) == dst


def test_stability_map_injective_and_bijective():
    for n in range(4, 13):
        for q in range(0, n):
            if n - q - 1 < q + 1:
                continue
            for d in range(0, n - q - 1):
                src = enumerate_admissible_sets(n, q, d)
                dst = set(enumerate_admissible_sets(n, q + 1, d))
                image = [stability_map(s) for s in src]
                assert len(set(image)) == len(image)
                assert set(image) <= dst
                if d <= q - 1:
                    assert set(image) == dst


def test_stability_map_domain_errors():
    s = FullInvariantSet(Partition((2,)), ((0, 0),))
    with pytest.raises(ValueError):
        stability_map(s)
    full = FullInvariantSet(Partition((1, 1, 1, 1)), ((0,), (0,), EMPTY, EMPTY))
    with pytest.raises(ValueError):
        stability_map(FullInvariantSet(Partition((1, 1)), ((0,), (0,))))
    assert stability_map(full).q == 3


@settings(deadline=None, max_examples=60)
@given(st.integers(2, 9), st.data())
def test_normal_form_is_idempotent(n, data):
    lam = data.draw(st.sampled_from(partitions(n)))
    delta = tuple(data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n)))
    chi = chi_from_delta(lam, delta)
    assert chi.is_normal()
    assert normalize(lam, chi.cycles) == chi.cycles
    assert chi.normal_form() == chi


def test_counts_by_partition_with_parts():
    # every admissible set lands in a partition with the right number of parts
    for s in enumerate_admissible_sets(8, 2, 4):
        assert s.partition in partitions_with_parts(8, 4)
