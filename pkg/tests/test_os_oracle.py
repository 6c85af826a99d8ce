import random
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from braidcohom.combinatorics import stirling_cycle
from braidcohom.dimension import dim_invariant
from braidcohom.os_oracle import (
    OracleCapError,
    action_matrix,
    basis,
    generator,
    invariant_dim_os,
    is_standard,
    straighten,
    straighten_pairwise,
    trace,
    young_classes,
)


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def compose(p, q):
    return tuple(p[x] for x in q)


def test_basis_examples():
    assert basis(3, 1) == [((0, 1),), ((0, 2),), ((1, 2),)]
    assert len(basis(4, 2)) == 11
    assert all(basis(n, 0) == [()] for n in range(1, 6))
    for n in range(1, 9):
        for k in range(n):
            assert len(basis(n, k)) == stirling_cycle(n, n - k)


def test_straighten_examples():
    w12, w13, w23 = (0, 1), (0, 2), (1, 2)
    assert straighten([w12, w12]) == {}
    # the three-term relation: w12 w23 = w13 w23 - w13 w12
    lhs = straighten([w12, w23])
    rhs = dict(straighten([w13, w23]))
    for m, c in straighten([w13, w12]).items():
        rhs[m] = rhs.get(m, 0) - c
    assert lhs == {m: c for m, c in rhs.items() if c}
    assert lhs == {(w12, w23): 1}
    for m in basis(5, 3):
        assert straighten(m) == {m: 1}


def test_arnold_relation_vanishes():
    for n in range(3, 7):
        for k, l, m in permutations(range(n), 3):
            total = {}
            for word in (((k, l), (l, m)), ((l, m), (m, k)), ((m, k), (k, l))):
                for mono, c in straighten([generator(*g) for g in word]).items():
                    total[mono] = total.get(mono, 0) + c
            assert all(c == 0 for c in total.values())


@settings(deadline=None, max_examples=200)
@given(st.integers(3, 6), st.data())
def test_straightening_is_confluent(n, data):
    k = data.draw(st.integers(1, n - 1))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    word = data.draw(st.lists(st.sampled_from(pairs), min_size=k, max_size=k))
    a = straighten(word)
    assert a == straighten_pairwise(word)
    assert all(is_standard(m) for m in a)


def test_trace_of_identity():
    for n in range(1, 7):
        ident = tuple(range(n))
        assert [trace(ident, n, k) for k in range(n)] == [len(basis(n, k)) for k in range(n)]
        assert sum(trace(ident, n, k) for k in range(n)) == factorial(n)


def test_degree_one_invariant_line():
    for n in range(2, 7):
        total = sum(trace(p, n, 1) for p in permutations(range(n)))
        assert total == factorial(n)


def test_trace_is_class_function():
    rng = random.Random(3)
    for n in range(3, 7):
        for _ in range(6):
            g = tuple(rng.sample(range(n), n))
            h = tuple(rng.sample(range(n), n))
            h_inv = tuple(sorted(range(n), key=lambda x: h[x]))
            conj = compose(compose(h, g), h_inv)
            for k in range(n):
                assert trace(g, n, k) == trace(conj, n, k)


def test_action_is_a_representation():
    rng = random.Random(5)
    for n in (4, 5):
        for k in range(1, n):
            for _ in range(3):
                g = tuple(rng.sample(range(n), n))
                h = tuple(rng.sample(range(n), n))
                assert action_matrix(compose(g, h), n, k) == matmul(action_matrix(g, n, k), action_matrix(h, n, k))


def test_young_class_sizes():
    for n in range(2, 8):
        for q in range(0, n // 2 + 1):
            assert sum(size for _, size in young_classes(n, q)) == factorial(n - q) * factorial(q)


def test_invariant_dim_examples():
    for n in range(3, 8):
        assert invariant_dim_os(n, 0, 2) == 0
    assert [invariant_dim_os(4, 1, k) for k in range(4)] == [1, 2, 2, 1]
    assert invariant_dim_os(6, 3, 2) == 5


def test_invariant_dim_matches_engine():
    for n in range(2, 8):
        for q in range(0, min(3, n // 2) + 1):
            for k in range(n):
                assert invariant_dim_os(n, q, k) == dim_invariant(n, q, k), (n, q, k)


def test_invariant_dim_cap_and_range():
    with pytest.raises(OracleCapError, match="cap"):
        invariant_dim_os(8, 1, 1)
    with pytest.raises(ValueError):
        invariant_dim_os(5, 3, 1)
    with pytest.raises(ValueError):
        invariant_dim_os(5, 1, 5)
