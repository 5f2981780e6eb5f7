import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from aegame import arith
from helpers import brute_r


def slow_r(n, b):
    m = n * (n - 1) // 2
    return next(r for r in range(1, b + 2) if (m - r) % (b + 1) == 0)


def slow_cap(n, k):
    # b <= 0.4 n^(k/(k-1))  <=>  (10b)^(k-1) <= 4^(k-1) n^k
    b = 0
    while (10 * (b + 1)) ** (k - 1) <= 4 ** (k - 1) * n ** k:
        b += 1
    return b


def slow_ok(n, k, b):
    return slow_r(n, b) * (2 * b) ** (k - 1) < n ** (k + 1)


def slow_eplus(n, k):
    good = [b for b in range(1, slow_cap(n, k) + 1) if slow_ok(n, k, b)]
    return max(good) if good else None


def slow_eminus(n, k):
    best = None
    for b in range(1, slow_cap(n, k) + 1):
        if not slow_ok(n, k, b):
            break
        best = b
    return best


@pytest.mark.parametrize("n,b,r", [(5, 3, 2), (5, 4, 5), (6, 6, 1)])
def test_remainder_examples(n, b, r):
    assert arith.remainder_r(n, b) == r


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 80), st.integers(1, 300))
def test_remainder_matches_definition_and_count(n, b):
    r = arith.remainder_r(n, b)
    assert r == slow_r(n, b) == brute_r(n, b)
    assert 1 <= r <= b + 1


def test_iroot_exact():
    for k in (2, 3, 4, 7):
        for x in list(range(200)) + [10 ** 30 + 12345, 2 ** 200]:
            y = arith.iroot(x, k)
            assert y ** k <= x < (y + 1) ** k


def test_thresholds_frozen():
    # both recomputed by the slow loops above before being frozen here
    assert slow_eplus(100, 3) == 400
    assert slow_eminus(100, 3) == 308
    assert arith.e_plus(100, 3) == 400
    assert arith.e_minus(100, 3) == 308
    assert arith.e_plus(5, 3) == arith.e_minus(5, 3) == 4
    assert arith.remainder_r(100, 400) == 138
    assert arith.remainder_r(100, 309) == 300


@pytest.mark.parametrize("n", [3, 10, 37, 64, 150, 211])
@pytest.mark.parametrize("k", [3, 4])
def test_thresholds_against_slow_loops(n, k):
    assert arith.eplus_cap(n, k) == slow_cap(n, k)
    assert arith.e_plus(n, k) == slow_eplus(n, k)
    assert arith.e_minus(n, k) == slow_eminus(n, k)
    lo, hi = arith.e_minus(n, k), arith.e_plus(n, k)
    if lo is not None:
        assert lo <= hi <= slow_cap(n, k)


@pytest.mark.parametrize("k", [3, 4])
def test_small_bias_always_in_prefix(k):
    # every b < n^((k+1)/k)/2 satisfies the condition whatever r is
    for n in range(3, 501):
        em = arith.e_minus(n, k)
        # largest b with (2b)^k < n^(k+1)
        b = arith.iroot(n ** (k + 1), k) // 2
        while (2 * b) ** k >= n ** (k + 1):
            b -= 1
        b = min(b, arith.eplus_cap(n, k))
        if b >= 1:
            assert em is not None and em >= b, n


def test_fact_many_examples():
    assert arith.fact_many_search(1, Fraction(3, 2), "ii", [98]) == [(98, 1188)]
    assert arith.fact_many_search(1, Fraction(3, 2), "ii", [98], all_witnesses=True) == \
        [(98, [1188, 1584, 2376])]
    for q in (1188, 1584, 2376):
        assert (arith.binom2(98) - 1) % q == 0
    found = arith.fact_many_search(2, Fraction(4, 3), "i", range(300, 601))
    assert found
    for n, q in found:
        assert arith.binom2(n) % q == 0
        assert arith.above_power(q, 2, n, Fraction(4, 3))
        assert arith.below_power(q, 4, n, Fraction(4, 3))
    with pytest.raises(ValueError):
        arith.fact_many_search(1, Fraction(3, 2), "ii", [])


def test_fact_many_empty_window():
    # a zero constant gives an empty window
    assert arith.fact_many_search(0, Fraction(3, 2), "i", range(10, 20)) == []


def test_fact_all_examples():
    assert arith.fact_all_search(Fraction(2, 3), 4950, 931) == 991
    assert arith.fact_all_search(Fraction(1, 2), 100, 7) == 13
    assert arith.fact_all_search(Fraction(1, 2), 10, 50) is None
    # the scan is the smallest qualifying k
    for k in range(931, 991):
        assert 4950 % k < 931


def test_enforcer_construction():
    b, q = arith.enforcer_favorable_strict_bias(98, 3)
    assert (b, q) == (117, 1188)
    assert b == q // 10 - 1
    assert arith.star_condition(98, 3, b)


def test_enforcer_construction_window():
    seen = 0
    for n in range(90, 601):
        got = arith.enforcer_favorable_strict_bias(n, 3)
        if got is None:
            continue
        seen += 1
        b, q = got
        assert (arith.binom2(n) - 1) % q == 0
        assert arith.above_power(b, Fraction(9, 100), n, Fraction(3, 2))
        assert arith.below_power(b, Fraction(2, 5), n, Fraction(3, 2))
        assert arith.remainder_r(n, b) * (2 * b) ** 2 < n ** 4
    assert seen > 100
    # 79799 = 199 * 401 has no divisor in the window
    assert arith.enforcer_favorable_strict_bias(400, 3) is None


def test_avoider_construction():
    b = arith.avoider_favorable_strict_bias(400, 3)
    assert b == 6649
    assert arith.binom2(400) % (b + 1) == 0
    assert arith.remainder_r(400, b) == b + 1
    # 9974 is also in the window, just not the smallest
    assert arith.binom2(400) % 9975 == 0
    for c in range(1, b):
        if arith.binom2(400) % (c + 1) == 0:
            assert not arith.above_power(c, 2, 400, Fraction(4, 3))


def test_general_upper_construction():
    assert arith.ceil_power(2, 100, Fraction(4, 3)) == 929
    b = arith.avoider_general_upper_bias(100, 3)
    assert b == 990
    assert arith.remainder_r(100, 990) == 986 >= 929
    assert b <= 8 * 100 ** (4 / 3) * math.log(100)


def test_doomed_boundary():
    assert arith.doomed(100, 3, 40)
    assert arith.doomed(100, 3, 48)
    assert not arith.doomed(100, 3, 49)


def test_strict_remainder_example():
    assert arith.remainder_r(400, 2098) == 38
    assert 38 * 4196 ** 2 < 400 ** 4 // 2
