from __future__ import annotations

from math import prod

import pytest
from hypothesis import given, strategies as st

from atomforge.errors import InvalidInput, InvalidPrimeList, NotCoprime, NotPositive
from atomforge.topo import (
    characteristic,
    golomb_membership,
    golomb_neighborhood,
    maximal_ideal_closed_check,
    periodic_char_check,
)


def test_periodicity_examples():
    r = periodic_char_check([2, 3], 36)
    assert r.period == 6 and r.verified and r.coset_check
    assert characteristic(1, [2, 3]) == characteristic(7, [2, 3]) == 1
    r = periodic_char_check([2, 3, 5], 90)
    assert r.period == 30 and r.verified and r.external_primes[31] == 31
    r = periodic_char_check([2], 8)
    assert r.verified and r.external_primes[3] == 3


@pytest.mark.parametrize("primes", [[2], [2, 3], [2, 3, 5], [2, 3, 5, 7], [3, 7], [5, 11, 13]])
def test_euclid_extraction(primes):
    period = prod(primes)
    r = periodic_char_check(primes, 10 * period)
    assert r.verified and r.coset_check
    lo, hi = r.window
    expected = [x for x in range(lo, hi + 1) if (x - 1) % period == 0 and abs(x) != 1]
    assert sorted(r.external_primes) == expected
    for x, p in r.external_primes.items():
        assert x % p == 0 and p not in primes


@pytest.mark.parametrize("bad", [[], [2, 2], [1], [4], [2, 9]])
def test_bad_prime_lists(bad):
    with pytest.raises(InvalidPrimeList):
        periodic_char_check(bad, 10)


@given(st.lists(st.sampled_from([2, 3, 5, 7, 11]), min_size=1, max_size=3, unique=True), st.integers(-1000, 1000))
def test_characteristic_is_periodic(primes, x):
    assert characteristic(x, primes) == characteristic(x + prod(primes), primes)


def test_golomb_examples():
    assert golomb_membership(11, 1, 5)
    assert not golomb_membership(10, 1, 5)
    with pytest.raises(NotCoprime):
        golomb_membership(3, 2, 4)
    with pytest.raises(NotPositive):
        golomb_membership(3, 1, 0)


def test_closedness_examples():
    r = maximal_ideal_closed_check(5, 25)
    assert len(r.neighborhoods) == 20 and r.verified
    r = maximal_ideal_closed_check(2, 8)
    assert [x for x, _ in r.neighborhoods] == [1, 3, 5, 7] and r.verified
    assert golomb_neighborhood(14, 7) is None
    with pytest.raises(InvalidInput):
        maximal_ideal_closed_check(6, 10)


@given(st.sampled_from([2, 3, 5, 7, 13]), st.integers(1, 200))
def test_neighborhoods_miss_the_ideal(p, r):
    report = maximal_ideal_closed_check(p, r)
    assert report.verified
    for x, m in report.neighborhoods:
        assert all(z % p for z in range(1, r + 1) if (z - x) % m == 0)
