import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetacond.errors import ConfigurationError, DomainError
from zetacond.primes import Factorization, factorize, mobius, sieve

from oracles import trial_division_pi


def test_sieve_small_by_hand():
    assert list(sieve(10).primes) == [2, 3, 5, 7]
    assert list(sieve(2).primes) == [2]
    assert list(sieve(3).primes) == [2, 3]


def test_sieve_count_against_trial_division():
    # small limit live against the oracle
    assert len(sieve(10**4)) == trial_division_pi(10**4)
    # 78498 computed with trial_division_pi(10**6) before the build
    assert len(sieve(10**6)) == 78498


def test_sieve_segmented_matches_simple():
    limit = 10**7 + 1000  # crosses the segmentation threshold
    seg = sieve(limit).primes
    assert seg[0] == 2
    assert np.all(np.diff(seg) > 0)
    # tail of the segmented run vs a direct sieve of the tail window
    lo = 10**7 - 50
    window = seg[(seg >= lo) & (seg <= limit)]
    mask = np.ones(limit - lo + 1, dtype=bool)
    for p in sieve(int(limit**0.5) + 1).primes:
        p = int(p)
        start = max(p * p, ((lo + p - 1) // p) * p)
        mask[start - lo :: p] = False
    assert list(window) == [lo + i for i in np.flatnonzero(mask)]


@given(st.integers(min_value=2, max_value=3000), st.integers(min_value=0, max_value=3000))
def test_sieve_prefix_property(lim1, extra):
    lim2 = lim1 + extra
    small = sieve(lim1).primes
    big = sieve(lim2).primes
    assert list(big[: len(small)]) == list(small)


def test_sieve_limit_validation():
    with pytest.raises(ConfigurationError):
        sieve(1)
    with pytest.raises(ConfigurationError):
        sieve(10**9 + 1)


def test_mobius_small_values():
    assert mobius(1) == 1
    assert mobius(4) == 0
    assert mobius(30) == -1
    assert mobius(2) == -1
    assert mobius(6) == 1


def test_mobius_domain():
    with pytest.raises(DomainError):
        mobius(0)
    with pytest.raises(DomainError):
        mobius(-3)


def test_mobius_divisor_sums_up_to_1e4():
    # sum_{d|n} mu(d) = [n == 1], accumulated for every n <= 1e4 at once
    n_max = 10**4
    acc = np.zeros(n_max + 1, dtype=np.int64)
    for d in range(1, n_max + 1):
        acc[d::d] += mobius(d)
    assert acc[1] == 1
    assert not np.any(acc[2:])


def test_mobius_above_spf_cap_uses_trial_division():
    # 10**7 + 19 is prime (verified by factorize below); squarefree products
    n = 10**7 + 19
    assert mobius(n) == -1
    assert mobius(2 * n) == 1
    assert mobius(4 * n) == 0


def test_factorize_examples():
    assert factorize(12).factors == ((2, 2), (3, 1))
    assert factorize(1) == Factorization(1, ())
    assert factorize(9999991).factors == ((9999991, 1),)
    # primality confirmed by the trial-division oracle
    assert all(9999991 % d for d in range(2, int(9999991**0.5) + 1))


def test_factorize_domain():
    with pytest.raises(DomainError):
        factorize(0)
    with pytest.raises(DomainError):
        factorize(10**12 + 1)


@settings(max_examples=60)
@given(st.integers(min_value=1, max_value=10**9))
def test_factorize_reconstructs(n):
    fact = factorize(n)
    product = 1
    prev = 0
    for p, e in fact.factors:
        assert e >= 1
        assert p > prev  # ascending, distinct
        prev = p
        product *= p**e
    assert product == n
