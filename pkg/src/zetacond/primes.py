"""Prime generation, factorization, and the Moebius function.

The arithmetic substrate for every prime-indexed series in the library.
Sieving is plain Eratosthenes in numpy up to 10**7 and segmented above that
so a 10**9 run streams in bounded memory.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, DomainError

MAX_SIEVE_LIMIT = 10**9
MAX_FACTOR_N = 10**12
_SEGMENT_THRESHOLD = 10**7
_SEGMENT_SIZE = 10**7

# smallest-prime-factor table, grown on demand (mobius fast path)
_SPF_LIMIT_CAP = 10**7
_spf: np.ndarray | None = None

# shared ascending prime cache, grown on demand
_prime_cache: np.ndarray = np.array([], dtype=np.int64)
_prime_cache_limit: int = 1


@dataclass(frozen=True)
class PrimeTable:
    """All primes <= limit, ascending."""

    limit: int
    primes: np.ndarray

    def __len__(self) -> int:
        return len(self.primes)


@dataclass(frozen=True)
class Factorization:
    """n = prod p**m_p with distinct ascending primes."""

    n: int
    factors: tuple[tuple[int, int], ...]


def _simple_sieve(limit: int) -> np.ndarray:
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def sieve(limit: int) -> PrimeTable:
    """All primes <= limit.  Segmented above 10**7 to bound memory."""
    if not (2 <= limit <= MAX_SIEVE_LIMIT):
        raise ConfigurationError(
            f"sieve limit must be in [2, {MAX_SIEVE_LIMIT}], got {limit}"
        )
    if limit <= _SEGMENT_THRESHOLD:
        return PrimeTable(limit, _simple_sieve(limit))

    base_limit = int(limit**0.5) + 1
    base = _simple_sieve(base_limit)
    chunks = [base]
    lo = base_limit + 1
    while lo <= limit:
        hi = min(lo + _SEGMENT_SIZE - 1, limit)
        seg = np.ones(hi - lo + 1, dtype=bool)
        for p in base:
            p = int(p)
            if p * p > hi:
                break
            start = max(p * p, ((lo + p - 1) // p) * p)
            seg[start - lo :: p] = False
        chunks.append((np.flatnonzero(seg) + lo).astype(np.int64))
        lo = hi + 1
    return PrimeTable(limit, np.concatenate(chunks))


def primes_up_to(limit: int) -> np.ndarray:
    """Cached ascending primes <= limit (shared across the library)."""
    global _prime_cache, _prime_cache_limit
    if limit > _prime_cache_limit:
        grown = max(limit, 2 * _prime_cache_limit, 1 << 16)
        _prime_cache = sieve(grown).primes
        _prime_cache_limit = grown
    cut = np.searchsorted(_prime_cache, limit, side="right")
    return _prime_cache[:cut]


def _spf_table(n: int) -> np.ndarray:
    global _spf
    if _spf is None or len(_spf) <= n:
        size = max(n + 1, 1 << 16)
        spf = np.zeros(size, dtype=np.int64)
        spf[1] = 1
        for p in range(2, int(size**0.5) + 1):
            if spf[p] == 0:
                tail = spf[p * p :: p]
                tail[tail == 0] = p
        unmarked = np.flatnonzero(spf == 0)
        spf[unmarked] = unmarked
        _spf = spf
    return _spf


def factorize(n: int) -> Factorization:
    """Complete prime factorization of n by trial division."""
    if n == 0:
        raise DomainError("factorize(0) is undefined")
    if not (1 <= n <= MAX_FACTOR_N):
        raise DomainError(f"factorize requires 1 <= n <= {MAX_FACTOR_N}, got {n}")
    factors = []
    m = n
    for p in primes_up_to(int(n**0.5) + 1):
        p = int(p)
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def mobius(n: int) -> int:
    """Moebius function: (-1)**k on squarefree n with k prime factors, else 0."""
    if n == 0:
        raise DomainError("mobius(0) is undefined")
    if n < 1:
        raise DomainError(f"mobius requires n >= 1, got {n}")
    if n == 1:
        return 1
    if n <= _SPF_LIMIT_CAP:
        spf = _spf_table(min(max(n, 64), _SPF_LIMIT_CAP))
        m, k = n, 0
        while m > 1:
            p = int(spf[m])
            m //= p
            if m % p == 0:
                return 0
            k += 1
        return -1 if k % 2 else 1
    fact = factorize(n)
    if any(e > 1 for _, e in fact.factors):
        return 0
    return -1 if len(fact.factors) % 2 else 1
