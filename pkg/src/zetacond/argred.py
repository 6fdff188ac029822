"""Accurate reduction of t*log(m) modulo 2*pi.

A product like t*log(p) with t ~ 2e6 carries ~21 bits of integer part, so
forming it in double precision and reducing mod 2*pi loses ~7 digits of the
angle.  That error budget is unacceptable for the Monte Carlo covariance
estimators and for Dirichlet sums at large imaginary height.  We therefore
store log(m)/(2*pi) as a double-double constant (hi + lo, computed once with
decimal arithmetic) and form frac(t*c) with an exact two-product, which keeps
the reduced angle accurate to a few ulp.
"""

from __future__ import annotations

from decimal import Decimal, getcontext

import numpy as np

getcontext().prec = 50

TWO_PI = 6.283185307179586476925286766559
_TWO_PI_DEC = Decimal("6.28318530717958647692528676655900576839433879875021164194989")

_SPLITTER = 134217729.0  # 2**27 + 1, Veltkamp split constant

# value -> (hi, lo) of log(value)/(2*pi)
_DD_CACHE: dict[float, tuple[float, float]] = {}


def _two_prod(a, b):
    """Exact product a*b = p + err for doubles (Dekker, no FMA required)."""
    p = a * b
    ah = _SPLITTER * a
    ah = ah - (ah - a)
    al = a - ah
    bh = _SPLITTER * b
    bh = bh - (bh - b)
    bl = b - bh
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def log_over_two_pi_dd(values) -> tuple[np.ndarray, np.ndarray]:
    """Double-double table of log(v)/(2*pi) for positive values.

    Values are keyed by their exact float64 bits; results are cached since
    the same primes / lattice points recur across calls.
    """
    arr = np.asarray(values, dtype=np.float64).ravel()
    hi = np.empty(arr.shape)
    lo = np.empty(arr.shape)
    for i, v in enumerate(arr):
        key = float(v)
        got = _DD_CACHE.get(key)
        if got is None:
            d = Decimal(key).ln() / _TWO_PI_DEC
            h = float(d)
            got = (h, float(d - Decimal(h)))
            _DD_CACHE[key] = got
        hi[i], lo[i] = got
    return hi, lo


def reduced_angle(t, c_hi, c_lo):
    """Angle 2*pi*frac(t*c) where c = c_hi + c_lo is log(m)/(2*pi).

    Broadcasts: t may be a column vector and c_hi/c_lo row vectors (or any
    compatible shapes).  |t| should stay below ~2^40 so the two-product
    split does not overflow; all callers are desk-scale (t <= ~4e6).
    """
    p, err = _two_prod(t, c_hi)
    rem = err + t * c_lo
    frac = (p - np.floor(p)) + rem
    frac -= np.floor(frac)
    return TWO_PI * frac


def fractional_part_dd(t, c_hi, c_lo):
    """frac(t*c) in [0,1) with the same accuracy contract as reduced_angle."""
    p, err = _two_prod(t, c_hi)
    rem = err + t * c_lo
    frac = (p - np.floor(p)) + rem
    frac -= np.floor(frac)
    return frac
