"""The prime zeta function P(s) = sum over primes of p**(-s).

Truncated sums are exact; the analytic continuation to Re(s) > 1/2 uses the
Moebius-weighted log-zeta series

    P(s) = sum_{n>=1} mu(n)/n * log zeta(n s),

whose n >= 2 tail is bounded by sum (zeta(n)-1)/n = 1 - gamma.  That bound
is what caps the epsilon remainder in the critical-line prediction, so it
gets its own accessor here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .argred import log_over_two_pi_dd, reduced_angle
from .errors import ConfigurationError, DomainError, NearPoleError
from .primes import mobius, primes_up_to
from .special_functions import EULER_GAMMA, zeta

POLE_GUARD = 1e-6  # reject s within this distance of s = 1
MOBIUS_SERIES_CAP = 64
_DD_THRESHOLD = 100.0  # |Im s| above which truncated sums reduce phases in dd


@dataclass(frozen=True)
class TruncationPolicy:
    """Cutoff rule: either a fixed X or the T**(1/(logloglog T)^2) rule."""

    rule: str  # "fixed" | "paper"
    value: float

    def cutoff(self) -> int:
        if self.rule == "fixed":
            x = int(self.value)
            if x < 2:
                raise ConfigurationError("fixed cutoff must be >= 2")
            return x
        if self.rule == "paper":
            t = self.value
            if t < 1e6:
                raise ConfigurationError("paper cutoff rule requires T >= 1e6")
            lll = math.log(math.log(math.log(t)))
            return max(2, int(round(t ** (1.0 / lll**2))))
        raise ConfigurationError(f"unknown truncation rule {self.rule!r}")


class TruncatedPrimeZeta:
    """P_X(s) evaluator with the p**(-sigma) cache reused across lags."""

    def __init__(self, cutoff: int, sigma: float):
        if cutoff < 2:
            raise ConfigurationError("cutoff must be >= 2")
        if sigma <= 0:
            raise DomainError("truncated prime zeta cached for Re(s) > 0 only")
        self.cutoff = int(cutoff)
        self.sigma = float(sigma)
        self.primes = primes_up_to(self.cutoff).astype(np.float64)
        self.log_primes = np.log(self.primes)
        self.weights = np.exp(-sigma * self.log_primes)

    def real_part(self, delta: float) -> float:
        """Re P_X(sigma + i*delta) = sum p**(-sigma) cos(delta log p)."""
        if delta == 0.0:
            return float(np.sum(self.weights))
        if abs(delta) <= _DD_THRESHOLD:
            angles = delta * self.log_primes
        else:
            hi, lo = log_over_two_pi_dd(self.primes)
            angles = reduced_angle(delta, hi, lo)
        return float(np.sum(self.weights * np.cos(angles)))

    def value(self, delta: float) -> complex:
        if delta == 0.0:
            return complex(np.sum(self.weights))
        if abs(delta) <= _DD_THRESHOLD:
            angles = delta * self.log_primes
        else:
            hi, lo = log_over_two_pi_dd(self.primes)
            angles = reduced_angle(delta, hi, lo)
        return complex(
            np.sum(self.weights * np.cos(angles)),
            -np.sum(self.weights * np.sin(angles)),
        )


def prime_zeta_truncated(s: complex, cutoff: int) -> complex:
    """Exact truncated sum over p <= cutoff of p**(-s), Re(s) > 0."""
    s = complex(s)
    if s.real <= 0:
        raise DomainError("prime_zeta_truncated requires Re(s) > 0")
    return TruncatedPrimeZeta(cutoff, s.real).value(s.imag)


def _series_length(sigma: float) -> int:
    # smallest n_max with (zeta(n*sigma) - 1)/n < 1e-17 for all omitted n,
    # using zeta(x) - 1 < 2**(1-x); capped at 64 (remainder < 1e-18 there)
    for n in range(2, MOBIUS_SERIES_CAP + 1):
        if (n + 1) * sigma * math.log(2.0) - math.log(n + 1) > 17.0 * math.log(10.0):
            return n
    return MOBIUS_SERIES_CAP


def _check_domain(s: complex) -> None:
    if s.real <= 0.5:
        raise DomainError(
            "prime zeta continuation is restricted to Re(s) > 1/2 "
            "(zeros of zeta make it singular at and left of the critical line)"
        )
    if abs(s - 1.0) < POLE_GUARD:
        raise NearPoleError(f"s = {s} is within {POLE_GUARD} of the pole at 1")


def prime_zeta(s: complex) -> complex:
    """P(s) by Moebius inversion of log zeta; principal branch per term."""
    s = complex(s)
    _check_domain(s)
    total = 0.0 + 0.0j
    for n in range(1, _series_length(s.real) + 1):
        mu = mobius(n)
        if mu == 0:
            continue
        z = zeta(n * s)
        total += (mu / n) * np.log(complex(z))
    return complex(total)


def re_prime_zeta(sigma: float, delta: float) -> float:
    """Re P(sigma + i delta) from log-moduli only (no branch tracking)."""
    s = complex(sigma, delta)
    _check_domain(s)
    total = 0.0
    for n in range(1, _series_length(sigma) + 1):
        mu = mobius(n)
        if mu == 0:
            continue
        total += (mu / n) * math.log(abs(zeta(n * s)))
    return total


def mean_and_epsilon(delta: float) -> tuple[float, float]:
    """(-Re P(1 + i delta), epsilon(delta)) sharing one Moebius pass.

    epsilon is the n >= 2 remainder of the series split
    Re P(1+i delta) = log|zeta(1+i delta)| - epsilon(delta), so the
    critical-line mean is -Re P(1+i delta) and
    mean + log|zeta(1+i delta)| = epsilon with |epsilon| < 1 - gamma.
    """
    if delta < POLE_GUARD:
        raise NearPoleError(f"delta = {delta} is inside the pole guard {POLE_GUARD}")
    s = complex(1.0, delta)
    head = math.log(abs(zeta(s)))
    tail = 0.0
    for n in range(2, _series_length(1.0) + 1):
        mu = mobius(n)
        if mu == 0:
            continue
        tail += (mu / n) * math.log(abs(zeta(n * s)))
    # Re P = head + tail; epsilon = -tail
    return -(head + tail), -tail


def epsilon_of_delta(delta: float) -> float:
    """epsilon(delta) = -Re P(1+i delta) + log|zeta(1+i delta)|; |eps| < 1-gamma."""
    return mean_and_epsilon(delta)[1]


def epsilon_bound() -> float:
    """sum_{n=2}^{60} (zeta(n)-1)/n; equals 1 - gamma to ~1e-18."""
    return float(sum((zeta(float(n)).real - 1.0) / n for n in range(2, 61)))


def truncated_variance(cutoff: int) -> float:
    """(1/2) sum_{p <= cutoff} 1/p, the critical-line variance proxy."""
    if cutoff < 2:
        raise ConfigurationError("cutoff must be >= 2")
    ps = primes_up_to(cutoff)
    return 0.5 * float(np.sum(1.0 / ps.astype(np.float64)))


ONE_MINUS_GAMMA = 1.0 - EULER_GAMMA
