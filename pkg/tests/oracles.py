"""Independent oracles for the test suite.

Each of these re-derives a quantity along a different route from the
library implementation it checks: alternating-series (Borwein) zeta,
brute-force Hurwitz sums, trial-division prime counting, the
Akiyama-Tanigawa Bernoulli recurrence, quadrature normal CDF, and direct
prime sums with integral tail estimates.  Keeping them here, decoupled
from src/, is what makes the dual-route checks meaningful.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np


def trial_division_pi(limit: int) -> int:
    """pi(limit) by bare trial division; slow and obviously correct."""
    count = 0
    for n in range(2, limit + 1):
        d = 2
        is_prime = True
        while d * d <= n:
            if n % d == 0:
                is_prime = False
                break
            d += 1 if d == 2 else 2
        count += is_prime
    return count


def eta_zeta(s: complex, n: int | None = None) -> complex:
    """zeta via the alternating (eta) series, Borwein acceleration.

    zeta(s) = eta(s) / (1 - 2**(1-s));  reliable for |Im s| <= ~60 with the
    default term count, which covers the low-zero cross-checks.
    """
    s = complex(s)
    if n is None:
        n = max(48, int((math.pi * abs(s.imag) / 2 + 45) / math.log(3 + math.sqrt(8))) + 8)
    # d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    ds = []
    term = Fraction(math.factorial(n - 1) * n, math.factorial(n))  # i = 0 entry * n
    acc = term
    ds.append(acc)
    for i in range(1, n + 1):
        term = term * 4 * (n + i - 1) * (n - i + 1) / ((2 * i) * (2 * i - 1))
        acc += term
        ds.append(acc)
    d_n = float(ds[n])
    d_float = [float(d) for d in ds[:n]]
    total = 0.0 + 0.0j
    for k in range(n):
        total += (-1) ** k * (d_float[k] - d_n) * cmath.exp(-s * math.log(k + 1))
    eta = -total / d_n
    return eta / (1.0 - 2.0 ** complex(1 - s) if s != 1 else 1.0)


def hurwitz_brute(s: complex, a: float, terms: int = 2_000_000) -> complex:
    """Partial sum of (n+a)^-s plus the integral tail (valid Re s > 1)."""
    s = complex(s)
    n = np.arange(terms, dtype=np.float64) + a
    partial = np.sum(n ** (-s))
    edge = terms + a
    tail = edge ** (1 - s) / (s - 1) + 0.5 * edge ** (-s)
    return complex(partial + tail)


def j0_series_ref(x: float, terms: int = 80) -> float:
    """Plain power-series J0 without compensation (independent coding)."""
    q = 0.25 * x * x
    total, term = 1.0, 1.0
    for m in range(1, terms):
        term *= -q / (m * m)
        total += term
    return total


def bisect_root(f, lo: float, hi: float, tol: float = 1e-12) -> float:
    f_lo = f(lo)
    if f_lo == 0:
        return lo
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if f_mid == 0:
            return mid
        if (f_lo < 0) != (f_mid < 0):
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)


def theta_with_next_term(t: float) -> float:
    """Riemann-Siegel theta including one more asymptotic term (31/80640 t^5)."""
    return (
        0.5 * t * math.log(t / (2 * math.pi))
        - 0.5 * t
        - math.pi / 8
        + 1 / (48 * t)
        + 7 / (5760 * t**3)
        + 31 / (80640 * t**5)
    )


def normal_cdf_simpson(z: float, n: int = 40001) -> float:
    """Phi(z) by composite Simpson over [-12, z] (density integrates to 1)."""
    lo = -12.0
    if z <= lo:
        return 0.0
    xs = np.linspace(lo, z, n if n % 2 == 1 else n + 1)
    ys = np.exp(-0.5 * xs * xs) / math.sqrt(2 * math.pi)
    h = xs[1] - xs[0]
    return float(h / 3 * (ys[0] + ys[-1] + 4 * ys[1:-1:2].sum() + 2 * ys[2:-1:2].sum()))


def bernoulli_akiyama_tanigawa(n_max: int) -> list[Fraction]:
    """B_0..B_n by the Akiyama-Tanigawa triangle (first-kind convention)."""
    out = []
    row: list[Fraction] = []
    for n in range(n_max + 1):
        row.append(Fraction(1, n + 1))
        for j in range(n, 0, -1):
            row[j - 1] = j * (row[j - 1] - row[j])
        out.append(row[0])
    # Akiyama-Tanigawa yields B_1 = +1/2; flip to the B_1 = -1/2 convention
    if n_max >= 1:
        out[1] = -out[1]
    return out


def primes_by_sieve(limit: int) -> np.ndarray:
    """Local sieve, independent of the package implementation."""
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask)


def prime_zeta_direct(s: complex, limit: int) -> complex:
    """Plain truncated prime sum with a locally sieved prime list."""
    ps = primes_by_sieve(limit).astype(np.float64)
    return complex(np.sum(ps ** (-complex(s))))


def prime_tail_integral(sigma: float, limit: int) -> float:
    """integral_x>limit x^-sigma / log x dx, the prime-sum tail estimate."""
    us = np.linspace(math.log(limit), math.log(limit) + 60.0 / max(sigma - 1, 0.1), 20001)
    ys = np.exp((1.0 - sigma) * us) / us
    h = us[1] - us[0]
    return float(h / 3 * (ys[0] + ys[-1] + 4 * ys[1:-1:2].sum() + 2 * ys[2:-1:2].sum()))


def composite_simpson(f, lo: float, hi: float, n: int = 20001) -> float:
    xs = np.linspace(lo, hi, n if n % 2 == 1 else n + 1)
    ys = f(xs)
    h = xs[1] - xs[0]
    return float(h / 3 * (ys[0] + ys[-1] + 4 * ys[1:-1:2].sum() + 2 * ys[2:-1:2].sum()))


def seeded_normals(seed: int, count: int) -> np.ndarray:
    """Box-Muller normals from the package's counter RNG (synthetic control)."""
    from zetacond.rng import uniform_block

    u1 = uniform_block(seed, 0, count)
    u2 = uniform_block(seed + 1, 0, count)
    r = np.sqrt(-2.0 * np.log(np.maximum(u1, 1e-300)))
    return r * np.cos(2 * math.pi * u2)


def seeded_cauchy(seed: int, count: int) -> np.ndarray:
    from zetacond.rng import uniform_block

    u = uniform_block(seed, 0, count)
    return np.tan(math.pi * (u - 0.5))


MERTENS_CONSTANT = 0.2614972128476428
KOLMOGOROV_99 = 1.628  # c with P(sqrt(M) D > c) = 0.01
CATALAN = 0.9159655941772190151
