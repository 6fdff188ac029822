"""Analytic primitives consumed by the rest of the library.

Complex Riemann and Hurwitz zeta via Euler-Maclaurin (truncated Dirichlet
sum + integral tail + Bernoulli corrections), Bessel J0 (power series /
Hankel asymptotic), modified Bessel K_nu (quadrature of the cosh integral
representation), Riemann-Siegel theta, the normal CDF, and Bernoulli
numbers.  Everything is a pure function; the Bernoulli and Gauss-Legendre
caches are computed once and immutable afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .argred import log_over_two_pi_dd, reduced_angle
from .errors import (
    ConfigurationError,
    DomainError,
    PoleError,
    UnsupportedRangeError,
)

# Documented desk envelope is |Im s| <= 1e4; the guard sits at 2e4 so the
# slow-mode Euler-product cross-check can sample t in [1e4, 2e4].
ZETA_IM_GUARD = 2.0e4
_DD_PHASE_THRESHOLD = 50.0  # above this |Im s|, reduce phases in double-double

EULER_GAMMA = 0.5772156649015328606


@dataclass(frozen=True)
class EulerMaclaurinConfig:
    """Truncation parameters for the Euler-Maclaurin zeta evaluations."""

    direct_terms: int
    bernoulli_terms: int = 15
    target_abs_error: float = 1e-12

    def __post_init__(self):
        if self.direct_terms < 10:
            raise ConfigurationError("direct_terms must be >= 10")
        if not (1 <= self.bernoulli_terms <= 30):
            raise ConfigurationError("bernoulli_terms must be in [1, 30]")
        if self.target_abs_error <= 0:
            raise ConfigurationError("target_abs_error must be positive")


def auto_em_config(im: float) -> EulerMaclaurinConfig:
    """Default truncation: N = max(20, ceil(|Im s|/2) + 20), M = 15."""
    return EulerMaclaurinConfig(max(20, math.ceil(abs(im) / 2) + 20))


@lru_cache(maxsize=1)
def _bernoulli_fractions(up_to: int = 62) -> tuple[Fraction, ...]:
    # B_0 .. B_up_to via sum_{j<=m} C(m+1, j) B_j = 0
    bs = [Fraction(1)]
    for m in range(1, up_to + 1):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * bs[j]
        bs.append(-acc / (m + 1))
    return tuple(bs)


def bernoulli_numbers(up_to_k: int) -> list[float]:
    """Even-index Bernoulli numbers [B_2, B_4, ..., B_{2k}]."""
    if not (1 <= up_to_k <= 30):
        raise UnsupportedRangeError("bernoulli_numbers supports 1 <= k <= 30")
    bs = _bernoulli_fractions()
    return [float(bs[2 * j]) for j in range(1, up_to_k + 1)]


@lru_cache(maxsize=1)
def _b2k_over_factorial(m_max: int = 31) -> np.ndarray:
    bs = _bernoulli_fractions()
    return np.array(
        [float(bs[2 * k] / math.factorial(2 * k)) for k in range(1, m_max + 1)]
    )


# cached log / dd-log tables for the lattice n = 1, 2, 3, ...
_logn: np.ndarray = np.array([])
_logn_dd: tuple[np.ndarray, np.ndarray] | None = None
_logn_dd_len = 0


def _log_lattice(n: int) -> np.ndarray:
    global _logn
    if len(_logn) < n:
        _logn = np.log(np.arange(1, max(n, 2 * len(_logn), 1024) + 1, dtype=np.float64))
    return _logn[:n]


def _log_lattice_dd(n: int) -> tuple[np.ndarray, np.ndarray]:
    global _logn_dd, _logn_dd_len
    if _logn_dd_len < n:
        size = max(n, 2 * _logn_dd_len, 256)
        hi, lo = log_over_two_pi_dd(np.arange(1, size + 1, dtype=np.float64))
        _logn_dd = (hi, lo)
        _logn_dd_len = size
    return _logn_dd[0][:n], _logn_dd[1][:n]


def _dirichlet_block(s: complex, values: np.ndarray, log_values: np.ndarray) -> complex:
    """sum values**(-s), with dd phase reduction when Im s is large."""
    sigma, t = s.real, s.imag
    mods = np.exp(-sigma * log_values)
    if t == 0.0:
        return complex(mods.sum())
    if abs(t) <= _DD_PHASE_THRESHOLD:
        phases = t * log_values
    else:
        hi, lo = log_over_two_pi_dd(values)
        phases = reduced_angle(t, hi, lo)
    return complex(np.sum(mods * np.cos(phases)) - 1j * np.sum(mods * np.sin(phases)))


def _power(base: float, s: complex, use_dd: bool) -> complex:
    """base**(-s) with optional dd phase reduction."""
    lg = math.log(base)
    mod = math.exp(-s.real * lg)
    if s.imag == 0.0:
        return complex(mod)
    if use_dd:
        hi, lo = log_over_two_pi_dd([base])
        phase = float(reduced_angle(s.imag, hi, lo)[0])
    else:
        phase = s.imag * lg
    return mod * complex(math.cos(phase), -math.sin(phase))


def _em_lattice_sum(s: complex, a: float, k: float, cfg: EulerMaclaurinConfig) -> complex:
    """sum_{m>=0} (a + m*k)**(-s) by Euler-Maclaurin.

    Covers zeta (a=1, k=1), Hurwitz zeta, and Dirichlet residue-class sums
    (a, k integers) in one kernel.  Raises if the internal error estimate
    exceeds cfg.target_abs_error.
    """
    n_direct, m_bern = cfg.direct_terms, cfg.bernoulli_terms
    use_dd = abs(s.imag) > _DD_PHASE_THRESHOLD

    if a == 1.0 and k == 1.0:
        lattice = np.arange(1.0, n_direct)
        logs = _log_lattice(n_direct - 1)
        if use_dd:
            hi, lo = _log_lattice_dd(n_direct - 1)
            mods = np.exp(-s.real * logs)
            phases = reduced_angle(s.imag, hi, lo)
            direct = complex(
                np.sum(mods * np.cos(phases)) - 1j * np.sum(mods * np.sin(phases))
            )
        else:
            direct = _dirichlet_block(s, lattice, logs)
    else:
        lattice = a + k * np.arange(0.0, n_direct - 1)
        direct = _dirichlet_block(s, lattice, np.log(lattice))

    edge = a + k * (n_direct - 1)
    edge_pow = _power(edge, s, use_dd)  # edge**(-s)

    total = direct + edge_pow * (edge / (k * (s - 1.0)) + 0.5)

    # Bernoulli corrections: B_2j/(2j)! * k**(2j-1) * (s)_{2j-1} * edge**(-s-2j+1)
    coeffs = _b2k_over_factorial()
    poch = s  # (s)_1
    scale = edge_pow * edge  # edge**(1-s)
    kk = k
    inv_e2 = 1.0 / (edge * edge)
    term = 0.0
    for j in range(1, m_bern + 1):
        scale *= inv_e2
        term = coeffs[j - 1] * kk * poch * scale
        total += term
        poch *= (s + (2 * j - 1)) * (s + 2 * j)
        kk *= k * k
    # first omitted term as the error estimate, inflated by the standard
    # |s + 2M+1| / (sigma + 2M+1) remainder factor
    sig = s.real
    omitted = abs(coeffs[m_bern] * kk * poch * scale * inv_e2)
    est = omitted * abs(s + (2 * m_bern + 1)) / max(sig + 2 * m_bern + 1, 1e-9)
    if est > cfg.target_abs_error:
        raise ConfigurationError(
            f"Euler-Maclaurin error estimate {est:.3e} exceeds target "
            f"{cfg.target_abs_error:.3e}; increase direct_terms/bernoulli_terms"
        )
    return complex(total)


def zeta(s: complex, cfg: EulerMaclaurinConfig | None = None) -> complex:
    """Riemann zeta by Euler-Maclaurin.

    Validated envelope: Re(s) > -1, |Im(s)| <= 1e4 (guard trips at 2e4),
    s != 1.  Auto config targets 1e-12 absolute error.
    """
    s = complex(s)
    if s == 1.0:
        raise PoleError("zeta has a pole at s = 1")
    if s.real <= -1.0:
        raise UnsupportedRangeError(f"zeta implemented for Re(s) > -1, got {s.real}")
    if abs(s.imag) > ZETA_IM_GUARD:
        raise UnsupportedRangeError(
            f"|Im(s)| = {abs(s.imag):.4g} outside the desk envelope"
        )
    if cfg is None:
        cfg = auto_em_config(s.imag)
    return _em_lattice_sum(s, 1.0, 1.0, cfg)


def hurwitz_zeta(s: complex, a: float, cfg: EulerMaclaurinConfig | None = None) -> complex:
    """Hurwitz zeta(s, a) for 0 < a <= 1, by the same Euler-Maclaurin kernel."""
    s = complex(s)
    if not (0.0 < a <= 1.0):
        raise DomainError(f"hurwitz_zeta requires 0 < a <= 1, got a = {a}")
    if s == 1.0:
        raise PoleError("hurwitz_zeta has a pole at s = 1")
    if s.real <= -1.0:
        raise UnsupportedRangeError("hurwitz_zeta implemented for Re(s) > -1")
    if abs(s.imag) > ZETA_IM_GUARD:
        raise UnsupportedRangeError("|Im(s)| outside the desk envelope")
    if -s.real * math.log(a) > 690.0:
        raise UnsupportedRangeError("a**(-Re s) overflows double precision")
    if cfg is None:
        cfg = auto_em_config(s.imag)
    return _em_lattice_sum(s, float(a), 1.0, cfg)


def residue_class_sum(s: complex, a: int, k: int, cfg: EulerMaclaurinConfig | None = None) -> complex:
    """sum over m ~ a (mod k), m >= a, of m**(-s); equals k**(-s) zeta(s, a/k).

    Evaluated directly on the shifted lattice so large Re(s) cannot overflow
    the intermediate Hurwitz value.
    """
    s = complex(s)
    if not (1 <= a <= k):
        raise DomainError("residue class representative must satisfy 1 <= a <= k")
    if s == 1.0:
        raise PoleError("residue-class sum inherits the pole at s = 1")
    if cfg is None:
        cfg = auto_em_config(s.imag)
    return _em_lattice_sum(s, float(a), float(k), cfg)


# ---------------------------------------------------------------------------
# Bessel J0


def _j0_series(x: float) -> float:
    # power series sum (-1)^m (x/2)^{2m} / (m!)^2 with compensated summation
    q = 0.25 * x * x
    term = 1.0
    total = 1.0
    comp = 0.0
    m = 0
    while True:
        m += 1
        term *= -q / (m * m)
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if abs(term) < 1e-18 * (1.0 + abs(total)):
            return total


def _j0_asymptotic(x: float) -> float:
    # Hankel expansion, both series truncated at their smallest term:
    # J0 = sqrt(2/pi x) [P cos(x - pi/4) + Q sin(x - pi/4)] with
    # P = 1 - b2/x^2 + b4/x^4 - ..., Q = b1/x - b3/x^3 + ...,
    # b_k = ((2k-1)!!)^2 / (k! 8^k)
    ax = abs(x)
    p_sum = 1.0
    term = 1.0 / (8.0 * ax)  # b1/x
    q_sum = term
    prev = term
    sign = -1.0
    for j in range(1, 40):
        term = term * (4 * j - 1) ** 2 / (8.0 * (2 * j) * ax)  # b_{2j}/x^{2j}
        if term > prev:
            break
        p_sum += sign * term
        prev = term
        term = term * (4 * j + 1) ** 2 / (8.0 * (2 * j + 1) * ax)  # b_{2j+1}/x^{2j+1}
        if term > prev:
            break
        q_sum += sign * term
        prev = term
        sign = -sign
        if term < 1e-19:
            break
    w = ax - 0.25 * math.pi
    return math.sqrt(2.0 / (math.pi * ax)) * (p_sum * math.cos(w) + q_sum * math.sin(w))


def bessel_j0(x: float) -> float:
    """Bessel J0: power series for |x| <= 12, Hankel asymptotic beyond."""
    ax = abs(x)
    if ax > 1e4:
        raise UnsupportedRangeError("bessel_j0 validated for |x| <= 1e4")
    if ax <= 12.0:
        return _j0_series(ax)
    return _j0_asymptotic(ax)


def bessel_j0_vec(x: np.ndarray) -> np.ndarray:
    """Vectorized J0 for |x| <= 12 (series); scalar fallback beyond."""
    x = np.abs(np.asarray(x, dtype=np.float64))
    out = np.empty_like(x)
    small = x <= 12.0
    if np.any(small):
        q = 0.25 * x[small] ** 2
        term = np.ones_like(q)
        total = np.ones_like(q)
        for m in range(1, 60):
            term *= -q / (m * m)
            total += term
            if np.all(np.abs(term) < 1e-18):
                break
        out[small] = total
    for i in np.flatnonzero(~small):
        out[i] = _j0_asymptotic(float(x[i]))
    return out


# ---------------------------------------------------------------------------
# Bessel K_nu


@lru_cache(maxsize=4)
def _gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(n)
    return nodes, weights


def _k_cutoff(nu: float, x: float) -> float:
    # smallest u with x*(cosh u - 1) - |nu|*u > 43, past which the scaled
    # integrand is below 1e-18 of its peak
    anu = abs(nu)
    u = 1.0
    for _ in range(80):
        nxt = math.acosh(1.0 + (43.0 + anu * u) / x)
        if abs(nxt - u) < 1e-12:
            return nxt
        u = nxt
    return u


def _adaptive_simpson(f, a: float, b: float, tol: float) -> float:
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)

    def recurse(a, b, fa, fb, fm, whole, tol, depth):
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        if depth <= 0 or abs(left + right - whole) < 15.0 * tol:
            return left + right + (left + right - whole) / 15.0
        return recurse(a, m, fa, fm, flm, left, 0.5 * tol, depth - 1) + recurse(
            m, b, fm, fb, frm, right, 0.5 * tol, depth - 1
        )

    return recurse(a, b, fa, fb, fm, whole, tol, 40)


def _log_cosh(y: float) -> float:
    ay = abs(y)
    if ay > 30.0:
        return ay - math.log(2.0) + math.log1p(math.exp(-2.0 * ay))
    return math.log(math.cosh(ay))


def bessel_k_scaled(nu: float, x: float) -> float:
    """Exponentially scaled e^x K_nu(x), from the cosh integral representation."""
    if x <= 0:
        raise DomainError("bessel_k requires x > 0")
    if abs(nu) > 50:
        raise UnsupportedRangeError("bessel_k validated for |nu| <= 50")
    nu = abs(nu)
    u_max = _k_cutoff(nu, x)

    def exponent(u: float) -> float:
        return -x * (math.cosh(u) - 1.0) + _log_cosh(nu * u)

    peak = max(exponent(i * u_max / 64.0) for i in range(65))
    if peak > 690.0:
        raise UnsupportedRangeError(
            "scaled K_nu exceeds double range; reduce nu or increase x"
        )

    def f(u: float) -> float:
        return math.exp(exponent(u))

    coarse = sum(f(i * u_max / 64.0) for i in range(65)) * u_max / 64.0
    return _adaptive_simpson(f, 0.0, u_max, max(1e-13 * coarse, 5e-324))


def bessel_k(nu: float, x: float) -> float:
    """Modified Bessel K_nu(x), relative error ~1e-10 on the desk envelope.

    Underflows to 0 for x beyond ~740; use bessel_k_scaled there.
    """
    return bessel_k_scaled(nu, x) * math.exp(-x)


def log_bessel_k_scaled_vec(nu: float, x: np.ndarray, n_nodes: int = 384) -> np.ndarray:
    """log(e^x K_nu(x)) for an array of arguments, by Gauss-Legendre.

    Internal fast path for the generalized hyperbolic formulas; |nu| must be
    modest (<= 6) so a shared node layout resolves every element.
    """
    x = np.asarray(x, dtype=np.float64)
    if np.any(x <= 0):
        raise DomainError("bessel_k requires x > 0")
    nu = abs(nu)
    if nu > 6:
        return np.array([math.log(bessel_k_scaled(nu, float(v))) for v in x])
    u_max = max(_k_cutoff(nu, float(np.min(x))), 1e-3)
    nodes, weights = _gauss_legendre(n_nodes)
    u = 0.5 * u_max * (nodes + 1.0)
    w = 0.5 * u_max * weights
    expo = -np.outer(x, np.cosh(u) - 1.0) + np.log(np.cosh(nu * u))[None, :]
    peak = expo.max(axis=1, keepdims=True)
    vals = np.exp(expo - peak) @ w
    return peak[:, 0] + np.log(vals)


# ---------------------------------------------------------------------------
# Riemann-Siegel theta, normal CDF


def riemann_siegel_theta(t: float) -> float:
    """theta(t) = t/2 log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3)."""
    if t < 1.0:
        raise UnsupportedRangeError("riemann_siegel_theta requires t >= 1")
    return (
        0.5 * t * math.log(t / (2.0 * math.pi))
        - 0.5 * t
        - math.pi / 8.0
        + 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t**3)
    )


def normal_cdf(z: float) -> float:
    """Standard normal CDF via the complementary error function."""
    return 0.5 * math.erfc(-z / math.sqrt(2.0))
