"""Dirichlet characters, L-functions, and the prime series P_chi.

Characters mod k are stored in generator-exponent coordinates over the
cyclic decomposition of (Z/kZ)* (primitive roots for odd prime powers,
{-1} x <3> for 2^e with e >= 3), so chi^n is an index operation and group
orthogonality is exact by construction.  L(s, chi) is evaluated by
Euler-Maclaurin residue-class sums; P_chi(s) continues through
sum mu(n)/n log L(ns, chi^n) exactly as in the zeta case, with the
epsilon-bound correction sum_{p|k} 1/p.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import (
    ConfigurationError,
    DegenerateModulusError,
    DomainError,
    NearPoleError,
    PoleError,
    UnsupportedRangeError,
)
from .predictor import ClassifierVerdict, DivergenceCase
from .prime_zeta import POLE_GUARD, re_prime_zeta, _series_length
from .primes import factorize, mobius
from .special_functions import (
    EULER_GAMMA,
    EulerMaclaurinConfig,
    residue_class_sum,
    zeta,
)

MAX_MODULUS = 10**4
TWO_PI = 2.0 * math.pi


def _primitive_root(p: int) -> int:
    phi = p - 1
    prime_factors = [q for q, _ in factorize(phi).factors]
    for g in range(2, p):
        if all(pow(g, phi // q, p) != 1 for q in prime_factors):
            return g
    raise ConfigurationError(f"no primitive root found mod {p}")


@dataclass(frozen=True)
class _Component:
    """One cyclic factor of (Z/kZ)*: residue (mod q) -> discrete log."""

    prime_power: int
    order: int
    dlog: dict[int, int]


@lru_cache(maxsize=256)
def _unit_group(k: int) -> tuple[tuple[_Component, ...], tuple[int, ...]]:
    """Cyclic components of (Z/kZ)* and the primes dividing k."""
    comps: list[_Component] = []
    prime_divisors = []
    for p, e in factorize(k).factors:
        prime_divisors.append(p)
        q = p**e
        if p == 2:
            if e == 1:
                continue  # (Z/2)* trivial
            if e == 2:
                comps.append(_Component(4, 2, {1: 0, 3: 1}))
            else:
                half = q // 4  # order of 3 mod 2^e
                table_sign: dict[int, int] = {}
                table_pow: dict[int, int] = {}
                val = 1
                for y in range(half):
                    table_sign[val] = 0
                    table_pow[val] = y
                    table_sign[q - val] = 1
                    table_pow[q - val] = y
                    val = (val * 3) % q
                comps.append(_Component(q, 2, table_sign))
                comps.append(_Component(q, half, table_pow))
        else:
            g = _primitive_root(p)
            if pow(g, p - 1, p * p) == 1:
                g += p
            order = q // p * (p - 1)
            table = {}
            val = 1
            for j in range(order):
                table[val] = j
                val = (val * g) % q
            comps.append(_Component(q, order, table))
    return tuple(comps), tuple(prime_divisors)


@dataclass(frozen=True)
class DirichletCharacter:
    """chi mod k encoded by its exponents on the unit-group generators."""

    modulus: int
    exponents: tuple[int, ...]
    components: tuple[_Component, ...] = field(repr=False, compare=False)

    @property
    def principal(self) -> bool:
        return all(c == 0 for c in self.exponents)

    @property
    def order(self) -> int:
        d = 1
        for c, comp in zip(self.exponents, self.components):
            d = math.lcm(d, comp.order // math.gcd(c, comp.order))
        return d

    def __call__(self, a: int) -> complex:
        a = a % self.modulus
        if self.modulus == 1:
            return 1.0 + 0.0j
        if math.gcd(a, self.modulus) != 1:
            return 0.0 + 0.0j
        # exact rational rotation: sum_j c_j * dlog_j(a) / d_j (mod 1)
        num, den = 0, 1
        for c, comp in zip(self.exponents, self.components):
            ell = comp.dlog[a % comp.prime_power]
            num = num * comp.order + c * ell * den
            den *= comp.order
            num %= den
        return cmath.exp(2j * math.pi * (num / den))

    def values(self) -> np.ndarray:
        """chi(a) for a = 0 .. k-1."""
        return np.array([self(a) for a in range(self.modulus)])

    def power(self, n: int) -> "DirichletCharacter":
        """chi**n by exponent arithmetic (chi^order = principal)."""
        exps = tuple(
            (c * n) % comp.order for c, comp in zip(self.exponents, self.components)
        )
        return DirichletCharacter(self.modulus, exps, self.components)

    def conjugate(self) -> "DirichletCharacter":
        return self.power(-1)


def character_group(k: int) -> list[DirichletCharacter]:
    """All phi(k) characters mod k; exactly one is principal (listed first)."""
    if not (1 <= k <= MAX_MODULUS):
        raise UnsupportedRangeError(f"modulus must be in [1, {MAX_MODULUS}]")
    comps, _ = _unit_group(k)
    chars: list[DirichletCharacter] = []
    exps = [0] * len(comps)
    while True:
        chars.append(DirichletCharacter(k, tuple(exps), comps))
        for j in range(len(comps) - 1, -1, -1):
            exps[j] += 1
            if exps[j] < comps[j].order:
                break
            exps[j] = 0
        else:
            break  # odometer wrapped: all characters emitted
    return chars


def prime_divisors(k: int) -> tuple[int, ...]:
    return _unit_group(k)[1]


def l_function(
    s: complex, chi: DirichletCharacter, cfg: EulerMaclaurinConfig | None = None
) -> complex:
    """L(s, chi) = k^{-s} sum_a chi(a) zeta(s, a/k), via residue-class sums.

    The principal character routes through zeta times its Euler factors,
    which is the same analytic object and avoids the pole cancellation.
    """
    s = complex(s)
    if s.real <= 0.5:
        raise UnsupportedRangeError("l_function validated for Re(s) > 1/2")
    k = chi.modulus
    if chi.principal:
        if abs(s - 1.0) < POLE_GUARD:
            raise PoleError("principal L inherits the zeta pole at s = 1")
        value = zeta(s, cfg)
        for p in prime_divisors(k):
            value *= 1.0 - p ** (-s)
        return value
    total = 0.0 + 0.0j
    for a in range(1, k + 1):
        c = chi(a)
        if c != 0:
            total += c * residue_class_sum(s, a, k, cfg)
    return complex(total)


def prime_zeta_chi(s: complex, chi: DirichletCharacter) -> complex:
    """P_chi(s) = sum_n mu(n)/n log L(ns, chi^n), Re(s) >= 1."""
    s = complex(s)
    if s.real < 1.0:
        raise DomainError("prime_zeta_chi requires Re(s) >= 1")
    k = chi.modulus
    total = 0.0 + 0.0j
    for n in range(1, _series_length(s.real) + 1):
        mu = mobius(n)
        if mu == 0:
            continue
        chi_n = chi.power(n)
        ns = n * s
        if chi_n.principal:
            if abs(ns - 1.0) < POLE_GUARD:
                raise NearPoleError(
                    f"principal term at n={n} lands within the pole guard of 1"
                )
            log_l = np.log(complex(zeta(ns)))
            for p in prime_divisors(k):
                log_l += np.log(1.0 - complex(p) ** (-ns))
        else:
            log_l = np.log(complex(l_function(ns, chi_n)))
        total += (mu / n) * log_l
    return complex(total)


def l_epsilon_bound(k: int) -> float:
    """Critical-line remainder bound for L mod k: 1 - gamma + sum_{p|k} 1/p."""
    if k < 1:
        raise DomainError("modulus must be >= 1")
    return 1.0 - EULER_GAMMA + sum(1.0 / p for p, _ in factorize(k).factors)


def _corrected_discriminant(sigma: float, delta: float, k: int) -> float:
    disc = re_prime_zeta(2.0 * sigma, delta)
    for p in prime_divisors(k):
        disc -= p ** (-2.0 * sigma) * math.cos(delta * math.log(p))
    return disc


def l_classify(
    sigma: float, delta: float, k: int, tolerance: float = 1e-8
) -> ClassifierVerdict:
    """Thm-3.1-style verdict for L mod k, with the p | k correction."""
    if sigma <= 0.5:
        raise DomainError("classification requires sigma > 1/2")
    if not (1 <= k <= MAX_MODULUS):
        raise UnsupportedRangeError(f"modulus must be in [1, {MAX_MODULUS}]")
    disc = _corrected_discriminant(sigma, delta, k)
    if disc > tolerance:
        case = DivergenceCase.DIVERGES_TO_MINUS_INFINITY
    elif disc < -tolerance:
        case = DivergenceCase.DIVERGES_TO_PLUS_INFINITY
    else:
        case = DivergenceCase.BOUNDED_MEAN
    return ClassifierVerdict(case, disc)


def l_correlation_ratio(sigma: float, delta: float, k: int) -> float:
    """Corrected autocorrelation; denominator P(2s) - sum_{p|k} p^{-2s}."""
    if sigma <= 0.5:
        raise DomainError("correlation ratio requires sigma > 1/2")
    denom = _corrected_discriminant(sigma, 0.0, k)
    if denom <= 0:
        raise DegenerateModulusError(
            f"prime sum of modulus {k} exhausts P({2 * sigma:g})"
        )
    return _corrected_discriminant(sigma, delta, k) / denom


def character_to_json(chi: DirichletCharacter, index: int) -> dict:
    """Dump format: modulus, index, order, principal, values as (re, im)."""
    return {
        "modulus": chi.modulus,
        "index": index,
        "order": chi.order,
        "principal": chi.principal,
        "values": [[v.real, v.imag] for v in chi.values()],
    }
