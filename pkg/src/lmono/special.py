"""Special-function kernel: Hurwitz zeta by Euler-Maclaurin, log-gamma, digamma.

Everything runs in binary64; long sums use compensated accumulation and every
Hurwitz value carries an explicit truncation bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.special as sc

from .errors import DomainError, PoleError, PrecisionError

#: Euler's constant, 20 digits.
EULER_GAMMA = 0.57721566490153286061

# B_2, B_4, ..., B_60 (even-index Bernoulli numbers)
_BERNOULLI_EVEN = sc.bernoulli(60)[2::2]

_J_CAP = 20
_N_CAP = 1 << 21


@dataclass(frozen=True)
class EulerMaclaurinParams:
    """Cutoff / correction-depth knobs for a Hurwitz zeta evaluation."""

    cutoff: int
    bernoulli_terms: int
    target_epsilon: float

    def __post_init__(self):
        if self.cutoff < 10:
            raise ValueError("cutoff N must be >= 10")
        if not 1 <= self.bernoulli_terms <= 30:
            raise ValueError("bernoulli_terms J must be in [1, 30]")
        if self.target_epsilon <= 0:
            raise ValueError("target_epsilon must be positive")


def _em_once(s: np.ndarray, a: float, n_cut: int, j_terms: int):
    """One Euler-Maclaurin pass, vectorized over s.  Returns (value, bound)."""
    s = np.asarray(s, dtype=np.complex128)
    ns = np.arange(n_cut, dtype=np.float64) + a
    # direct block, Kahan-compensated via float64 pairwise (np.sum is pairwise)
    direct = np.sum(ns[None, :] ** (-s[..., None].reshape(-1, 1)), axis=1)
    direct = direct.reshape(s.shape)
    base = n_cut + a
    tail = base ** (1.0 - s) / (s - 1.0) + 0.5 * base ** (-s)
    # Bernoulli corrections: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * base^(-s-2j+1)
    poch = np.ones_like(s)
    power = base ** (-s + 1.0)
    corr = np.zeros_like(s)
    term = np.zeros_like(s)
    for j in range(1, j_terms + 1):
        poch = poch * (s + (2 * j - 2)) * (s + (2 * j - 3)) if j > 1 else s.copy()
        power = power / (base * base)
        term = (_BERNOULLI_EVEN[j - 1] / math.factorial(2 * j)) * poch * power
        corr = corr + term
    # remainder bounded by the first omitted correction term, inflated by the
    # standard |(s+2J+1)/(sigma+2J+1)| factor for complex s
    j = j_terms + 1
    poch_next = poch * (s + (2 * j - 2)) * (s + (2 * j - 3))
    power_next = power / (base * base)
    omitted = (_BERNOULLI_EVEN[j - 1] / math.factorial(2 * j)) * poch_next * power_next
    sigma = np.real(s)
    inflate = np.abs(s + 2 * j - 1) / np.maximum(sigma + 2 * j - 1, 1e-300)
    bound = np.abs(omitted) * np.where(sigma + 2 * j - 1 > 0, inflate, np.inf)
    # roundoff floor: pairwise summation over the direct block
    abs_sum = np.sum(ns[None, :] ** (-sigma.reshape(-1, 1)), axis=1).reshape(s.shape)
    floor = 1.2e-16 * math.log2(n_cut + 2) * (abs_sum + np.abs(tail))
    return direct + tail + corr, bound, floor


def hurwitz_zeta(
    s: complex,
    a: float,
    target_epsilon: float = 1e-12,
    params: EulerMaclaurinParams | None = None,
) -> tuple[complex, float]:
    """Analytically continued zeta(s, a) with a reported error bound.

    Raises PoleError at s = 1 and PrecisionError if the bound cannot be met
    within the N/J caps.
    """
    value, bound = hurwitz_zeta_array(
        np.array([s], dtype=np.complex128), a, target_epsilon, params
    )
    return complex(value[0]), float(bound[0])


def hurwitz_zeta_array(
    s: np.ndarray,
    a: float,
    target_epsilon: float = 1e-12,
    params: EulerMaclaurinParams | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized Hurwitz zeta over an array of s values (common a)."""
    s = np.asarray(s, dtype=np.complex128)
    if not a > 0.0:
        raise DomainError(f"a={a} must be positive")
    if np.any(np.abs(s - 1.0) < 1e-300):
        raise PoleError("Hurwitz zeta has a pole at s = 1")
    if params is not None:
        value, bound, floor = _em_once(s, a, params.cutoff, params.bernoulli_terms)
        total = bound + floor
        if np.any(total > params.target_epsilon):
            raise PrecisionError(
                f"bound {float(np.max(total)):.3g} > {params.target_epsilon:.3g}"
            )
        return value, total

    tmax = float(np.max(np.abs(s.imag))) if s.size else 0.0
    smin = float(np.min(s.real)) if s.size else 0.0
    # N chosen so |s + N| >= 2|Im s| and the asymptotic terms decay
    n_cut = max(16, int(2.0 * tmax - min(smin, 0.0)) + 1)
    while n_cut <= _N_CAP:
        for j_terms in (8, 14, _J_CAP):
            value, bound, floor = _em_once(s, a, n_cut, j_terms)
            if np.all(bound + floor <= target_epsilon):
                return value, bound + floor
            if j_terms == _J_CAP and np.all(bound <= 0.1 * target_epsilon):
                # truncation already converged; the floor is irreducible
                raise PrecisionError(
                    f"roundoff floor {float(np.max(floor)):.3g} exceeds "
                    f"epsilon {target_epsilon:.3g}"
                )
        n_cut *= 2
    raise PrecisionError(
        f"epsilon {target_epsilon:.3g} unreachable with N <= {_N_CAP}"
    )


def log_gamma(z: complex) -> complex:
    """Principal branch of log Gamma on Re z > 0."""
    z = complex(z)
    if z.real <= 0.0:
        raise DomainError(f"Re z = {z.real} <= 0 not supported")
    return complex(sc.loggamma(z))


def digamma(z: complex) -> complex:
    """psi(z) away from the nonpositive-integer poles."""
    z = complex(z)
    if z.real <= 0 and abs(z.imag) < 1e-12 and abs(z.real - round(z.real)) < 1e-12:
        raise DomainError(f"psi pole at z = {z}")
    val = sc.digamma(z)
    return complex(val)


def digamma_half(s: float, b: int) -> float:
    """(1/2) * Gamma'/Gamma((s+b)/2) for real s > 0 and parity bit b."""
    if b not in (0, 1):
        raise ValueError("b must be 0 or 1")
    arg = 0.5 * (s + b)
    if arg <= 0.0:
        raise DomainError(f"(s+b)/2 = {arg} <= 0 hits a gamma pole")
    return 0.5 * float(sc.digamma(arg))
