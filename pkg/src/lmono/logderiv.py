"""Dual representations of F^(k)(s) = (d/ds)^k log L(s, chi).

Prime side: the von Mangoldt Dirichlet series (direct when its integral
majorant allows, otherwise Cauchy-integral differentiation of log L on a
zero-free circle).  Zero side: the sum over trivial and nontrivial zeros,
with a smooth-density tail model (gamma-factor phase + calibrated offset +
tapered prime oscillation) for the zeros above the covered height.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.special as sc
from numpy.polynomial.legendre import leggauss

from .characters import RealPrimitiveCharacter, prime_powers
from .errors import (
    ConvergenceError,
    DomainError,
    PrecisionError,
    TailError,
    TieError,
)
from .lfunction import evaluate_L_array
from .special import digamma_half
from .zeros import SyntheticZeroSet, ZeroList, theta_phase, zero_density

_GL_U, _GL_W = leggauss(96)
_GL_U = 0.5 * (_GL_U + 1.0)  # nodes on (0, 1)
_GL_W = 0.5 * _GL_W
_LAG_X, _LAG_W = np.polynomial.laguerre.laggauss(48)

_SERIES_N_CAP = 10**8
_DIRECT_N_MAX = 10**6  # above this, "auto" switches to the Cauchy route
_SKIP_EPS = 1e-30
_TAIL_KAPPA = 3.0  # residual-fluctuation safety factor, validated empirically


@dataclass(frozen=True)
class DerivativeValue:
    """One F^(k)(s) evaluation.  For k > 170 on the zero-sum route the raw
    value overflows (k-1)!; then `value` is +-inf carrying the sign, the
    finite data lives in (sign, log_magnitude), and `error_bound` is the
    bound on the bracketed zero-sum (relative scale exp(log_magnitude))."""

    k: int
    s: float
    value: float
    error_bound: float
    method: str  # "series" | "zerosum"
    sign: int = 0
    log_magnitude: float = math.nan


@dataclass(frozen=True)
class NormalizedValue:
    """Bracketed factor of the nearest-zero factorization:
    F^(k)(s) = (-1)^{k-1} (k-1)! r_s^{-k} * g,  g = cos_term + f."""

    k: int
    s: float
    g: float
    cos_term: float
    f_bound: float
    r_s: float
    theta_s: float


# --- tail model for zeros above the covered height ---------------------------


class _TailModel:
    """Counting model N(t) ~ theta(t)/pi + c + S~(t) above the covered height.

    S~ is a tapered prime-frequency model of the argument fluctuation; c and
    the residual scatter are calibrated on the stored ordinates themselves.
    """

    def __init__(self, zlist: ZeroList, prime_cutoff: int = 4000):
        self.chi = RealPrimitiveCharacter(zlist.d)
        self.T = zlist.covered_height
        self.n0 = len(zlist)
        self._zlist = zlist
        n, lam = prime_powers(prime_cutoff)
        chi_n = self.chi.values(n).astype(np.float64)
        keep = chi_n != 0
        n, lam, chi_n = n[keep], lam[keep], chi_n[keep]
        logn = np.log(n.astype(np.float64))
        taper = np.cos(0.5 * np.pi * logn / math.log(prime_cutoff)) ** 2
        self._freq = logn
        # S~'(t) = -(1/pi) sum amp_j cos(freq_j t)
        self._amp = chi_n * lam * taper / np.sqrt(n.astype(np.float64))
        g = zlist.array
        idx = np.arange(1, len(g) + 1, dtype=np.float64)
        resid = idx - 0.5 - theta_phase(self.chi, g) / math.pi - self._s_tilde(g)
        use = g >= min(max(10.0, 0.2 * self.T), g[max(0, len(g) // 3)])
        self.c = float(np.mean(resid[use]))
        self.resid_rms = float(np.std(resid[use])) + 1e-4
        # predicted ordinates for indices n0+1 .. n_hi (model height ~4T)
        H = max(4.0 * self.T, 600.0)
        n_hi = int(math.floor(self._smooth_count(np.array([H]))[0]))
        ns = np.arange(self.n0 + 1, n_hi + 1, dtype=np.float64)
        self.gamma_hat = self._invert(ns - 0.5)
        self.t_star = float(self._invert(np.array([float(n_hi)]))[0])
        # integration nodes for the smooth remainder beyond t_star
        self._t_nodes = self.t_star / _GL_U
        self._w_nodes = (
            _GL_W * zero_density(self.chi, self._t_nodes) * self.t_star / _GL_U**2
        )

    def _s_tilde(self, t: np.ndarray) -> np.ndarray:
        ph = np.outer(np.atleast_1d(t), self._freq)
        return -(np.sin(ph) @ (self._amp / self._freq)) / math.pi

    def _s_tilde_prime(self, t: np.ndarray) -> np.ndarray:
        ph = np.outer(np.atleast_1d(t), self._freq)
        return -(np.cos(ph) @ self._amp) / math.pi

    def _smooth_count(self, t: np.ndarray) -> np.ndarray:
        return theta_phase(self.chi, t) / math.pi + self.c

    def count(self, t: np.ndarray) -> np.ndarray:
        return self._smooth_count(t) + self._s_tilde(t)

    def _invert(self, levels: np.ndarray) -> np.ndarray:
        """Solve count(t) = level for each level (vectorized Newton)."""
        t = np.full_like(levels, self.T)
        for _ in range(60):  # smooth part first: globally convergent
            step = (self._smooth_count(t) - levels) / zero_density(self.chi, t)
            t = np.maximum(t - step, 0.5 * self.T)
            if np.max(np.abs(step)) < 1e-12:
                break
        for _ in range(8):  # then the full model with clamped derivative
            dens = zero_density(self.chi, t)
            deriv = np.maximum(dens + self._s_tilde_prime(t), 0.25 * dens)
            step = np.clip((self.count(t) - levels) / deriv, -0.4 / dens, 0.4 / dens)
            t = t - step
        return t

    def _osc_integral(
        self, m: float, k: int, omega: np.ndarray, log_scale: float = 0.0
    ) -> np.ndarray:
        """integral_{t*}^inf scale * 2 Re (m-it)^{-k} cos(omega t) dt, per
        frequency, with scale = exp(log_scale).

        Contour-rotated into two Laplace integrals (t = t* +- iy), evaluated
        by Gauss-Laguerre; the rotated bases keep |base| >= t*, so no
        singularities are crossed.
        """
        T0 = self.t_star
        y = np.outer(1.0 / omega, _LAG_X)  # (freq, node)
        base_p = m + y - 1j * T0  # J+ path: t = T0 + iy
        base_m = m - y - 1j * T0  # J- path: t = T0 - iy
        with np.errstate(divide="ignore", invalid="ignore", under="ignore"):
            vals_p = np.exp(log_scale - k * np.log(base_p))
            vals_m = np.exp(log_scale - k * np.log(base_m))
        jp = 1j * np.exp(1j * omega * T0) * (vals_p @ _LAG_W) / omega
        jm = -1j * np.exp(-1j * omega * T0) * (vals_m @ _LAG_W) / omega
        return np.real(jp + jm)

    def _backtest_error(self, g) -> tuple[float, float] | None:
        """Predict the known upper-half window (T/2, T] from a model trained
        only on the zeros below T/2.  Returns (signed prediction error,
        absolute mass of g on the window); a proxy for the unknown-tail error
        when |g| concentrates near T."""
        half_T = 0.5 * self.T
        held_out = self._zlist.array[self._zlist.array > half_T]
        if held_out.size < 5:
            return None
        kept = tuple(x for x in self._zlist.ordinates if x <= half_T)
        if len(kept) < 5:
            return None
        half = _tail_model(
            ZeroList(
                d=self._zlist.d,
                ordinates=kept,
                per_zero_error=self._zlist.per_zero_error,
                covered_height=half_T,
                source=self._zlist.source,
            )
        )
        pred = half.gamma_hat[half.gamma_hat <= self.T]
        if pred.size != held_out.size:
            return None
        gh = g(held_out)
        return float(np.sum(gh) - np.sum(g(pred))), float(np.sum(np.abs(gh)))

    def tail_sum(
        self,
        g,
        osc: tuple[float, int] | None = None,
        log_scale: float = 0.0,
    ) -> tuple[float, float]:
        """Estimate sum over zeros above T of g(gamma), with residual bound.

        g: vectorized callable of the ordinate.  osc=(m, k) enables the exact
        oscillatory prime correction beyond t_star for
        g = exp(log_scale) * 2 Re (m-it)^{-k}.
        """
        g_hat = g(self.gamma_hat) if self.gamma_hat.size else np.zeros(0)
        est = float(np.sum(g_hat))
        g_nodes = g(self._t_nodes)
        smooth = float(g_nodes @ self._w_nodes)
        est += smooth
        if osc is not None:
            m, k = osc
            corr = self._osc_integral(m, k, self._freq, log_scale)
            est += float(corr @ (-self._amp / math.pi))
        sup_g = max(
            float(np.max(np.abs(g_hat))) if g_hat.size else 0.0,
            float(np.max(np.abs(g_nodes))),
        )
        # sensitivity to zero dislocation: each predicted ordinate may be off
        # by ~resid_rms; the individual residuals oscillate, so they combine
        # in root-sum-square fashion (with a safety factor) rather than
        # aligning coherently
        h = self.resid_rms
        pos = 0.0
        if self.gamma_hat.size:
            d_hi = np.abs(g(self.gamma_hat + h) - g_hat)
            d_lo = np.abs(g(self.gamma_hat - h) - g_hat)
            pos += float(np.sqrt(np.sum(np.maximum(d_hi, d_lo) ** 2)))
        pos += abs(float((g(self._t_nodes + h) - g_nodes) @ self._w_nodes))
        backtest = self._backtest_error(g)
        if backtest is None:
            bound = _TAIL_KAPPA * self.resid_rms * sup_g + 2.5 * pos + 1e-18
        else:
            bt_err, _ = backtest
            bound = (
                2.0 * abs(bt_err)
                + 0.1 * self.resid_rms * sup_g
                + 2.5 * pos
                + 1e-18
            )
        return est, bound


@lru_cache(maxsize=32)
def _tail_model(zlist: ZeroList, prime_cutoff: int = 4000) -> _TailModel:
    return _TailModel(zlist, prime_cutoff)


def nontrivial_pair_tail(
    chi: RealPrimitiveCharacter,
    zlist: ZeroList,
    g,
    osc: tuple[float, int] | None = None,
    log_scale: float = 0.0,
) -> tuple[float, float]:
    """Sum of g(gamma) over ordinates above the covered height (est, bound)."""
    if chi.d != zlist.d:
        raise ValueError("character/zero-list discriminant mismatch")
    return _tail_model(zlist).tail_sum(g, osc, log_scale)


# --- prime side --------------------------------------------------------------


def _series_tail_bound(N: float, s: float, k: int) -> float:
    """Majorant of sum_{n>N} Lambda(n)(log n)^{k-1} n^{-s} via Lambda <= log."""
    z = (s - 1.0) * math.log(N)
    # integral_N^inf (log x)^k x^{-s} dx = Gamma(k+1, z)/(s-1)^{k+1}
    integral = sc.gammaincc(k + 1, z) * sc.gamma(k + 1) / (s - 1.0) ** (k + 1)
    return float(integral + math.log(N) ** k * N**-s)


def _series_cutoff(s: float, k: int, eps: float) -> int | None:
    n = 1000
    while n <= _SERIES_N_CAP:
        if _series_tail_bound(n, s, k) <= eps:
            return n
        n *= 4
    return None


def _direct_series(chi: RealPrimitiveCharacter, s: float, k: int, eps: float, N: int):
    n, lam = prime_powers(N)
    chi_n = chi.values(n).astype(np.float64)
    nf = n.astype(np.float64)
    logn = np.log(nf)
    terms = chi_n * lam * logn ** (k - 1) * nf**-s
    value = (-1.0) ** k * float(np.sum(terms))
    bound = _series_tail_bound(N, s, k) + 3e-16 * float(np.sum(np.abs(terms)))
    return value, bound


def _cauchy_series(chi: RealPrimitiveCharacter, s: float, k: int):
    """F^(k)(s) = k! * k-th Taylor coefficient of log L at s, by the trapezoid
    rule on a zero-free circle.  Independent of any zero data: the radius is
    validated a posteriori by requiring zero winding of L around the circle.
    """
    radius = 0.8 * min(s + chi.b, math.hypot(s - 0.5, 0.5))
    M = 512
    theta = 2 * np.pi * np.arange(M) / M
    for _ in range(8):
        pts = s + radius * np.exp(1j * theta)
        for l_eps in (1e-12, 1e-11, 1e-10):
            try:
                lvals, lerr = evaluate_L_array(chi, pts, target_epsilon=l_eps)
                break
            except PrecisionError:
                continue
        else:
            raise ConvergenceError("L evaluation on the circle lost precision")
        phases = np.unwrap(np.angle(np.concatenate([lvals, lvals[:1]])))
        if abs(phases[-1] - phases[0]) < 1.0:
            break
        radius *= 0.6  # a zero sits inside: shrink until winding vanishes
    else:
        raise ConvergenceError("no zero-free circle found for log L")
    log_l = np.log(np.abs(lvals)) + 1j * phases[:-1]
    coeffs = np.fft.fft(log_l) / M
    fact = math.factorial(k)
    value = fact * float(np.real(coeffs[k])) / radius**k
    alias = float(np.max(np.abs(coeffs[M - 16 : M])))
    log_err = float(np.max(lerr / np.abs(lvals)))
    bound = fact / radius**k * (
        4 * alias + log_err + M * 3e-16 * float(np.max(np.abs(log_l)))
    )
    return value, bound


def f_deriv_series(
    chi: RealPrimitiveCharacter,
    s: float,
    k: int,
    eps: float = 1e-9,
    strategy: str = "auto",
) -> DerivativeValue:
    """(-1)^k F^(k)(s) = sum chi(n) Lambda(n) (log n)^{k-1} n^{-s}, prime side.

    strategy="direct" enforces literal summation (ConvergenceError when the
    majorant needs N > 1e8); "auto" switches to the Cauchy-circle route when
    direct truncation would be wasteful or impossible.
    """
    if s < 1.2:
        raise DomainError("series evaluation requires s >= 1.2")
    if not 0 <= k <= 64:
        raise DomainError("derivative order limited to 0 <= k <= 64")
    if k == 0:
        lp = evaluate_L_array(chi, np.array([complex(s)]), 1e-13)
        val = float(np.real(lp[0][0]))
        return DerivativeValue(0, s, math.log(val), float(lp[1][0]) / val, "series")
    N = _series_cutoff(s, k, eps / 2)
    if strategy == "direct" or (strategy == "auto" and N is not None and N <= _DIRECT_N_MAX):
        if N is None:
            raise ConvergenceError(
                f"series tail <= {eps:.1e} at s={s}, k={k} needs N > {_SERIES_N_CAP:.0e}"
            )
        value, bound = _direct_series(chi, s, k, eps, N)
    elif strategy in ("auto", "cauchy"):
        value, bound = _cauchy_series(chi, s, k)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return DerivativeValue(k, s, value, bound, "series")


# --- zero side ---------------------------------------------------------------


def f_prime_formula(
    chi: RealPrimitiveCharacter, s: float, zlist: ZeroList
) -> DerivativeValue:
    """F'(s) from the completed-function expansion: the archimedean block in
    closed digamma form (trivial zeros and the s-pole absorbed) plus paired
    nontrivial zeros, 2(s-1/2)/((s-1/2)^2 + gamma^2), with estimated tail."""
    if s <= 1.0:
        raise DomainError("formula evaluation requires s > 1")
    m = s - 0.5
    const = -0.5 * math.log(chi.q / math.pi) - digamma_half(s, chi.b)
    gam = zlist.array
    pairs = float(np.sum(2.0 * m / (m * m + gam * gam)))
    tail, tail_bound = nontrivial_pair_tail(
        chi, zlist, lambda t: 2.0 * m / (m * m + t * t), osc=(m, 1)
    )
    bound = tail_bound + 1e-14 * (abs(const) + pairs)
    if bound > 1e-4:
        raise TailError(f"combined tail bound {bound:.3g} > 1e-4")
    return DerivativeValue(1, s, const + pairs + tail, bound, "zerosum")


def _zeta_log(k: np.ndarray, a: float) -> np.ndarray:
    """log zeta(k, a) for integer orders k >= 2, stable for large k."""
    k = np.asarray(k, dtype=np.float64)
    out = np.empty_like(k)
    small = k * math.log(a) < 600.0
    if np.any(small):
        out[small] = np.log(sc.zeta(k[small], a))
    if np.any(~small):
        kk = k[~small][:, None]
        mm = np.arange(0, 64, dtype=np.float64)[None, :]
        terms = np.exp(-kk * np.log1p(mm / a))
        out[~small] = -k[~small] * math.log(a) + np.log(np.sum(terms, axis=1))
    return out


def trivial_block(chi: RealPrimitiveCharacter, s: float, k: int) -> float:
    """Sum over trivial zeros: 2^{-k} zeta(k, (s+b)/2), b the parity bit."""
    return float(np.exp(_zeta_log(np.array([float(k)]), 0.5 * (s + chi.b))[0] - k * math.log(2.0)))


def f_deriv_zerosum(
    source: RealPrimitiveCharacter | SyntheticZeroSet,
    s: float,
    k: int,
    zlist: ZeroList | None = None,
    raw: bool = False,
) -> DerivativeValue:
    """F^(k)(s) = (-1)^{k-1}(k-1)! * sum over all zeros of (s-rho)^{-k}.

    For a character source the sum is the trivial closed form plus stored
    nontrivial pairs plus the density-model tail; synthetic sets are summed
    exactly.  For k > 170 the raw value would overflow (k-1)!: the result
    carries (sign, log_magnitude) and value = sign * inf (unless raw=True,
    which raises OverflowError).
    """
    if k < 2:
        raise DomainError("zero-sum route requires k >= 2")
    if isinstance(source, SyntheticZeroSet):
        bracket = float(
            np.real(np.sum([(s - rho) ** -k for rho in source.all_zeros()]))
        )
        bound = 1e-15 * float(
            np.sum([abs((s - rho) ** -k) for rho in source.all_zeros()])
        )
    else:
        chi = source
        if s <= 1.0:
            raise DomainError("zero-sum evaluation requires s > 1")
        if zlist is None:
            raise ValueError("a verified ZeroList is required for a character")
        m = s - 0.5
        gam = zlist.array
        with np.errstate(under="ignore"):
            stored = float(np.sum(2.0 * np.real((m - 1j * gam) ** -k)))
        triv = trivial_block(chi, s, k)
        dT = math.hypot(m, zlist.covered_height)
        if dT**-k > 1e-3 * _SKIP_EPS * (abs(stored) + triv):
            tail, tail_bound = nontrivial_pair_tail(
                chi,
                zlist,
                lambda t: 2.0 * np.real((m - 1j * t) ** -k),
                osc=(m, k),
            )
        else:
            tail, tail_bound = 0.0, dT**-k
        bracket = triv + stored + tail
        bound = tail_bound + 1e-15 * (triv + abs(stored))
    sign = int(math.copysign(1, bracket)) * (1 if k % 2 == 1 else -1)
    log_mag = sc.gammaln(k) + math.log(abs(bracket)) if bracket != 0 else -math.inf
    if k > 170:
        if raw:
            raise OverflowError(f"(k-1)! overflows binary64 for k={k}")
        return DerivativeValue(
            k, s, sign * math.inf, bound / max(abs(bracket), 1e-300),
            "zerosum", sign=sign, log_magnitude=float(log_mag),
        )
    fact = math.factorial(k - 1)
    value = (-1.0) ** (k - 1) * fact * bracket
    return DerivativeValue(
        k, s, value, fact * bound, "zerosum", sign=sign, log_magnitude=float(log_mag)
    )


# --- nearest-zero geometry and the normalized form ---------------------------


def _zero_inventory(source, s: float):
    """All zeros as (distance, zero, pair_weight), sorted by distance to real s.

    Nontrivial pairs enter once with weight 2 (conjugates equidistant from a
    real point); trivial or real zeros enter with weight 1.  For a character
    source only a bounded window of trivial zeros is listed; the rest are
    handled in closed form by the callers.
    """
    entries = []
    if isinstance(source, SyntheticZeroSet):
        if source.real_zero is not None:
            entries.append((abs(s - source.real_zero), complex(source.real_zero), 1))
        for rho in source.zeros:
            entries.append((abs(complex(s) - rho), rho, 2))
    else:
        zlist: ZeroList = source
        chi = RealPrimitiveCharacter(zlist.d)
        for g in zlist.ordinates:
            entries.append((math.hypot(s - 0.5, g), complex(0.5, g), 2))
        for mth in range(8):
            t = -chi.b - 2.0 * mth
            entries.append((abs(s - t), complex(t), 1))
    entries.sort(key=lambda e: e[0])
    return entries


def eta_at(source: ZeroList | SyntheticZeroSet, s: float) -> dict:
    """Nearest zero rho0, second-nearest non-conjugate rho~, and their ratio
    eta_s = |s-rho0| / |s-rho~| < 1."""
    inv = _zero_inventory(source, s)
    if len(inv) < 2:
        raise ValueError("need at least two distinct zeros")
    d0, rho0, _ = inv[0]
    d1, rho1, _ = inv[1]
    if d1 - d0 < 1e-12:
        raise TieError(
            f"zeros {rho0} and {rho1} equidistant from s={s} within 1e-12"
        )
    return {"rho0": rho0, "rho_tilde": rho1, "eta_s": d0 / d1}


def g_normalized_range(
    source: ZeroList | SyntheticZeroSet, s: float, ks: np.ndarray
) -> tuple[np.ndarray, np.ndarray, float, float, np.ndarray]:
    """Vectorized normalized values over derivative orders.

    Returns (g, f_bound, r_s, theta_s, cos_term); g = cos_term + f with f the
    r_s^k-scaled contribution of every zero other than the nearest pair.
    """
    ks = np.asarray(ks, dtype=np.int64)
    if np.any(ks < 2):
        raise DomainError("normalized form requires k >= 2")
    inv = _zero_inventory(source, s)
    d0, rho0, w0 = inv[0]
    if len(inv) > 1 and inv[1][0] - d0 < 1e-12:
        raise TieError(
            f"zeros {rho0} and {inv[1][1]} equidistant from s={s} within 1e-12"
        )
    r = d0
    theta = math.atan2(rho0.imag, s - rho0.real) if w0 == 2 else (
        0.0 if s > rho0.real else math.pi
    )
    kf = ks.astype(np.float64)
    cos_term = w0 * np.cos(kf * theta)
    f = np.zeros(len(ks))
    fb = np.full(len(ks), 0.0)
    abssum = np.zeros(len(ks))
    # explicitly listed zeros other than the nearest
    for dist, rho, w in inv[1:]:
        log_ratio = math.log(r / dist)
        ang = math.atan2(rho.imag, s - rho.real) if w == 2 else (
            0.0 if s > rho.real else math.pi
        )
        with np.errstate(under="ignore"):
            mag = np.exp(kf * log_ratio)
        live = mag >= _SKIP_EPS
        f[live] += w * mag[live] * np.cos(kf[live] * ang)
        abssum[live] += w * mag[live]
        fb[~live] += _SKIP_EPS
    if not isinstance(source, SyntheticZeroSet):
        zlist: ZeroList = source
        chi = RealPrimitiveCharacter(zlist.d)
        # remaining trivial zeros in closed form: (r/2)^k zeta(k, a_rest)
        a_rest = 0.5 * (s + chi.b) + 8.0
        with np.errstate(under="ignore"):
            triv_rest = np.exp(kf * math.log(r / 2.0) + _zeta_log(kf, a_rest))
        if w0 == 1:  # nearest zero itself trivial: drop it from the window sum
            pass  # inventory already excludes it via inv[1:]
        f += triv_rest
        abssum += triv_rest
        # tail of nontrivial zeros above the covered height, r^k-normalized
        m = s - 0.5
        model = _tail_model(zlist)
        t_nodes = model._t_nodes
        base_T = zlist.covered_height
        with np.errstate(under="ignore"):
            # majorant of the whole tail above T: every term has ratio at
            # most r/|s - 1/2 - iT|, and the predicted ordinates count them
            log_ratio_T = math.log(r / math.hypot(m, base_T))
            maj = 2.0 * np.exp(
                kf[:, None] * np.log(r / np.hypot(m, t_nodes))[None, :]
            ) @ model._w_nodes
            maj += 2.0 * max(1, model.gamma_hat.size) * np.exp(kf * log_ratio_T)
        need = maj > 1e-17 * np.maximum(1.0, abssum + np.abs(cos_term))
        for i in np.nonzero(need)[0]:
            k = int(ks[i])

            def gk(t, k=k):
                with np.errstate(under="ignore"):
                    return 2.0 * np.exp(k * np.log(r / np.hypot(m, t))) * np.cos(
                        k * np.arctan2(t, m)
                    )

            est, bnd = model.tail_sum(
                gk, osc=(m, k), log_scale=k * math.log(r)
            )
            f[i] += est
            fb[i] += bnd
        fb[~need] += maj[~need]
    fb += 1e-15 * (np.abs(cos_term) + abssum)
    return cos_term + f, fb, r, theta, cos_term


def g_normalized(
    source: ZeroList | SyntheticZeroSet, s: float, k: int
) -> NormalizedValue:
    """Eq-2.13-style normalized value at a single order k."""
    g, fb, r, theta, cos_term = g_normalized_range(source, s, np.array([k]))
    return NormalizedValue(
        k=int(k), s=float(s), g=float(g[0]), cos_term=float(cos_term[0]),
        f_bound=float(fb[0]), r_s=float(r), theta_s=float(theta),
    )
