"""Headline monotonicity objects: l(s), the threshold constants, the density
scanner for zeros of F^(k), sign fingerprints and their comparison, and the
synthetic constructions (dominant-real-zero stability, off-critical pair).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import mpmath as mp
import numpy as np

from .characters import RealPrimitiveCharacter
from .errors import (
    DominanceError,
    GeometryError,
    NoFindingsError,
    SearchError,
    TieError,
)
from .logderiv import g_normalized, g_normalized_range
from .zeros import SyntheticZeroSet, ZeroList

#: Trit sentinel for "sign not certified at this tolerance".
UNCERTAIN = 2

_SQRT3_HALF = math.sqrt(3.0) / 2.0


@dataclass(frozen=True)
class SignFingerprint:
    """Finite window of sgn F^(k)(s) over k in [k_min, k_max].

    trits[i] is the sign for k = k_min + i: -1/+1 when certified
    (|g| > f_bound + tolerance), 0 when a bracketed zero is pinned, and
    UNCERTAIN (= 2) otherwise.  g values and bounds are retained so every
    entry is a checkable certificate.
    """

    s: float
    k_min: int
    k_max: int
    trits: tuple[int, ...]
    tolerance: float
    g_values: tuple[float, ...] = field(default=(), repr=False)
    f_bounds: tuple[float, ...] = field(default=(), repr=False)

    def definite_fraction(self) -> float:
        n = len(self.trits)
        return sum(t != UNCERTAIN for t in self.trits) / n if n else 0.0

    def records(self):
        """Line-oriented serialization: `k=.. trit=.. g=.. fbound=..`."""
        for i, t in enumerate(self.trits):
            trit = "?" if t == UNCERTAIN else str(t)
            yield (
                f"k={self.k_min + i} trit={trit} "
                f"g={self.g_values[i]!r} fbound={self.f_bounds[i]!r}"
            )


@dataclass(frozen=True)
class PaperConstants:
    gamma0_tilde: float
    c_chi: float
    b_chi: float
    C_chi: float
    D_chi: float

    def __post_init__(self):
        if not self.c_chi <= self.gamma0_tilde**2 + 0.25 + 1e-12:
            raise ValueError("c_chi exceeds gamma0^2 + 1/4")
        if self.C_chi != max(self.c_chi, self.b_chi):
            raise ValueError("C_chi must be max(c_chi, b_chi)")


# --- distance to the nearest zero -------------------------------------------


def _l_array(source: ZeroList | SyntheticZeroSet, s: np.ndarray) -> np.ndarray:
    """Vectorized l(s) = min |s - rho| over all zeros (trivial included)."""
    s = np.asarray(s, dtype=np.float64)
    best = np.full(s.shape, np.inf)
    if isinstance(source, SyntheticZeroSet):
        for rho in source.zeros:
            best = np.minimum(best, np.hypot(s - rho.real, rho.imag))
        if source.real_zero is not None:
            best = np.minimum(best, np.abs(s - source.real_zero))
    else:
        chi = RealPrimitiveCharacter(source.d)
        gam = source.array
        if gam.size:
            best = np.hypot(s - 0.5, gam[0])
        # nearest trivial zero -b - 2m to real s > 1/2 is always -b
        best = np.minimum(best, np.abs(s + chi.b))
    return best


def l_of_s(source: ZeroList | SyntheticZeroSet, s: float) -> float:
    """Distance from s to the nearest zero of the source."""
    if s <= 0.5:
        raise ValueError("l(s) is defined here for s > 1/2")
    value = float(_l_array(source, np.array([s]))[0])
    if isinstance(source, ZeroList) and source.ordinates:
        # zeros above the covered height are at distance >= the height itself
        assert value <= math.hypot(s - 0.5, source.covered_height)
    return value


def compute_constants(source: ZeroList | SyntheticZeroSet) -> PaperConstants:
    """Threshold constants from the lowest ordinate, brute-validated.

    c_chi: past it the nearest zero is nontrivial and |s| > l(s); closed form
    max(1, gamma0^2 + 1/4), equal to 1 when gamma0 <= sqrt(3)/2.  b_chi keeps
    the nearest-zero angle below pi/100; C_chi = max of the two; D_chi is the
    height where the perpendicular at rho0 to the (C_chi,0)-rho0 line meets
    sigma = 1.
    """
    if isinstance(source, SyntheticZeroSet):
        if not source.zeros:
            raise ValueError("synthetic set has no complex zeros")
        gamma0 = min(z.imag for z in source.zeros)
        has_real = source.real_zero is not None
    else:
        if not source.ordinates:
            raise ValueError("zero list is empty")
        gamma0 = source.ordinates[0]
        has_real = False
    c_chi = 1.0 if (gamma0 <= _SQRT3_HALF or has_real) else gamma0**2 + 0.25
    # brute-grid validation of the defining predicate |s| > l(s)
    step = 1e-3
    grid = np.arange(1.0 + step, c_chi + 10.0, step)
    holds = grid > _l_array(source, grid)
    fail = np.nonzero(~holds)[0]
    crossover = 1.0 if fail.size == 0 else float(grid[fail[-1]] + step)
    if abs(crossover - c_chi) > 1e-2:
        raise ValueError(
            f"closed-form c_chi={c_chi:.6f} disagrees with brute crossover "
            f"{crossover:.6f}"
        )
    b_chi = 0.5 + gamma0 / math.tan(math.pi / 100.0)
    C_chi = max(c_chi, b_chi)
    D_chi = gamma0 + (C_chi - 0.5) / (2.0 * gamma0)
    return PaperConstants(
        gamma0_tilde=float(gamma0), c_chi=float(c_chi), b_chi=float(b_chi),
        C_chi=float(C_chi), D_chi=float(D_chi),
    )


# --- density scanner (Theorem-1 surrogate) ----------------------------------


@dataclass(frozen=True)
class ScanFinding:
    k: int
    s_star: float
    certificate: dict


def _zero_table(source: ZeroList | SyntheticZeroSet):
    """(beta, gamma, weight) arrays for every zero group: nontrivial pairs
    weight 2, trivial/real zeros weight 1.  Truncates the trivial family to a
    window; callers must ensure the omitted part is negligible (k large)."""
    betas, gammas, weights = [], [], []
    if isinstance(source, SyntheticZeroSet):
        if source.real_zero is not None:
            betas.append(source.real_zero); gammas.append(0.0); weights.append(1)
        for z in source.zeros:
            betas.append(z.real); gammas.append(z.imag); weights.append(2)
    else:
        chi = RealPrimitiveCharacter(source.d)
        for g in source.ordinates:
            betas.append(0.5); gammas.append(g); weights.append(2)
        for mth in range(24):
            betas.append(-chi.b - 2.0 * mth); gammas.append(0.0); weights.append(1)
    return np.array(betas), np.array(gammas), np.array(weights, dtype=np.float64)


def _paired_g(table, s_vec: np.ndarray, k_vec: np.ndarray) -> np.ndarray:
    """g at paired points (s_i, k_i): cosine of the nearest pair plus the
    r^k-normalized contribution of the other tabulated zeros.  Valid when
    the untabulated trivial/tail contributions are negligible at these k."""
    betas, gammas, weights = table
    d = np.hypot(s_vec[:, None] - betas[None, :], gammas[None, :])
    j0 = np.argmin(d, axis=1)
    rows = np.arange(len(s_vec))
    r = d[rows, j0]
    ang = np.arctan2(gammas[None, :], s_vec[:, None] - betas[None, :])
    with np.errstate(divide="ignore", under="ignore"):
        mag = np.exp(k_vec[:, None] * (np.log(r)[:, None] - np.log(d)))
    terms = weights[None, :] * mag * np.cos(k_vec[:, None] * ang)
    total = np.sum(terms, axis=1) - terms[rows, j0]
    theta = ang[rows, j0]
    return weights[j0] * np.cos(k_vec * theta) + total


@dataclass(frozen=True)
class ScanResult:
    findings: tuple[ScanFinding, ...]
    k_star: int
    interval: tuple[float, float]


def _nearest_pair(source, s: float):
    nv = g_normalized(source, s, 2)
    return nv


def scan_sign_changes(
    source: ZeroList | SyntheticZeroSet,
    interval: tuple[float, float],
    k_max: int,
    tolerance: float = 1e-9,
) -> ScanResult:
    """Certified zeros of F^(k) inside [a, b] for k <= k_max.

    A k is reported when both endpoint normalized values are definite with
    opposite signs; s* is then refined by bisection and re-certified at
    s* +- h, h = 1e-9 max(1, |s*|).  k_star = ceil(2 pi / (theta_a - theta_b))
    predicts the onset of guaranteed crossings.
    """
    a, b = float(interval[0]), float(interval[1])
    if not b - a >= 1e-3:
        raise ValueError("interval must have length >= 1e-3")
    consts = compute_constants(source)
    if a <= consts.c_chi:
        raise ValueError(f"interval must lie above c_chi = {consts.c_chi:.4f}")
    ks = np.arange(2, k_max + 1)
    ga, fba, ra, tha, _ = g_normalized_range(source, a, ks)
    gb, fbb, rb, thb, _ = g_normalized_range(source, b, ks)
    if tha <= thb:
        raise TieError(
            f"nearest-zero angle not decreasing across [{a}, {b}]; "
            f"try the sub-interval [{a}, {0.5 * (a + b)}]"
        )
    k_star = math.ceil(2.0 * math.pi / (tha - thb))
    cand = (
        (np.abs(ga) > fba + tolerance)
        & (np.abs(gb) > fbb + tolerance)
        & (np.sign(ga) != np.sign(gb))
    )
    cand_ks = ks[cand]
    if cand_ks.size == 0:
        if k_max < k_star:
            raise NoFindingsError(
                f"no crossings found below the onset threshold K* = {k_star}"
            )
        return ScanResult((), k_star, (a, b))
    h = 1e-9 * max(1.0, b)
    # fast vectorized bisection for orders where the truncated table suffices
    # (untabulated trivial tail and above-height tail both below ~1e-17)
    omit_ratio = 0.0
    if isinstance(source, ZeroList):
        # first untabulated trivial zero sits at -b-48; tail starts at height T
        omit_ratio = max(
            rb / (a + 48.0), rb / math.hypot(a - 0.5, source.covered_height)
        )
    if omit_ratio >= 1.0:
        k_slow_cap = k_max  # cannot truncate safely: scalar path throughout
    elif omit_ratio > 0.0:
        k_slow_cap = max(64, math.ceil(-17 * math.log(10) / math.log(omit_ratio)))
    else:
        k_slow_cap = 0
    fast = cand_ks > k_slow_cap
    findings = []
    if np.any(fast):
        table = _zero_table(source)
        kf = cand_ks[fast].astype(np.float64)
        lo = np.full(kf.shape, a)
        hi = np.full(kf.shape, b)
        glo = ga[cand][fast].copy()
        while np.max(hi - lo) > 0.01 * h:
            mid = 0.5 * (lo + hi)
            gm = _paired_g(table, mid, kf)
            left = glo * gm <= 0
            hi = np.where(left, mid, hi)
            lo = np.where(left, lo, mid)
            glo = np.where(left, glo, gm)
        s_star_f = 0.5 * (lo + hi)
        gm_lo = _paired_g(table, s_star_f - h, kf)
        gm_hi = _paired_g(table, s_star_f + h, kf)
        fb_floor = 1e-14  # table truncation + roundoff at these orders
        for k, s_star, gl, gr in zip(cand_ks[fast], s_star_f, gm_lo, gm_hi):
            if (
                abs(gl) > fb_floor
                and abs(gr) > fb_floor
                and math.copysign(1, gl) != math.copysign(1, gr)
            ):
                findings.append(
                    ScanFinding(
                        k=int(k), s_star=float(s_star),
                        certificate={
                            "h": h,
                            "g_minus": float(gl), "f_bound_minus": fb_floor,
                            "g_plus": float(gr), "f_bound_plus": fb_floor,
                        },
                    )
                )
    for k, g_lo in zip(cand_ks[~fast], ga[cand][~fast]):
        lo, hi, glo = a, b, float(g_lo)
        while hi - lo > 0.01 * h:
            mid = 0.5 * (lo + hi)
            gm = g_normalized(source, mid, int(k)).g
            if glo * gm <= 0:
                hi = mid
            else:
                lo, glo = mid, gm
        s_star = 0.5 * (lo + hi)
        nm = g_normalized(source, s_star - h, int(k))
        np_ = g_normalized(source, s_star + h, int(k))
        certified = (
            abs(nm.g) > nm.f_bound
            and abs(np_.g) > np_.f_bound
            and math.copysign(1, nm.g) != math.copysign(1, np_.g)
        )
        if certified:
            findings.append(
                ScanFinding(
                    k=int(k),
                    s_star=s_star,
                    certificate={
                        "h": h,
                        "g_minus": nm.g, "f_bound_minus": nm.f_bound,
                        "g_plus": np_.g, "f_bound_plus": np_.f_bound,
                    },
                )
            )
    findings.sort(key=lambda f: f.k)
    if not findings and k_max < k_star:
        raise NoFindingsError(
            f"no certified crossings below the onset threshold K* = {k_star}"
        )
    return ScanResult(tuple(findings), k_star, (a, b))


# --- fingerprints ------------------------------------------------------------


def fingerprint(
    source: ZeroList | SyntheticZeroSet,
    s: float,
    k_min: int,
    k_max: int,
    tolerance: float = 1e-9,
) -> SignFingerprint:
    """Window of sgn F^(k)(s) = sgn((-1)^{k-1} g) with certified entries."""
    if k_min < 2 or k_max < k_min or k_max > 10**5:
        raise ValueError("need 2 <= k_min <= k_max <= 1e5")
    ks = np.arange(k_min, k_max + 1)
    g, fb, _, _, _ = g_normalized_range(source, s, ks)
    signs = np.where(ks % 2 == 1, np.sign(g), -np.sign(g)).astype(np.int8)
    trits = np.where(np.abs(g) > fb + tolerance, signs, UNCERTAIN)
    return SignFingerprint(
        s=float(s), k_min=int(k_min), k_max=int(k_max),
        trits=tuple(int(t) for t in trits), tolerance=float(tolerance),
        g_values=tuple(float(x) for x in g),
        f_bounds=tuple(float(x) for x in fb),
    )


def compare_fingerprints(
    source: ZeroList | SyntheticZeroSet,
    s1: float,
    s2: float,
    k_max: int,
    k_min: int = 2,
    tolerance: float = 1e-9,
    enforce_threshold: bool = True,
) -> dict:
    """First k whose certified signs at s1 and s2 are opposite, if any."""
    if not s1 <= s2:
        raise ValueError("need s1 <= s2")
    if enforce_threshold:
        consts = compute_constants(source)
        if not consts.C_chi < s1:
            raise ValueError(f"need C_chi = {consts.C_chi:.4f} < s1")
    fp1 = fingerprint(source, s1, k_min, k_max, tolerance)
    fp2 = fingerprint(source, s2, k_min, k_max, tolerance)
    t1 = np.array(fp1.trits)
    t2 = np.array(fp2.trits)
    definite = (t1 != UNCERTAIN) & (t2 != UNCERTAIN)
    opposite = definite & (t1 == -t2) & (t1 != 0)
    idx = np.nonzero(opposite)[0]
    first = int(idx[0]) + k_min if idx.size else None
    return {
        "first_separating_k": first,
        "definite_agreeing": int(np.sum(definite & (t1 == t2))),
        "uncertain": int(np.sum(~definite)),
        "k_min": k_min,
        "k_max": k_max,
    }


# --- dominant real zero (Siegel configuration) -------------------------------


def siegel_stability(
    synthetic: SyntheticZeroSet,
    s_values,
    k_start: int = 1,
    k_span: int = 500,
) -> dict:
    """Eventual sign stability when a real zero beta dominates.

    F^(k)(s) = (-1)^{k-1}(k-1)! (s-beta)^{-k} [1 + R_k(s)] with
    R_k = sum_{rho != beta} ((s-beta)/(s-rho))^k; once |R_k| < 1 the sign is
    locked to (-1)^{k-1}.  Returns the least such M and checks a k-span.
    """
    beta = synthetic.real_zero
    if beta is None:
        raise DominanceError("configuration has no real zero")
    if any(z.real > beta + 1e-15 for z in synthetic.zeros):
        raise DominanceError("real zero is not weakly dominant (beta < Re rho)")
    s_values = [float(s) for s in s_values]
    if any(s <= 1.0 for s in s_values):
        raise ValueError("s values must exceed 1")
    others = [z for z in synthetic.zeros]

    def r_k(s: float, ks: np.ndarray) -> np.ndarray:
        log_ratios = np.array([np.log((s - beta) / (s - z)) for z in others])
        return 2.0 * np.real(
            np.sum(np.exp(np.outer(ks, log_ratios)), axis=1)
        )

    # analytic dominance bound: C eta^{M-2} < 1
    eta_max, c_sum = 0.0, 0.0
    for s in s_values:
        ratios = np.array([(s - beta) / abs(s - z) for z in others])
        eta_max = max(eta_max, float(np.max(ratios)))
        c_sum = max(c_sum, 2.0 * float(np.sum(ratios**2)))
    m_bound = (
        2 + max(0, math.ceil(math.log(max(c_sum, 1e-300)) / math.log(1.0 / eta_max)))
        if eta_max < 1.0
        else None
    )
    search_hi = max(k_start + k_span, (m_bound or k_start) + k_span)
    ks = np.arange(k_start, search_hi + 1)
    worst = np.zeros(len(ks))
    for s in s_values:
        worst = np.maximum(worst, np.abs(r_k(s, ks)))
    ok = worst < 1.0
    m_idx = None
    for i in range(len(ks)):
        if np.all(ok[i : i + k_span + 1]):
            m_idx = i
            break
    if m_idx is None:
        return {"M": None, "stable": False, "analytic_bound": m_bound}
    m_emp = int(ks[m_idx])
    stable = bool(np.all(worst[m_idx : m_idx + k_span + 1] < 1.0))
    return {
        "M": m_emp,
        "stable": stable,
        "analytic_bound": m_bound,
        "eta_max": eta_max,
        "ratio_square_sum": c_sum,
        "k_span": k_span,
        "s_values": s_values,
    }


# --- off-critical pair (Theorem-2b surrogate) --------------------------------


def construct_offline_pair(
    rho0: complex,
    rho1: complex,
    delta: float = 1e-3,
    b_max: int = 10**6,
    k_window: int = 1000,
) -> dict:
    """Two real points whose sign fingerprints agree on a whole k-window.

    Feet of the perpendiculars from rho0 and rho1 (rho1 off the critical
    line) to the real axis share the nearest-zero angle theta; an integer
    combination a + b sqrt(2) lands within delta/(2 pi) of theta/(2 pi), and
    the badly-approximable angle phi = 2 pi (a + b sqrt(2)) keeps cos(k phi)
    away from zero quantitatively (|4k(a+b sqrt 2)+r| > C_{a,b}/k), so both
    fingerprints are locked to the same cosine signs for every k in
    (N, N + k_window].
    """
    rho0, rho1 = complex(rho0), complex(rho1)
    if not rho1.imag > rho0.imag > 0:
        raise GeometryError("need Im rho1 > Im rho0 > 0")
    if abs(rho1.real - 0.5) < 1e-12:
        raise GeometryError("rho1 must lie off the critical line")
    direction = rho1 - rho0
    if direction.real <= 0:
        raise GeometryError("perpendiculars never meet the real axis")
    s0 = rho0.real + rho0.imag * direction.imag / direction.real
    s1 = rho1.real + rho1.imag * direction.imag / direction.real
    synth = SyntheticZeroSet(zeros=(rho0, rho1))
    consts = compute_constants(synth)
    if not (consts.c_chi < s0 < s1):
        raise GeometryError(
            f"feet s0={s0:.4f}, s1={s1:.4f} not above c_chi={consts.c_chi:.4f}"
        )
    theta0 = math.atan2(rho0.imag, s0 - rho0.real)
    theta1 = math.atan2(rho1.imag, s1 - rho1.real)
    if abs(theta0 - theta1) > 1e-12:
        raise GeometryError("perpendicular-foot angles disagree")
    # integer window search: a + b sqrt(2) within delta/(2 pi) of theta/(2 pi)
    target = theta0 / (2.0 * math.pi)
    half_width = delta / (2.0 * math.pi)
    sqrt2 = math.sqrt(2.0)
    a_int = b_int = None
    for b in range(1, b_max + 1):
        for sb in (b, -b):
            frac = sb * sqrt2 - math.floor(sb * sqrt2)
            if abs(frac - target) < half_width:
                a_int = -math.floor(sb * sqrt2)
                b_int = sb
                break
        if b_int is not None:
            break
    if b_int is None:
        raise SearchError(f"no a + b sqrt(2) within {half_width:.2e} of {target:.6f}")
    # high-precision angle and evaluation points (the cancellation in
    # a + b sqrt(2) wipes ~12 digits in binary64)
    with mp.workdps(60):
        alpha = a_int + b_int * mp.sqrt(2)
        phi = 2 * mp.pi * alpha
        s_prime = float(mp.mpf(rho0.real) + mp.mpf(rho0.imag) / mp.tan(phi))
        s_dblprime = float(mp.mpf(rho1.real) + mp.mpf(rho1.imag) / mp.tan(phi))
        phi_f = float(phi)
    c_ab = 1.0 / (9.0 * abs(b_int) * sqrt2)
    # remainder majorant 2 eta^k at each point; N from pi C_{a,b}/(4k) > both
    eta_p = eta_of_pair(synth, s_prime)
    eta_q = eta_of_pair(synth, s_dblprime)
    eta = max(eta_p, eta_q)
    n_threshold = None
    k = 16
    while k < 10**7:
        if all(
            math.pi * c_ab / (4.0 * kk) > 2.0 * eta**kk
            for kk in (k, k + k_window)
        ):
            n_threshold = k
            break
        k = int(k * 1.2) + 1
    if n_threshold is None:
        raise SearchError("no threshold N with the tail below the cosine margin")
    # Diophantine certificate over the window, in high precision
    ks = np.arange(n_threshold + 1, n_threshold + k_window + 1)
    dio_ok = True
    margins = []
    with mp.workdps(60):
        alpha = a_int + b_int * mp.sqrt(2)
        for kk in ks:
            x = 4 * int(kk) * alpha
            dist = abs(x - mp.nint(x))
            if not dist > mp.mpf(c_ab) / int(kk):
                dio_ok = False
            margins.append(float(dist - mp.mpf(c_ab) / int(kk)))
    # sign certificate: definite trits must agree everywhere on the window
    cmp = compare_fingerprints(
        synth, s_prime, s_dblprime, int(ks[-1]), k_min=int(ks[0]),
        tolerance=1e-12, enforce_threshold=False,
    )
    certificate = {
        "diophantine_ok": dio_ok,
        "min_margin": float(min(margins)),
        "separating_k": cmp["first_separating_k"],
        "signs_agree": cmp["first_separating_k"] is None,
        "definite_agreeing": cmp["definite_agreeing"],
        "uncertain": cmp["uncertain"],
    }
    return {
        "s0": s0, "s1": s1, "theta": theta0,
        "a": int(a_int), "b_int": int(b_int), "phi": phi_f,
        "s_prime": s_prime, "s_dblprime": s_dblprime,
        "C_ab": c_ab, "N": int(n_threshold), "k_window": int(k_window),
        "eta": eta, "certificate": certificate,
    }


def eta_of_pair(synth: SyntheticZeroSet, s: float) -> float:
    """eta_s for a synthetic set at real s (nearest over second-nearest)."""
    dists = sorted(abs(complex(s) - z) for z in synth.all_zeros())
    groups = []
    for d in dists:
        if not groups or d - groups[-1] > 1e-12:
            groups.append(d)
    if len(groups) < 2:
        raise TieError("no second-nearest distinct zero")
    return groups[0] / groups[1]
