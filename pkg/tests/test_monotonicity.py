"""Threshold constants, sign-change scans, fingerprints, synthetic sets."""

import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lmono import (
    DominanceError,
    RealPrimitiveCharacter,
    SyntheticZeroSet,
    UNCERTAIN,
    compare_fingerprints,
    compute_constants,
    construct_offline_pair,
    fingerprint,
    l_of_s,
    mark_complete,
    scan_sign_changes,
    scan_zeros,
    siegel_stability,
)


def test_constants_chi4(zeros4):
    c = compute_constants(zeros4)
    g0 = zeros4.ordinates[0]
    assert c.gamma0_tilde == pytest.approx(g0, abs=1e-9)
    # [PAPER] c_chi = gamma0^2 + 1/4 when gamma0 > sqrt(3)/2 and no real zero
    assert c.c_chi == pytest.approx(g0 * g0 + 0.25, rel=1e-12)
    assert c.C_chi == max(c.c_chi, c.b_chi)
    assert c.b_chi > 0.5
    assert c.D_chi > g0


def test_c_chi_is_predicate_crossover(zeros4):
    # [DERIVED] brute-force the predicate s > l(s): definition of c_chi
    c = compute_constants(zeros4)
    lo, hi = c.c_chi - 0.5, c.c_chi + 0.5
    s_grid = np.arange(lo, hi, 1e-3)
    holds = np.array([s > l_of_s(zeros4, s) for s in s_grid])
    flip = np.nonzero(holds[:-1] != holds[1:])[0]
    assert flip.size >= 1
    crossover = float(s_grid[flip[-1]])
    assert abs(crossover - c.c_chi) <= 1e-2


def test_l_of_s_lipschitz(zeros4):
    # [PAPER] |l(s) - l(s')| <= |s - s'| : distance to a fixed set is 1-Lipschitz
    rng = random.Random(7)
    for _ in range(1000):
        a = rng.uniform(0.6, 300.0)
        b = rng.uniform(0.6, 300.0)
        assert abs(l_of_s(zeros4, a) - l_of_s(zeros4, b)) <= abs(a - b) + 1e-12


@given(s=st.floats(min_value=0.6, max_value=300.0))
@settings(max_examples=100, deadline=None)
def test_l_of_s_bounds(zeros4_global, s):
    # l(s) is at most the distance to the first complex zero
    val = l_of_s(zeros4_global, s)
    g0 = zeros4_global.ordinates[0]
    assert 0 < val <= math.hypot(s - 0.5, g0) + 1e-12


@pytest.fixture(scope="session")
def zeros4_global(zeros4):
    return zeros4


def test_scan_finds_certified_changes(zeros4):
    res = scan_sign_changes(zeros4, (40.0, 40.2), 2000)
    assert res.k_star > 0
    ks = [f.k for f in res.findings]
    assert len(ks) == len(set(ks))  # distinct orders
    for f in res.findings:
        assert 40.0 < f.s_star < 40.2
        cert = f.certificate
        assert abs(cert["g_minus"]) > cert["f_bound_minus"]
        assert abs(cert["g_plus"]) > cert["f_bound_plus"]
        assert cert["g_minus"] * cert["g_plus"] < 0


def test_scan_matches_slow_path(zeros4):
    # [DERIVED] the vectorized refinement agrees with the full evaluator
    from lmono import g_normalized

    res = scan_sign_changes(zeros4, (40.0, 40.05), 600)
    assert res.findings
    for f in res.findings[:5]:
        h = 1e-6
        gm = g_normalized(zeros4, f.s_star - h, f.k).g
        gp = g_normalized(zeros4, f.s_star + h, f.k).g
        assert gm * gp < 0, f.k


def test_fingerprint_definite_fraction(zeros4):
    fp = fingerprint(zeros4, 200.0, 2, 2000)
    assert fp.definite_fraction() >= 0.9
    assert set(fp.trits) <= {-1, 0, 1, UNCERTAIN}
    recs = list(fp.records())
    assert recs[0].startswith("k=2 ")


def test_fingerprint_t_doubling_stability(chi4, zeros4):
    # [PAPER] definite trits never flip when the zero list is extended
    z200 = mark_complete(chi4, scan_zeros(chi4, 200.0))
    for s in (200.0, 210.0):
        f1 = fingerprint(zeros4, s, 2, 3000)
        f2 = fingerprint(z200, s, 2, 3000)
        t1, t2 = np.array(f1.trits), np.array(f2.trits)
        both = (t1 != UNCERTAIN) & (t2 != UNCERTAIN)
        assert int(np.sum(both & (t1 != t2))) == 0


def test_compare_fingerprints(zeros4):
    rep = compare_fingerprints(zeros4, 200.0, 210.0, 2000)
    assert rep["first_separating_k"] is not None
    assert rep["definite_agreeing"] > 0


def test_siegel_stability_simple():
    synth = SyntheticZeroSet(zeros=(complex(0.5, 10.0),), real_zero=0.9)
    rep = siegel_stability(synth, [2.0, 3.0], k_span=200)
    assert rep["stable"]
    assert rep["M"] <= rep["analytic_bound"]


def test_siegel_dominance_error():
    synth = SyntheticZeroSet(zeros=(complex(0.95, 1.0),), real_zero=0.9)
    with pytest.raises(DominanceError):
        siegel_stability(synth, [2.0], k_span=100)


def test_offline_pair_construction():
    rep = construct_offline_pair(
        complex(0.5, 6.0), complex(0.75, 9.0), delta=1e-3, k_window=200
    )
    cert = rep["certificate"]
    assert rep["s_prime"] != rep["s_dblprime"]
    assert cert["diophantine_ok"]
    assert cert["signs_agree"]
    assert cert["separating_k"] is None
