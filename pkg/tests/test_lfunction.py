"""L-function evaluation against closed forms and mpmath oracles."""

import math

import numpy as np
import pytest

from lmono import RealPrimitiveCharacter, completed_lambda, evaluate_L, z_function
from lmono.lfunction import z_function_array

CATALAN = 0.915965594177219015  # [DERIVED] mpmath.catalan


def test_closed_forms_chi4():
    chi = RealPrimitiveCharacter(-4)
    # [PAPER] L(1) = pi/4, L(2) = Catalan, L(3) = pi^3/32
    p1 = evaluate_L(chi, 1.0)
    assert abs(p1.value - math.pi / 4) <= max(p1.error_bound, 1e-10)
    p2 = evaluate_L(chi, 2.0)
    assert abs(p2.value - CATALAN) <= max(p2.error_bound, 1e-10)
    p3 = evaluate_L(chi, 3.0)
    assert abs(p3.value - math.pi**3 / 32) <= max(p3.error_bound, 1e-10)


def test_frozen_complex_oracle():
    # [DERIVED] mpmath: q^-s sum chi(a) zeta(s, a/q) at 40 digits
    chi = RealPrimitiveCharacter(-4)
    want = complex(1.53711543844031736, 1.34345142686775723)
    p = evaluate_L(chi, complex(0.5, 14.0))
    assert abs(p.value - want) <= max(p.error_bound, 1e-9)


def test_euler_product_consistency():
    # [DERIVED] independent oracle: truncated Euler product at sigma = 6
    for d in (-4, 5, -8):
        chi = RealPrimitiveCharacter(d)
        s = 6.0
        prod = 1.0
        from lmono.characters import primes_up_to

        for p in primes_up_to(2000):
            prod *= 1.0 / (1.0 - chi(int(p)) * float(p) ** -s)
        got = evaluate_L(chi, s)
        assert abs(got.value - prod) <= max(got.error_bound, 1e-10)


def test_functional_equation_symmetry():
    # [PAPER] Lambda(s) = Lambda(1-s) for real chi (root number +1)
    for d in (-4, -3, 5, -8):
        chi = RealPrimitiveCharacter(d)
        for s in (0.3, 0.7 + 5j, 0.5 + 12.2j, 2.0 + 1j):
            lam_s = completed_lambda(chi, s)
            lam_1ms = completed_lambda(chi, 1 - np.conj(s)).conjugate()
            assert abs(lam_s - lam_1ms) <= 1e-8 * max(1.0, abs(lam_s)), (d, s)


def test_z_real_and_zero_detection():
    # [TRIVIAL] Z is real on the line; it changes sign across gamma ~ 6.0209
    chi = RealPrimitiveCharacter(-4)
    ts = np.linspace(1.0, 12.0, 23)
    zv = z_function_array(chi, ts)
    assert np.all(np.isfinite(zv))
    assert z_function(chi, 6.0) * z_function(chi, 6.05) < 0
    # |Z(t)| = |L(1/2 + it)| by construction
    from lmono import evaluate_L

    p = evaluate_L(chi, complex(0.5, 8.0))
    assert abs(abs(z_function(chi, 8.0)) - abs(p.value)) <= 1e-8


def test_pole_free_at_one_vectorized():
    chi = RealPrimitiveCharacter(-3)
    from lmono.lfunction import evaluate_L_array

    vals, bounds = evaluate_L_array(chi, np.array([1.0, 1.0 + 1e-12]))
    assert abs(vals[0] - vals[1]) <= 1e-8
    assert np.all(bounds < 1e-9)
