import math
from fractions import Fraction

import pytest

from galledtrees import asym
from galledtrees.asym import CharFamily, DerivativeMode
from galledtrees.comb import catalan, double_factorial_odd
from galledtrees.counts import (
    GENERAL_LABELED,
    GENERAL_UNLABELED,
    SIMPLEX_LABELED,
    SIMPLEX_UNLABELED,
    simplex_total_sequence,
)


def test_rho_gamma():
    sc = asym.solve_rho_gamma(60)
    assert abs(sc.rho - 0.40270) <= 5e-6
    assert abs(sc.gamma - 1.13003) <= 5e-6
    assert sc.residual() <= 1e-9
    assert abs(asym.tree_series_value_at_singularity(60) - 1.0) <= 1e-9


def test_rho_gamma_truncation_guard():
    with pytest.raises(ValueError):
        asym.solve_rho_gamma(10)


def test_beta_values():
    assert asym.beta(1) == Fraction(1, 2)
    assert asym.beta(2) == Fraction(5, 8)
    assert asym.beta(3) == Fraction(21, 16)  # from 2^5 beta_3 = catalan(5) = 42
    with pytest.raises(ValueError):
        asym.beta(0)


def test_beta_catalan_identity():
    for g in range(1, 21):
        assert 2 ** (2 * g - 1) * asym.beta(g) == catalan(2 * g - 1)


def test_beta_double_factorial_identity():
    # (4g-3)!! is the odd double factorial with top factor 2(2g-1) - 1
    for g in range(1, 21):
        assert (
            asym.beta(g) * math.factorial(2 * g) / double_factorial_odd(2 * g - 1) == 1
        )


def test_estimate_guards_and_log_form():
    with pytest.raises(ValueError):
        asym.estimate_log(GENERAL_UNLABELED, 0, 100)
    with pytest.raises(ValueError):
        asym.estimate_log(GENERAL_UNLABELED, 1, 1)
    # labeled one-gall constant is 1/sqrt(pi): check the full log value at one n
    est = asym.asymptotic_estimate(GENERAL_LABELED, 1)
    n = 50
    want = (
        math.log(1 / math.sqrt(math.pi))
        + 0.5 * math.log(n)
        + n * math.log(2)
        + math.lgamma(n + 1)
    )
    assert abs(est.log_value(n) - want) < 1e-12


def test_simplex_estimate_carries_rho_and_half_powers():
    sc = asym.solve_rho_gamma(60)
    n, g = 40, 2
    unl = asym.estimate_log(SIMPLEX_UNLABELED, g, n) - asym.estimate_log(
        GENERAL_UNLABELED, g, n
    )
    assert abs(unl - g * math.log(sc.rho)) < 1e-12
    lab = asym.estimate_log(SIMPLEX_LABELED, g, n) - asym.estimate_log(
        GENERAL_LABELED, g, n
    )
    assert abs(lab + g * math.log(2)) < 1e-12


def test_charsys_simplex_unlabeled():
    sol = asym.solve_charsys(CharFamily.SIMPLEX_UNLABELED, 25)
    assert abs(sol.r - 0.2344) <= 5e-4
    assert abs(sol.s - 0.4349) <= 5e-4
    assert abs(sol.b - 0.0584) <= 5e-4
    assert abs(sol.phi_ww - 5.2993) <= 5e-4
    res = sol.residuals()
    assert res[0] < 1e-8 and res[1] < 1e-8
    # the reported (phi_t, delta) pair needs the replication mode; the faithful
    # evaluation of phi_t at the same point sits 9.2e-3 lower
    rep = asym.solve_charsys(CharFamily.SIMPLEX_UNLABELED, 25, replicate_reported=True)
    assert abs(rep.phi_t - 1.6716) <= 5e-4
    assert abs(rep.delta - 0.3846) <= 5e-4
    assert abs(sol.phi_t - 1.6624) <= 5e-4
    assert abs(sol.delta - 0.38353) <= 5e-4


def test_charsys_simplex_unlabeled_details():
    data = simplex_total_sequence(25)
    sol = asym.solve_charsys(CharFamily.SIMPLEX_UNLABELED, 25)
    # the finite-difference derivative of the totals series, as used for phi_t
    fd = asym.derivative_at(data, sol.r**2, DerivativeMode.FINITE_DIFFERENCE)
    assert abs(fd - 1.1308) <= 2e-3
    exact = asym.derivative_at(data, sol.r**2, DerivativeMode.EXACT_SERIES)
    assert abs(exact - fd) < 1e-2
    # b self-consistency at a deeper truncation
    deeper = asym.series_value(simplex_total_sequence(35), sol.r**2)
    assert abs(sol.b - deeper) < 1e-6


def test_charsys_truncation_insensitive():
    a = asym.solve_charsys(CharFamily.SIMPLEX_UNLABELED, 25)
    b = asym.solve_charsys(CharFamily.SIMPLEX_UNLABELED, 40)
    assert abs(a.r - b.r) < 1e-5
    c = asym.solve_charsys(CharFamily.GENERAL_UNLABELED, 25)
    d = asym.solve_charsys(CharFamily.GENERAL_UNLABELED, 40)
    assert abs(c.r - d.r) < 1e-5


def test_charsys_simplex_labeled_closed_forms():
    sol = asym.solve_charsys(CharFamily.SIMPLEX_LABELED)
    assert abs(sol.r - (3 + math.sqrt(3)) / 18) < 1e-12
    assert abs(sol.s - (3 - math.sqrt(3)) / 3) < 1e-12
    assert abs(sol.delta - 0.3525) <= 5e-4
    assert abs(sol.delta - asym.simplex_labeled_closed_delta()) < 1e-12
    res = sol.residuals()
    assert res[0] < 1e-12 and res[1] < 1e-12


def test_charsys_general_unlabeled():
    sol = asym.solve_charsys(CharFamily.GENERAL_UNLABELED, 25)
    assert abs(sol.r - 0.11647) <= 1e-4
    assert abs(sol.delta - 0.19659) <= 1e-4
    res = sol.residuals()
    assert res[0] < 1e-8 and res[1] < 1e-8


def test_charsys_general_labeled():
    sol = asym.solve_charsys(CharFamily.GENERAL_LABELED)
    assert abs(sol.r - 0.125) <= 1e-6
    assert abs(sol.delta - 0.1894) <= 1e-4
    # the closed form of delta for this family
    assert abs(sol.delta - (17 - math.sqrt(17)) / 68) < 1e-9


def test_charsys_time_consistent_soft_targets():
    sol = asym.solve_charsys(CharFamily.TIME_CONSISTENT_UNLABELED, 25)
    assert abs(sol.r - 0.2073) <= 1e-3
    assert abs(sol.delta - 0.2762) <= 1e-3
    sol = asym.solve_charsys(CharFamily.TIME_CONSISTENT_LABELED)
    assert abs(sol.r - 0.2383) <= 1e-3
    assert abs(sol.delta - 0.2548) <= 1e-3


def test_charsys_replicate_guard():
    with pytest.raises(ValueError):
        asym.solve_charsys(CharFamily.GENERAL_LABELED, replicate_reported=True)


def test_derivative_modes():
    coeffs = [0, 0, 1]  # t^2
    assert asym.derivative_at(coeffs, 0.5, DerivativeMode.EXACT_SERIES) == 1.0
    fd = asym.derivative_at(coeffs, 0.5, DerivativeMode.FINITE_DIFFERENCE)
    assert abs(fd - (0.25 - 0.499**2) / 0.001) < 1e-12


def test_ratio_engine_small_n_agrees_with_counts():
    from galledtrees.counts import count

    for spec in (GENERAL_UNLABELED, SIMPLEX_UNLABELED, GENERAL_LABELED, SIMPLEX_LABELED):
        for g in (1, 2):
            got = asym.exact_fixed_g_count(spec, g, 10, order=12)
            assert got == count(spec, g=g, n=10)


def test_ratio_moves_toward_one():
    r60 = asym.ratio_exact_to_estimate(GENERAL_UNLABELED, 1, 60, order=120)
    r120 = asym.ratio_exact_to_estimate(GENERAL_UNLABELED, 1, 120, order=120)
    assert abs(r120 - 1) < abs(r60 - 1) < 1


def test_cross_family_ratio_small():
    sc = asym.solve_rho_gamma(60)
    r = asym.simplex_to_general_ratio(1, 120, order=120)
    assert abs(r / sc.rho - 1) < 0.15
