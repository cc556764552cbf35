"""Smoke tests for the epp extension module."""

from fractions import Fraction

import pytest

import epp


def test_pmf_worked_example():
    assert epp.pmf([2, 2, 1], alpha="1/2", theta=1) == Fraction(3, 32)
    assert epp.pmf("2,2,1", alpha=Fraction(1, 2), theta=1, verify=True) == Fraction(3, 32)
    for route in ("closed", "newton", "altrep"):
        assert epp.pmf([2, 2, 1], "1/2", 1, route=route) == Fraction(3, 32)


def test_inputs_and_errors():
    with pytest.raises(epp.Error):
        epp.pmf([1, 2], "1/2", 1)  # ascending parts rejected
    with pytest.raises(epp.Error):
        epp.pmf([2, 1], "1/2", "-1")  # theta out of range
    with pytest.raises(epp.Error):
        epp.pmf([2, 1], 0, 1, route="newton")  # interpolation needs alpha != 0


def test_normalization_and_marginals():
    assert epp.normalization(8, "1/2", "3/2") == 1
    assert epp.normalization(6, 0, 1) == 1
    total = sum(epp.marginal_length(6, l, "1/2", 1) for l in range(7))
    assert total == 1
    assert epp.marginal_length(3, 1, "1/2", 1) == Fraction(1, 8)
    assert epp.marginal_length(5, 2, "1/3", 2, route="bruteforce") == epp.marginal_length(
        5, 2, "1/3", 2
    )


def test_moments():
    assert epp.moment_length(3, 1, "1/2", 1) == Fraction(19, 8)
    assert epp.joint_moment_sizes(2, [1], "1/2", 1) == Fraction(3, 2)
    assert epp.conditional_moment([1], 1, [1], "1/2", 1) == Fraction(3, 4)
    assert epp.conditional_moment([2, 1], 2, [2], "1/3", 1, route="bruteforce") == Fraction(1, 3)


def test_partitions_and_graphs():
    level = epp.enumerate_partitions(4)
    assert level == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert epp.kingman_dim([4, 2, 1]) == 105
    assert epp.kingman_multiplicity([2, 1], [2, 2]) == 2
    assert epp.covers([2, 1], [2, 2])
    assert not epp.covers([2, 1], [4, 1])
    assert epp.pascal_dim(0, 0, 2, 1) == 3
    ratio = epp.pascal_boundary_ratio(1, 1, Fraction(1, 2), 1000)
    assert abs(ratio - Fraction(1, 4)) < Fraction(1, 100)


def test_symmetric_and_stirling():
    assert epp.monomial_sym([2, 1], [1, 2, 3]) == 48
    assert epp.factorial_monomial_sym([2, 1], [3, 2, 1]) == 26
    assert epp.mstar_repeated_alpha([2, 2, 1], 3, "1/2") == Fraction(3, 32)
    assert epp.gstirling(-1, "-1/2", 0, 2, 1) == Fraction(1, 2)
    assert epp.gstirling(-1, "-1/2", 0, 2, 1, route="bell") == Fraction(1, 2)
    assert epp.laguerre_row(1, 1) == -1
    # f_(1) = -theta
    assert epp.f_lambda([1], "1/2") == [0, -1]


def test_riordan_and_ftra():
    # binomial array: d = e^t, h = t, both to order 5
    d = [1] * 6
    h = [0, 1, 0, 0, 0, 0]
    assert epp.riordan_entry(d, h, 5, 2) == 10
    # sum binom(3,k) 2^k = 27
    c = [Fraction(2) ** k for k in range(6)]
    assert epp.ftra(d, h, c, 3) == 27


def test_bruteforce_expectation():
    value = epp.bruteforce_expectation(3, lambda parts: Fraction(len(parts)), "1/2", 1)
    assert value == Fraction(19, 8)


def test_verify_run():
    results = epp.verify_run(max_n=3)
    assert results and all(r["passed"] for r in results)
