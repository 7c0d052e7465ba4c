"""Pochhammer builders, theta closed forms, and eta-quotient evaluation."""

import pytest

from qpart.etaq import (
    THETA_PRODUCT_FORM,
    ThetaFamily,
    eval_eta,
    pochhammer_f,
    theta_series,
    theta_support_mod,
)
from qpart.series import TruncatedSeries

from oracles import pochhammer_by_product, two_color_overlay_series


# -- pochhammer_f ------------------------------------------------------------

def test_pochhammer_f1_small():
    assert list(pochhammer_f(1, 8)) == [1, -1, -1, 0, 0, 1, 0, 1]


def test_pochhammer_f2_small():
    assert list(pochhammer_f(2, 5)) == [1, 0, -1, 0, -1]


def test_pochhammer_high_scale_is_one():
    for k in (5, 6, 9):
        assert pochhammer_f(k, 5) == TruncatedSeries.one(5)


@pytest.mark.parametrize("k", [1, 2, 3, 7, 14])
def test_pochhammer_matches_finite_product(k):
    assert list(pochhammer_f(k, 120)) == pochhammer_by_product(k, 120)


def test_pochhammer_substitution_consistency():
    # f1 with q -> q^7 equals f7 built directly
    assert pochhammer_f(1, 100).substitute(7) == pochhammer_f(7, 100)


def test_pochhammer_validation():
    with pytest.raises(ValueError):
        pochhammer_f(0, 10)
    with pytest.raises(ValueError):
        pochhammer_f(1, 0)


def test_inverse_f1_gives_partition_numbers():
    p = pochhammer_f(1, 10).inverse()
    assert list(p) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_f1_times_its_inverse_is_one():
    f1 = pochhammer_f(1, 50)
    assert f1 * f1.inverse() == TruncatedSeries.one(50)


def test_cube_of_f1_matches_weighted_triangular_sum():
    assert list(pochhammer_f(1, 7) ** 3) == [1, -3, 0, 5, 0, 0, -7]


def test_partition_congruence_progression_mod5():
    p = pochhammer_f(1, 25).inverse()
    sub = p.dissect(5, 4)
    assert list(sub) == [5, 30, 135, 490, 1575]
    assert all(c % 5 == 0 for c in sub)


def test_seventh_power_congruent_to_rescaled_f1():
    f1 = pochhammer_f(1, 200)
    assert ((f1 ** 7) - f1.substitute(7)).reduce_mod(7).is_zero()


# -- theta closed forms --------------------------------------------------------

def test_jacobi_cube_small():
    assert list(theta_series(ThetaFamily.JACOBI_CUBE, 7)) == [1, -3, 0, 5, 0, 0, -7]


def test_theta_order_one():
    for family in ThetaFamily:
        assert theta_series(family, 1) == TruncatedSeries.one(1)


@pytest.mark.parametrize("family", list(ThetaFamily))
def test_theta_equals_product_form_at_500(family):
    assert theta_series(family, 500) == eval_eta(THETA_PRODUCT_FORM[family], 500)


@pytest.mark.parametrize("family,expected", [
    (ThetaFamily.JACOBI_CUBE, {0, 1, 3}),
    (ThetaFamily.PENTAGONAL_WEIGHTED, {0, 1, 5}),
    (ThetaFamily.OCTAGONAL_WEIGHTED, {0, 1, 5}),
    (ThetaFamily.OCTAGONAL_ALTERNATING, {0, 1, 5}),
])
def test_theta_supports_mod7(family, expected):
    assert theta_support_mod(family, 7) == frozenset(expected)
    computed = theta_series(family, 700).reduce_mod(7).support_residues(7)
    assert computed == frozenset(expected)


def test_theta_support_mod_needs_odd_modulus():
    with pytest.raises(ValueError):
        theta_support_mod(ThetaFamily.JACOBI_CUBE, 4)


# -- eval_eta ------------------------------------------------------------------

def test_eval_three_colored_series():
    assert list(eval_eta("f2^2/f1^3", 4)) == [1, 3, 7, 16]


def test_eval_single_factor_is_pochhammer():
    assert eval_eta("f1", 40) == pochhammer_f(1, 40)


def test_eval_mirror_two_color_series():
    # even parts 2-colored, odd monochromatic; frozen from the DP oracle
    assert list(eval_eta("1/(f1*f2)", 6)) == [1, 1, 3, 4, 9, 12]


def test_eval_shift_and_coefficient():
    assert list(eval_eta("3*q^2*f1", 5)) == [0, 0, 3, -3, -3]


def test_eval_shift_beyond_order():
    assert eval_eta("q^9", 5).is_zero()


def test_eval_overlay_series_matches_first_principles():
    # (-q;q)^2/(q;q) rewritten as f2^2/f1^3
    assert list(eval_eta("f2^2/f1^3", 200)) == two_color_overlay_series(200)


def test_eval_modular_matches_exact_reduction():
    for m in (2, 5, 7, 11):
        exact = eval_eta("f2^6/f1^7", 150).reduce_mod(m)
        assert eval_eta("f2^6/f1^7", 150, modulus=m) == exact


def test_eval_modular_with_shifted_terms():
    text = "5*q^3*f2^2/f1^4 + 1 - 2*q*f3"
    assert eval_eta(text, 90, modulus=7) == eval_eta(text, 90).reduce_mod(7)


def test_eval_rejects_bad_order():
    with pytest.raises(ValueError):
        eval_eta("f1", 0)
