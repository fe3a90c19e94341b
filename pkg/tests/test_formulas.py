from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings

from sytlab import formulas
from sytlab.exact import IntegralityError, as_int, binom, catalan, det, double_factorial, inv_fact, motzkin, pell
from sytlab.oracle import count_linear_extensions
from sytlab.series import SeriesQ, cos_series, sec_plus_tan, sin_series, x_over_sin
from sytlab.shapes import Ordinary, Shifted, Skew, Zigzag, staircase
from strategies import descent_sets_st, partitions_st, skew_st, strict_partitions_st

EULER_ZIGZAG = [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765]


def test_f_431_is_70():
    for method in formulas.METHODS:
        assert formulas.f_ordinary((4, 3, 1), method) == 70


@settings(max_examples=60)
@given(partitions_st(max_n=12))
def test_ordinary_methods_agree_with_oracle(lam):
    vals = {formulas.f_ordinary(lam, m) for m in formulas.METHODS}
    assert vals == {count_linear_extensions(Ordinary(lam))}


@settings(max_examples=60)
@given(skew_st(max_outer=12))
def test_skew_determinant_matches_oracle(pair):
    lam, mu = pair
    assert formulas.f_skew_det(lam, mu) == count_linear_extensions(Skew(lam, mu))


@settings(max_examples=60)
@given(strict_partitions_st(max_n=14))
def test_shifted_methods_agree_with_oracle(lam):
    vals = {formulas.g_shifted(lam, m) for m in formulas.METHODS}
    assert vals == {count_linear_extensions(Shifted(lam))}


def test_shifted_staircase():
    assert formulas.g_shifted(staircase(4)) == 12
    assert [formulas.staircase_shifted_count(n) for n in range(1, 6)] == [
        formulas.g_shifted(staircase(n)) for n in range(1, 6)
    ]


def test_unknown_method():
    with pytest.raises(ValueError):
        formulas.f_ordinary((2, 1), "magic")


@settings(max_examples=80)
@given(descent_sets_st(max_n=9))
def test_zigzag_variants_agree(nS):
    n, S = nS
    vals = {formulas.zigzag_det(n, S, v) for v in (1, 2, 3)}
    assert vals == {count_linear_extensions(Zigzag(n, S))}


def test_andre_numbers():
    assert formulas.andre_numbers(12) == EULER_ZIGZAG
    s = sec_plus_tan(12)
    assert [s[n] * factorial(n) for n in range(13)] == EULER_ZIGZAG
    assert [formulas.tangent(n) for n in range(1, 5)] == [1, 2, 16, 272]
    assert [formulas.secant(n) for n in range(0, 7)] == [1, 0, -1, 0, 5, 0, -61]


def test_thin_families():
    assert [formulas.thin_counts("total_h3", n) for n in range(8)] == [1, 1, 2, 4, 9, 21, 51, 127]
    assert formulas.thin_counts("two_row", 6, 3) == catalan(3)
    assert formulas.thin_counts("hook", 6, 2) == count_linear_extensions(Ordinary((4, 1, 1)))
    assert formulas.thin_counts("total_hooks", 5) == 16
    with pytest.raises(ValueError):
        formulas.thin_counts("hook", 3, 3)
    with pytest.raises(ValueError):
        formulas.thin_counts("nope", 3)


def test_special_sequences():
    assert [formulas.special_sequences("pell", n) for n in range(6)] == [0, 1, 2, 5, 12, 29]
    assert [motzkin(n) for n in range(6)] == [1, 1, 2, 4, 9, 21]
    assert formulas.special_sequences("superfactorial_F", 4) == 1 * 1 * 2 * 6
    assert formulas.f_rectangle(3, 4) == formulas.f_ordinary((4, 4, 4))
    assert formulas.involution_count(6) == 76
    assert pell(3) == 5


def test_exact_helpers():
    assert det([[1, 2], [3, 4]]) == -2
    assert det([]) == 1
    assert det([[0, 1], [1, 0]]) == -1
    assert inv_fact(-1) == 0 and inv_fact(3) == Fraction(1, 6)
    assert binom(3, 5) == 0 and binom(5, -1) == 0
    assert double_factorial(-1) == 1 and double_factorial(7) == 105
    with pytest.raises(IntegralityError):
        as_int(Fraction(1, 2))


def test_series_arithmetic():
    s, c = sin_series(10), cos_series(10)
    one = s * s + c * c
    assert one == SeriesQ([1], 10)
    assert (s / c)[3] == Fraction(1, 3)
    assert x_over_sin(4)[2] == Fraction(1, 6)
    assert SeriesQ([1, 1], 3).shift(2)[3] == 1
    with pytest.raises(ZeroDivisionError):
        SeriesQ([0, 1], 3).inverse()
