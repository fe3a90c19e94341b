from fractions import Fraction

import pytest
from hypothesis import given, settings

from sytlab import words
from sytlab.formulas import f_ordinary, g_shifted
from sytlab.oracle import enumerate_syt
from sytlab.perms import inversions
from sytlab.shapes import Ordinary, Shifted, partitions, staircase
from strategies import partitions_st, perms_st


def test_longest_element_counts():
    assert words.reduced_word_count(words.longest(4)) == 16
    assert words.reduced_word_count(words.longest(5)) == 768
    assert [words.reduced_word_count(words.longest(n, "B"), "B") for n in range(1, 6)] == [
        1, 2, 42, 24024, 701149020,
    ]


@pytest.mark.parametrize("n", range(2, 7))
def test_staircase_three_ways(n):
    rep = words.staircase_chain_counts(n)
    assert rep["chains"] == rep["reduced_words"] == rep["f_staircase"]


@pytest.mark.parametrize("n", range(1, 5))
def test_type_b_square(n):
    assert words.reduced_word_count(words.longest(n, "B"), "B") == f_ordinary((n,) * n)


@given(perms_st(max_n=6))
def test_reduced_words_evaluate_back(pi):
    ws = words.reduced_words(pi)
    assert len(ws) == words.reduced_word_count(pi)
    assert all(len(w) == inversions(pi) and words.apply_word(w, len(pi)) == pi for w in ws)


def test_signed_words_and_length():
    w = (-2, 1, -3)
    ws = words.reduced_words(w, "B")
    assert ws and all(len(x) == words.length_B(w) for x in ws)
    assert all(words.apply_word(x, 3, signed=True) == w for x in ws)
    with pytest.raises(ValueError):
        words.apply_word((0,), 2)


def test_shuffle_of_541():
    pi = words.shuffle_of_shape((5, 4, 1))
    assert pi == (4, 1, 5, 6, 7, 2, 8, 3)
    assert words.reduced_word_count(pi) == f_ordinary((5, 4, 1)) == 288


@settings(max_examples=40, deadline=None)
@given(partitions_st(max_n=7, min_n=1))
def test_shuffle_bijection_count(lam):
    assert words.reduced_word_count(words.shuffle_of_shape(lam)) == f_ordinary(lam)


@pytest.mark.parametrize("lam", [lam for m in range(1, 6) for lam in partitions(m)])
def test_word_of_tableau_is_a_bijection(lam):
    pi = words.shuffle_of_shape(lam)
    img = [words.word_of_tableau(T) for T in enumerate_syt(Ordinary(lam))]
    assert len(set(img)) == len(img)
    assert set(img) == set(words.reduced_words(pi))


def test_edelman_chains():
    assert [words.edelman_modified_chains(n) for n in range(2, 7)] == [1, 1, 2, 12, 286]
    assert [g_shifted(staircase(n - 1)) for n in range(2, 7)] == [1, 1, 2, 12, 286]


def test_unimodal_shape_permutation():
    assert words.unimodal_of_shape((5, 4, 1), 7) == (4, 3, 5, 6, 2, 1, 7)
    assert words.is_unimodal((4, 3, 5, 6, 2, 1, 7))
    with pytest.raises(ValueError):
        words.unimodal_of_shape((4,), 4)


@pytest.mark.parametrize("lam, n", [((2,), 3), ((2, 1), 3), ((3, 1), 4), ((3, 2), 4), ((4, 2, 1), 5)])
def test_unimodal_interval(lam, n):
    assert words.unimodal_interval_chains(lam, n) == g_shifted(lam)
    pi = words.unimodal_of_shape(lam, n)
    assert all(words.apply_word(words.word_of_shifted_tableau(T), n) == pi for T in enumerate_syt(Shifted(lam)))


def test_reiner_expectation():
    assert [words.reiner_expectation(n) for n in (3, 4, 5)] == [Fraction(1)] * 3


@given(perms_st(max_n=6))
def test_vexillary(pi):
    assert words.vexillary_check(pi)["ok"]


def test_limits():
    with pytest.raises(words.WordLimitError):
        words.reduced_word_count(tuple(range(10, 0, -1)))
    with pytest.raises(ValueError):
        words.reduced_word_count((1, 1))
    with pytest.raises(ValueError):
        words.reduced_word_count((1, 2), "C")


def test_verify_bundle():
    assert all(words.words_verify(5).values())
