from collections import Counter
from fractions import Fraction
from math import factorial, prod

import pytest
from hypothesis import given, settings, strategies as st

from sytlab.bijections import (
    chi_square,
    corner_probabilities,
    corner_probability_formula,
    fz_sort,
    gnw_sample,
    hook_bijection_image,
    insert_column,
    nps_sort,
    pointer_ok,
    syt_probability,
)
from sytlab.formulas import f_ordinary
from sytlab.shapes import hook_lengths, partitions
from sytlab.tableau import Tableau, TableauError, is_standard
from strategies import partitions_st


def test_insert_column_example():
    T, P = insert_column([[1, 8], [4], [7]], [[1, 0], [0], [0]], [12, 5, 3, 6])
    assert T == [[1, 4, 8], [3, 7], [5, 12], [6]]
    assert P == [[-2, 1, 0], [0, 0], [1, 0], [0]]


def test_fz_example():
    R = Tableau.from_rows([[9, 12, 8, 1], [2, 5, 4], [11, 3, 7], [10, 6]])
    T, P = fz_sort(R)
    assert T.rows() == [[1, 3, 4, 8], [2, 7, 9], [5, 10, 12], [6, 11]]
    assert P == [[0, -2, 1, 0], [2, 0, 0], [-1, 1, 0], [1, 0]]


def test_nps_example_step_by_step():
    trace = []
    T, P = nps_sort(Tableau.from_rows([[6, 2], [4, 3], [5, 1]]), trace)
    steps = [(t.rows(), p) for t, p in trace]
    assert steps == [
        ([[6, 2], [4, 1], [5, 3]], [[0, 0], [0, -1], [0, 0]]),
        ([[6, 1], [4, 2], [5, 3]], [[0, -2], [0, 0], [0, 0]]),
        ([[6, 1], [4, 2], [3, 5]], [[0, -2], [0, 0], [1, 0]]),
        ([[6, 1], [2, 4], [3, 5]], [[0, -2], [1, 0], [1, 0]]),
        ([[1, 4], [2, 5], [3, 6]], [[0, -2], [0, 0], [1, 0]]),
    ]
    assert T.rows() == [[1, 4], [2, 5], [3, 6]]


@pytest.mark.parametrize("method", ["fz", "nps"])
@pytest.mark.parametrize("lam", [lam for m in range(1, 6) for lam in partitions(m)])
def test_hook_bijections_are_injective(method, lam):
    count, distinct, valid = hook_bijection_image(lam, method)
    assert count == distinct == factorial(sum(lam)) and valid
    # the image is SYT x pointer tableaux, of size f * prod h
    assert distinct == f_ordinary(lam) * prod(map(prod, hook_lengths(lam)))


@settings(max_examples=30)
@given(partitions_st(max_n=9, min_n=1), st.data())
def test_sorted_output_is_standard(lam, data):
    n = sum(lam)
    vals = data.draw(st.permutations(range(1, n + 1)))
    rows, k = [], 0
    for l in lam:
        rows.append(vals[k:k + l])
        k += l
    R = Tableau.from_rows(rows)
    for sort in (fz_sort, nps_sort):
        T, P = sort(R)
        assert is_standard(T) and pointer_ok(P)


def test_bijections_need_ordinary_shapes():
    with pytest.raises(TableauError):
        nps_sort(Tableau.from_text("1/23"))


@given(partitions_st(max_n=10, min_n=1), st.integers(min_value=0, max_value=2**31))
def test_sampler_returns_standard_tableaux(lam, seed):
    T = gnw_sample(lam, seed)
    assert is_standard(T) and tuple(len(r) for r in T.rows()) == lam
    assert gnw_sample(lam, seed) == T


@pytest.mark.parametrize("lam", [lam for m in range(1, 8) for lam in partitions(m)])
def test_corner_law_matches_formula(lam):
    exact = corner_probabilities(lam)
    assert sum(exact.values()) == 1
    for corner, p in exact.items():
        assert p == corner_probability_formula(lam, corner)


def test_syt_probability():
    assert syt_probability((3, 2)) == Fraction(1, f_ordinary((3, 2)))


def test_sampler_is_uniform_on_small_shape():
    _, p, support = chi_square((3, 2), 5000, seed=7)
    assert support == 5 and p > 1e-6
    counts = Counter(gnw_sample((2, 2), s).to_text() for s in range(400))
    assert set(counts) == {"12/34", "13/24"}
