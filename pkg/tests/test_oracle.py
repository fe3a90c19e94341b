from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings

from sytlab.oracle import (
    SizeLimitError,
    _RowPoset,
    _count_layered,
    _count_memo,
    component_product,
    count_linear_extensions,
    enumerate_syt,
    multinomial,
    total_syt,
    total_syt_even_rows,
    total_syt_odd_rows,
)
from sytlab.exact import involutions
from sytlab.shapes import Diagram, General, Ordinary, Shifted, Skew, Zigzag, partitions
from sytlab.tableau import is_standard
from strategies import partitions_st, skew_st


def brute_force(D: Diagram) -> int:
    cells = sorted(D.cells)
    total = 0
    for vals in permutations(range(1, len(cells) + 1)):
        fill = dict(zip(cells, vals))
        ok = all(
            fill[a] < fill[b]
            for a in cells
            for b in cells
            if a != b and a[0] <= b[0] and a[1] <= b[1]
        )
        total += ok
    return total


@pytest.mark.parametrize(
    "spec",
    [
        Ordinary((3, 2, 1)),
        Skew((4, 3, 1), (2, 1)),
        Shifted((4, 2, 1)),
        Zigzag(7, {2, 3, 5}),
        General([(1, 1), (1, 3), (2, 2), (3, 1), (3, 3)]),
    ],
)
def test_dp_matches_brute_force(spec):
    assert count_linear_extensions(spec) == brute_force(spec.diagram())


@given(partitions_st(max_n=9, min_n=1))
def test_enumeration_count_and_standardness(lam):
    ts = list(enumerate_syt(Ordinary(lam)))
    assert len(ts) == len(set(ts)) == count_linear_extensions(Ordinary(lam))
    assert all(is_standard(T) for T in ts)


@settings(max_examples=40)
@given(skew_st(max_outer=12))
def test_components_factor(pair):
    D = Skew(*pair).diagram()
    assert component_product(D) == count_linear_extensions(D)


@pytest.mark.parametrize("lam", [(4, 4, 3, 2), (5, 3, 3, 1), (6, 5, 2, 2, 1)])
def test_layered_mode_agrees_with_memo(lam):
    P = _RowPoset(Ordinary(lam).diagram())
    assert _count_layered(P) == _count_memo(P)


def test_large_rectangle():
    # 36! / prod(i + j - 1), frozen
    assert count_linear_extensions(Ordinary((6,) * 6)) == 1671643033734960


def test_totals_are_involution_counts():
    assert [total_syt(n) for n in range(1, 9)] == [involutions(n) for n in range(1, 9)]
    # no odd rows at size 2m: every SYT pairs up, giving (2m-1)!!
    assert [total_syt_even_rows(2 * m) for m in range(1, 5)] == [1, 3, 15, 105]
    assert sum(total_syt_odd_rows(6, k) for k in range(4)) == total_syt(6)


def test_enumeration_limit():
    with pytest.raises(SizeLimitError):
        next(enumerate_syt(Ordinary((5, 5, 5, 5, 5)), limit=20))


def test_multinomial():
    assert multinomial([2, 3, 1]) == factorial(6) // (2 * 6)
    assert sum(1 for _ in partitions(0)) == 1
