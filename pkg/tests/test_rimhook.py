from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from sytlab import rimhook
from sytlab.formulas import f_ordinary
from sytlab.oracle import count_linear_extensions
from sytlab.shapes import partitions, r_core, r_quotient
from strategies import partitions_st


def test_known_counts():
    assert rimhook.count_rimhook((4, 2), 2) == 3
    assert rimhook.count_rimhook((6, 4, 2, 2, 2, 1), 2) == 0
    assert rimhook.count_rimhook((3, 3), 3) == 2


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_three_methods_agree(r):
    for m in range(r, 13, r):
        for lam in partitions(m):
            d = rimhook.count_rimhook(lam, r, "direct")
            assert d == rimhook.count_rimhook(lam, r, "quotient")
            if not r_core(lam, r):
                assert d == rimhook.count_rimhook(lam, r, "hook")
            else:
                assert d == 0


def test_r_equal_one_is_ordinary():
    for lam in partitions(7):
        assert rimhook.count_rimhook(lam, 1) == f_ordinary(lam)


def test_hook_formula_refuses_nonempty_core():
    with pytest.raises(ValueError):
        rimhook.count_rimhook_hook_formula((2, 1), 2)
    with pytest.raises(ValueError):
        rimhook.count_rimhook((2,), 2, "nope")


@given(partitions_st(max_n=14, min_n=1), st.integers(min_value=1, max_value=4))
def test_divisible_hooks_count_quotient_cells(lam, r):
    if not r_core(lam, r):
        assert rimhook.divisible_hooks(lam, r) == sum(map(sum, r_quotient(lam, r)))


@pytest.mark.parametrize("n, r", [(n, r) for r in range(1, 6) for n in range(1, 12 // r + 1)])
def test_sum_identities(n, r):
    assert rimhook.rimhook_sum_identities(n, r)["ok"]


@settings(max_examples=60)
@given(partitions_st(max_n=14, min_n=1), st.integers(min_value=1, max_value=4))
def test_fomin_lulov(lam, r):
    if sum(lam) % r == 0:
        assert rimhook.fomin_lulov_bound(lam, r)
    else:
        with pytest.raises(ValueError):
            rimhook.fomin_lulov_bound(lam, r)


def test_r_diagram_components_count_independently():
    parts = [(2, 1), (2,)]
    D = rimhook.r_diagram(parts)
    assert len(D) == 5
    assert rimhook.f_rpartition(parts) == count_linear_extensions(D) == 10 * 2 * 1
    assert rimhook.f_rpartition([(1,), (1,), (1,)]) == factorial(3)
