import pytest

from sytlab.oracle import count_linear_extensions
from sytlab.shapes import TruncatedShifted, staircase
from sytlab.truncated import KINDS, PARAMS, truncated_count, truncated_diagram

CASES = {
    "tr_staircase_cell": [(3,), (4,), (5,)],
    "stair_minus_square": [(0, 1), (1, 1), (0, 2), (1, 2)],
    "rect_minus_square": [(1, 1, 1), (1, 1, 2), (2, 1, 2), (2, 2, 2), (2, 3, 2)],
    "rect_corner": [(1, 1), (2, 1), (2, 2), (3, 2)],
    "sun_nn2": [(2,), (3,), (4,)],
    "snow": [(2, 0), (2, 1), (3, 1), (3, 2)],
    "pell_strip": [(1,), (2,), (3,), (4,)],
    "panova": [(2, 2, 1), (3, 2, 1), (3, 3, 2), (4, 3, 1)],
    "sun_middle": [(0,), (1,), (2,)],
}


def test_every_kind_is_covered():
    assert set(CASES) == set(KINDS) == set(PARAMS)


@pytest.mark.parametrize("kind, params", [(k, p) for k, ps in CASES.items() for p in ps])
def test_closed_form_matches_oracle(kind, params):
    assert truncated_count(kind, *params) == count_linear_extensions(truncated_diagram(kind, *params))


def test_pell_values():
    assert [truncated_count("pell_strip", n) for n in (1, 2, 3)] == [1, 5, 29]


def test_truncated_staircase():
    assert truncated_count("tr_staircase_cell", 4) == 4
    assert count_linear_extensions(TruncatedShifted(staircase(4), (1,))) == 4


def test_rect_corner_is_k_equal_two():
    for m, n in ((1, 1), (2, 3), (3, 3)):
        assert truncated_count("rect_corner", m, n) == truncated_count("rect_minus_square", m, n, 2)


@pytest.mark.parametrize("kind, params", [("panova", (2, 2, 2)), ("snow", (1, 0)), ("nope", (1,)), ("sun_nn2", (2, 2))])
def test_out_of_range_parameters(kind, params):
    with pytest.raises(ValueError):
        truncated_count(kind, *params)
