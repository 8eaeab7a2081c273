import pytest
from hypothesis import given
from hypothesis import strategies as st

from digitroot import eth_root, refine_more, refine_root, sqrt_digits
from digitroot.oracle import binary_search_root


def test_seventh_root_of_two():
    text, state = refine_root(2, 7, 10)
    assert text == "1.1040895136"
    assert state.fraction_digits == (1, 0, 4, 0, 8, 9, 5, 1, 3, 6)
    assert state.integer_part == 1


@pytest.mark.parametrize("n, e, k, text", [(8, 3, 4, "2.0000"), (2, 3, 3, "1.259"), (5, 4, 0, "1")])
def test_examples(n, e, k, text):
    assert refine_root(n, e, k)[0] == text


def test_small_values_render_leading_zero():
    assert refine_root(0, 3, 2)[0] == "0.00"


def test_resume_matches_fresh():
    _, s3 = refine_root(10**9 + 7, 5, 3)
    assert refine_more(s3, 6) == refine_root(10**9 + 7, 5, 9)[1]


nek = (
    st.integers(min_value=0, max_value=10**30),
    st.integers(min_value=2, max_value=9),
    st.integers(min_value=0, max_value=8),
)


@given(*nek)
def test_lower_bound_is_scaled_floor_root(n, e, k):
    _, state = refine_root(n, e, k)
    target = n * 10 ** (e * k)
    L = state.lower_scaled
    assert L**e <= target < (L + 1) ** e
    assert L == eth_root(target, e).root == binary_search_root(target, e)
    assert state.remainder == target - L**e


@given(*nek)
def test_each_step_digit_is_maximal(n, e, k):
    _, state = refine_root(n, e, k)
    L = eth_root(n, e).root
    for j, m in enumerate(state.fraction_digits, start=1):
        target = n * 10 ** (e * j)
        L = 10 * L + m
        assert L**e <= target
        assert m == 9 or (L + 1) ** e > target


@given(st.integers(min_value=0, max_value=10**15), st.integers(min_value=0, max_value=12))
def test_agrees_with_sqrt_digits(n, k):
    assert refine_root(n, 2, k)[0] == sqrt_digits(n, k).render()
