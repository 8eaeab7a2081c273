import pytest
from hypothesis import given
from hypothesis import strategies as st

from digitroot.binomial import IncrementContext, binomial_row, max_digit, phi

exps = st.integers(min_value=2, max_value=15)
roots = st.integers(min_value=0, max_value=10**40)
digits = st.integers(min_value=0, max_value=9)


def test_phi_examples():
    assert phi(2, 11, 1) == 221 == 111**2 - 110**2
    assert phi(3, 0, 5) == 125
    assert phi(7, 12345, 0) == 0


def test_phi_rejects_non_digit():
    with pytest.raises(ValueError):
        phi(2, 1, 10)


@pytest.mark.parametrize(
    "e, r, budget, expected",
    [(2, 1, 23, (1, 21)), (3, 0, 125, (5, 125)), (4, 7, 0, (0, 0)), (2, 0, 10**9, (9, 81))],
)
def test_max_digit_examples(e, r, budget, expected):
    assert max_digit(e, r, budget) == expected
    assert max_digit(e, r, budget, strategy="scan") == expected


def test_binomial_row():
    assert binomial_row(2) == (2, 1)
    assert binomial_row(5) == (5, 10, 10, 5, 1)


def test_context_fields():
    ctx = IncrementContext(4, 3)
    assert ctx.coefficients == (4, 6, 4, 1)
    assert ctx.scaled_root_powers == (30, 900, 27000)


@given(exps, roots, digits)
def test_phi_matches_direct_powering(e, r, x):
    assert phi(e, r, x) == (10 * r + x) ** e - (10 * r) ** e


@given(exps, roots)
def test_phi_strictly_increasing(e, r):
    ctx = IncrementContext(e, r)
    vals = [ctx.phi(x) for x in range(10)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


@given(exps, roots, st.integers(min_value=0, max_value=10**300))
def test_max_digit_maximal_and_strategies_agree(e, r, budget):
    ctx = IncrementContext(e, r)
    x, v = ctx.max_digit(budget)
    assert v == ctx.phi(x) <= budget
    assert x == 9 or ctx.phi(x + 1) > budget
    assert ctx.max_digit(budget, strategy="scan") == (x, v)
