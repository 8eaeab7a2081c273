import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_root
from digitroot import InvalidExponentError, OracleMethod, binary_search_root, newton_root
from digitroot.oracle import get_method


@pytest.mark.parametrize(
    "fn", [binary_search_root, newton_root], ids=["bisect", "newton"]
)
@pytest.mark.parametrize(
    "n, e, r",
    [(12321, 2, 111), (0, 3, 0), (10**18, 6, 1000), (125, 3, 5), (1, 9, 1), (3200001, 5, 20)],
)
def test_examples(fn, n, e, r):
    assert fn(n, e) == r


def test_exponent_checked():
    with pytest.raises(InvalidExponentError):
        newton_root(9, 1)


def test_methods_enum():
    assert {m.name for m in OracleMethod} == {"binary_search", "newton"}
    assert get_method("newton") is newton_root
    assert OracleMethod.binary_search.description


@given(st.integers(min_value=0, max_value=10**200), st.integers(min_value=2, max_value=40))
def test_floor_inequality_and_agreement(n, e):
    a, b = binary_search_root(n, e), newton_root(n, e)
    assert a == b
    assert a**e <= n < (a + 1) ** e


@given(st.integers(min_value=0, max_value=2000), st.integers(min_value=2, max_value=5))
def test_brute_force(n, e):
    assert newton_root(n, e) == binary_search_root(n, e) == brute_root(n, e)


def test_near_powers():
    for e in range(2, 12):
        for r in (2, 10, 99, 12345):
            for n in (r**e - 1, r**e, r**e + 1):
                expected = r if n >= r**e else r - 1
                assert newton_root(n, e) == binary_search_root(n, e) == expected
