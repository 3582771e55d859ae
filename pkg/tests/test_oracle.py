"""The brute-force reference layer itself, checked from first principles."""

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from smoothwords import oracle


def brute_filter(n, predicate):
    out = [
        "".join(t)
        for length in range(n + 1)
        for t in itertools.product("12", repeat=length)
        if predicate("".join(t))
    ]
    return sorted(out, key=lambda w: (len(w), w))


def test_enumerate_ck_examples():
    got = oracle.enumerate_ck(1, 3)
    assert "111" not in got and "222" not in got
    assert len(got) == 15 - 2  # all 15 binary words up to length 3 minus two
    assert oracle.enumerate_ck(3, 0) == [""]
    got = oracle.enumerate_ck(2, 5)
    assert "21212" not in got and "12121" not in got and "2121" in got


def test_enumerations_match_definition_filters():
    for k in (1, 2, 3):
        assert oracle.enumerate_ck(k, 10) == brute_filter(
            10, lambda w: oracle.is_ck_naive(w, k)
        )
    assert oracle.enumerate_cinf(12) == brute_filter(12, oracle.is_cinf_naive)


def test_enumerate_cinf_small():
    assert oracle.enumerate_cinf(2) == ["", "1", "2", "11", "12", "21", "22"]
    got = oracle.enumerate_cinf(4)
    assert "2211" in got and "2112" in got and "1222" not in got


def test_deterministic_ordering():
    words = oracle.enumerate_cinf(10)
    assert words == sorted(words, key=lambda w: (len(w), w))
    assert oracle.enumerate_cinf(10) == words


def test_naive_derivative():
    assert oracle._naive_derivative("2211") == "22"
    assert oracle._naive_derivative("21221211221") == "121122"
    assert oracle._naive_derivative("111") is None
    assert oracle._naive_derivative("") == ""


def test_brute_mf_first_strata():
    assert oracle.brute_mf(1, 3) == ["111", "222"]
    assert oracle.brute_mf(2, 6) == [
        "111", "222", "12121", "21212", "112211", "221122"
    ]


def test_brute_gap_small():
    table = oracle.brute_gap_table(4)
    assert table[1] == (0, 0)
    assert all(i <= g for i, g in table.values())


@settings(max_examples=200, deadline=None)
@given(st.text(alphabet="12", max_size=40))
def test_incremental_chain_matches_naive_membership(w):
    # pushing fails exactly at the first non-smooth prefix, so surviving
    # the whole word is the same as smoothness of the word itself
    chain = oracle._RunChain()
    alive = all(chain.push(ch) is not None for ch in w)
    assert alive == oracle.is_cinf_naive(w)
