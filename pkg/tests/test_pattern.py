import pytest
from hypothesis import given
from hypothesis import strategies as st

from shiftgraphs import parse_type, sigma, swap_type, type_of_pair
from shiftgraphs.errors import (
    EmptyTypeError,
    InvalidCharacterError,
    NotSortedError,
    UnbalancedTypeError,
    WidthMismatchError,
)
from shiftgraphs.pattern import pair_matches


def test_parse_examples():
    t = parse_type("12312")
    assert t.width == 3 and t.length == 5
    t = parse_type("3")
    assert t.width == 1 and t.length == 1


def test_parse_rejects():
    with pytest.raises(UnbalancedTypeError):
        parse_type("112")
    with pytest.raises(InvalidCharacterError):
        parse_type("14")
    with pytest.raises(EmptyTypeError):
        parse_type("")


def test_sigma():
    assert str(sigma(1, 1)) == "132"
    assert str(sigma(2, 0)) == "1122"
    assert str(sigma(0, 2)) == "33"
    assert str(sigma(2, 1)) == "11322"
    with pytest.raises(EmptyTypeError):
        sigma(0, 0)


def test_sigma_split():
    assert parse_type("11322").sigma_split() == (2, 1)
    assert parse_type("132").sigma_split() == (1, 1)
    assert parse_type("1221").sigma_split() is None


def test_type_of_pair_paper_examples():
    assert str(type_of_pair((1, 5, 6), (3, 5, 8))) == "12312"
    assert str(type_of_pair((1, 3, 5), (2, 4, 6))) == "121212"
    assert str(type_of_pair((0, 1), (0, 1))) == "33"


def test_type_of_pair_errors():
    with pytest.raises(WidthMismatchError):
        type_of_pair((1, 2), (1, 2, 3))
    with pytest.raises(NotSortedError):
        type_of_pair((2, 1), (0, 3))


def test_swap():
    assert str(swap_type(parse_type("132"))) == "231"
    assert str(swap_type(parse_type("1122"))) == "2211"
    assert str(swap_type(parse_type("33"))) == "33"


@st.composite
def vertex_pairs(draw):
    k = draw(st.integers(1, 4))
    ground = draw(st.integers(k, 9))
    x = tuple(sorted(draw(st.sets(st.integers(0, ground - 1), min_size=k, max_size=k))))
    y = tuple(sorted(draw(st.sets(st.integers(0, ground - 1), min_size=k, max_size=k))))
    return x, y


@given(vertex_pairs())
def test_swap_symmetry(pair):
    x, y = pair
    assert type_of_pair(y, x) == swap_type(type_of_pair(x, y))


@given(vertex_pairs())
def test_self_type_is_all_shared(pair):
    x, _ = pair
    assert str(type_of_pair(x, x)) == "3" * len(x)


@given(vertex_pairs())
def test_pair_word_is_balanced(pair):
    x, y = pair
    t = type_of_pair(x, y)
    assert t.marks.count("1") == t.marks.count("2")
    assert parse_type(str(t)) == t


@given(vertex_pairs(), st.sampled_from(["132", "1221", "11322", "1122", "1332"]))
def test_pair_matches_agrees_with_type(pair, pat_s):
    x, y = pair
    if x == y:
        return
    pat = parse_type(pat_s)
    expect = type_of_pair(x, y) in (pat, swap_type(pat))
    assert pair_matches(x, y, pat) == expect
