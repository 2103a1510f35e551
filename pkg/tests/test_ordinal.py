import pytest
from hypothesis import given
from hypothesis import strategies as st

from shiftgraphs import (
    INFINITE,
    Count,
    Ordinal,
    below_count,
    decompose,
    parse_ordinal,
    tail_count,
)
from shiftgraphs.errors import NonCanonicalError, OrdinalSyntaxError, OutOfRangeError


def test_parse_examples():
    assert parse_ordinal("w+3") == Ordinal(((1, 1),), 3)
    assert parse_ordinal("w^2*2+w*5+1") == Ordinal(((2, 2), (1, 5)), 1)
    assert parse_ordinal("0") == Ordinal()
    assert parse_ordinal("7") == Ordinal.from_int(7)


def test_parse_rejects_non_canonical():
    with pytest.raises(NonCanonicalError):
        parse_ordinal("3+w")
    with pytest.raises(NonCanonicalError):
        parse_ordinal("w+w")
    with pytest.raises(NonCanonicalError):
        parse_ordinal("w*0")
    with pytest.raises(OrdinalSyntaxError):
        parse_ordinal("x+1")
    with pytest.raises(OrdinalSyntaxError):
        parse_ordinal("")


def test_render_round_trip():
    for s in ["0", "7", "w", "w+3", "w*2", "w^2*2+w*5+1", "w^3+w^2*4+9"]:
        assert str(parse_ordinal(s)) == s


def test_decompose():
    assert decompose(parse_ordinal("w+3")) == (parse_ordinal("w"), 3)
    assert decompose(parse_ordinal("7")) == (Ordinal(), 7)
    assert decompose(parse_ordinal("w*2")) == (parse_ordinal("w*2"), 0)


def test_order_examples():
    w = parse_ordinal("w")
    assert Ordinal.from_int(100) < w < w + 1 < parse_ordinal("w*2") < parse_ordinal("w^2")
    assert parse_ordinal("w^2") < parse_ordinal("w^2+1") < parse_ordinal("w^2+w")
    assert w > 5 and Ordinal.from_int(3) < 4


def test_below_count():
    assert below_count(parse_ordinal("5")) == Count(5)
    assert below_count(parse_ordinal("w")) == INFINITE
    assert below_count(parse_ordinal("w^2+4")) == INFINITE


def test_tail_count():
    assert tail_count(parse_ordinal("w+3"), parse_ordinal("w")) == Count(2)
    assert tail_count(parse_ordinal("w+3"), parse_ordinal("5")) == INFINITE
    assert tail_count(parse_ordinal("10"), parse_ordinal("7")) == Count(2)
    with pytest.raises(OutOfRangeError):
        tail_count(parse_ordinal("5"), parse_ordinal("7"))


def test_count_arithmetic():
    assert Count(2) + Count(3) == Count(5)
    assert Count(2) + INFINITE == INFINITE
    assert INFINITE.binomial(2) == INFINITE
    assert INFINITE.binomial(0) == Count(1)
    assert Count(4).binomial(2) == Count(6)


def test_finite_counts_agree_with_enumeration():
    for n in range(1, 12):
        alpha = Ordinal.from_int(n)
        for x in range(n):
            xi = Ordinal.from_int(x)
            assert below_count(xi).value == len([z for z in range(n) if z < x])
            assert tail_count(alpha, xi).value == len([z for z in range(n) if x < z])


_ORD = st.builds(
    lambda exps, fin: Ordinal(
        tuple((e, c) for e, c in sorted(exps.items(), reverse=True)), fin
    ),
    st.dictionaries(st.integers(1, 3), st.integers(1, 3), max_size=2),
    st.integers(0, 5),
)


@given(_ORD, _ORD, _ORD)
def test_total_order(a, b, c):
    assert (a < b) + (a == b) + (b < a) == 1
    if a < b and b < c:
        assert a < c


@given(_ORD)
def test_decompose_shape(a):
    limit, k = decompose(a)
    assert limit.is_zero or limit.is_limit
    assert limit + k == a
