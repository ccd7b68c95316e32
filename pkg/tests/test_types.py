import pytest
from hypothesis import given, strategies as st

from dualbraid.types import InvalidType, catalan_number, parse_type
from oracles import catalan_closed_form


@pytest.mark.parametrize("text,rank", [("A1", 1), ("A5", 5), ("B3", 3), ("D4", 4), ("E8", 8),
                                       ("F4", 4), ("H3", 3), ("H4", 4), ("I2(7)", 2),
                                       ("A2xB3", 5)])
def test_parse_rank(text, rank):
    assert parse_type(text).rank == rank


@pytest.mark.parametrize("text", ["", "Z3", "A0", "B1", "D2", "E9", "F5", "H5", "I2(2)", "A2x",
                                  "I2(x)", "A-1"])
def test_parse_rejects(text):
    with pytest.raises(InvalidType):
        parse_type(text)


def test_str_round_trip():
    for text in ["A3", "B4", "I2(9)", "A1xA1", "E6"]:
        assert str(parse_type(text)) == text


@pytest.mark.parametrize("text,degrees", [("A2", (2, 3)), ("B3", (2, 4, 6)), ("D4", (2, 4, 4, 6)),
                                          ("E6", (2, 5, 6, 8, 9, 12)), ("H3", (2, 6, 10)),
                                          ("I2(5)", (2, 5))])
def test_degrees(text, degrees):
    assert tuple(sorted(parse_type(text).degrees())) == degrees


@given(st.integers(1, 12))
def test_catalan_type_a(n):
    assert catalan_number(parse_type(f"A{n}")) == catalan_closed_form("A", n)


@given(st.integers(2, 12))
def test_catalan_type_b(n):
    assert catalan_number(parse_type(f"B{n}")) == catalan_closed_form("B", n)


@given(st.integers(4, 12))
def test_catalan_type_d(n):
    assert catalan_number(parse_type(f"D{n}")) == catalan_closed_form("D", n)


@given(st.integers(3, 40))
def test_catalan_dihedral(m):
    assert catalan_number(parse_type(f"I2({m})")) == catalan_closed_form("I", 2, m)


def test_catalan_exceptional():
    assert [catalan_number(parse_type(t)) for t in ["E6", "E7", "E8", "F4", "H3", "H4"]] == \
        [833, 4160, 25080, 105, 32, 280]


def test_catalan_reducible_is_product():
    assert catalan_number(parse_type("A2xB2")) == 5 * 6
