import pytest
from hypothesis import given

from fockweyl.dsl import (DSLSyntaxError, infer_dimension, parse_family, parse_operator,
                          parse_poly, parse_symbol, tokenize)
from fockweyl.poly import DimensionError
from fockweyl.scalar import I

from strategies import polys, weyl_ops


@pytest.mark.parametrize("text, n, terms", [
    ("d1", 1, {((0,), (1,)): 1}),
    ("d1*z1", 1, {((0,), (0,)): 1, ((1,), (1,)): 1}),
    ("i*d1*d2", 2, {((0, 0), (1, 1)): I}),
])
def test_parse_examples(text, n, terms):
    assert parse_operator(text, n).terms == terms


def test_whitespace_and_grouping():
    assert parse_operator(" ( d1 + d2 ) ^2 ") == parse_operator("d1^2 + 2*d1*d2 + d2^2")
    assert parse_operator("-d1 + 3/2*i*z1") == parse_operator("3/2*i*z1 - d1")
    assert parse_operator("2*(z1 - z1)").is_zero()


def test_tokens_carry_positions():
    toks = tokenize("d1 + 3/2*z12")
    assert [(t.kind, t.value, t.pos) for t in toks] == [
        ("d", "1", 0), ("+", "+", 3), ("num", "3/2", 5), ("*", "*", 8), ("z", "12", 9),
        ("end", "", 12)]


@pytest.mark.parametrize("text, pos, fragment", [
    ("d1 +* z1", 4, "'*'"),
    ("d1^", 3, "end of input"),
    ("z1^-1", 3, "'-'"),
    ("(d1", 3, "')'"),
    ("d1 z1", 3, "'z1'"),
    ("d1 % 2", 3, "'%'"),
    ("d0", 0, "start at 1"),
    ("", 0, "end of input"),
    ("z1^1/2", 3, "nonnegative integer"),
])
def test_syntax_errors_report_position(text, pos, fragment):
    with pytest.raises(DSLSyntaxError) as err:
        parse_operator(text)
    assert err.value.pos == pos
    assert fragment in str(err.value)


def test_explicit_dimension_beats_inferred():
    assert infer_dimension("z1*d3") == 3
    assert parse_operator("d1", 3).n == 3
    with pytest.raises(DimensionError):
        parse_operator("d3", 2)


def test_poly_and_symbol_restrictions():
    assert parse_poly("z1^2 - i*z2").n == 2
    with pytest.raises(ValueError):
        parse_poly("d1")
    with pytest.raises(ValueError):
        parse_symbol("z1*d1")
    assert str(parse_symbol("d1^2 + d2")) == "w1^2 + w2"


def test_family():
    fam = parse_family("d1*d2; d1^2+d2^2")
    assert len(fam) == 2 and all(p.n == 2 for p in fam)
    assert len(parse_family("d1; d2; d1*d3")) == 3
    with pytest.raises(DimensionError):
        parse_family("d1; d2", 3)
    with pytest.raises(DimensionError):
        parse_family("d1; d3")


@given(weyl_ops(3, 3, 5))
def test_print_parse_fixed_point(P):
    text = str(P)
    assert parse_operator(text, 3) == P
    assert str(parse_operator(text, 3)) == text


@given(polys(2, 5))
def test_poly_round_trip(u):
    assert parse_poly(str(u), 2) == u
