import random

import pytest

from polyz.domains import GF, QQ, ZZ
from polyz.errors import ParseError
from polyz.poly import Polynomial
from polyz.text import format_polynomial, parse_polynomial


def rand_poly(rng, n, dmax, tmax, cmax):
    items = []
    for _ in range(rng.randint(0, tmax)):
        e = tuple(rng.randint(0, dmax) for _ in range(n))
        if sum(e) <= dmax:
            items.append((e, rng.randint(-cmax, cmax)))
    return Polynomial.from_terms(ZZ, n, items)


def test_parse_basic():
    f = parse_polynomial("3*X1^2*X2 - 4*X2 + 7", 2)
    assert f.terms == {(2, 1): 3, (0, 1): -4, (0, 0): 7}
    assert parse_polynomial("0", 1).is_zero()
    assert parse_polynomial("  -  X1 ", 1).terms == {(1,): -1}


def test_parse_parentheses_and_power():
    f = parse_polynomial("(X1 + 1)^3", 1)
    assert f.terms == {(3,): 1, (2,): 3, (1,): 3, (0,): 1}
    g = parse_polynomial("2*(X1 - X2)*(X1 + X2)", 2)
    assert g.terms == {(2, 0): 2, (0, 2): -2}


def test_parse_implicit_coefficient_forms():
    assert parse_polynomial("-3", 1).terms == {(0,): -3}
    assert parse_polynomial("X1 - -2", 1).terms == {(1,): 1, (0,): 2}
    assert parse_polynomial("5^2", 1).terms == {(0,): 25}


def test_parse_whitespace_insensitive():
    a = parse_polynomial("3*X1^2*X2-4*X2+7", 2)
    b = parse_polynomial(" 3 * X1 ^ 2 * X2 - 4 * X2 + 7 ", 2)
    assert a == b


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as info:
        parse_polynomial("3*X1 + $", 1)
    assert info.value.position == 7
    with pytest.raises(ParseError) as info:
        parse_polynomial("X", 1)
    assert info.value.position == 0
    with pytest.raises(ParseError):
        parse_polynomial("X3", 2)
    with pytest.raises(ParseError):
        parse_polynomial("(X1 + 1", 1)
    with pytest.raises(ParseError):
        parse_polynomial("X1 + ", 1)
    with pytest.raises(ParseError):
        parse_polynomial("X1 X2", 2)
    with pytest.raises(ParseError):
        parse_polynomial("X1 ^ X2", 2)


def test_parse_other_domains():
    f = parse_polynomial("3*X1 + 4", 1, dom=GF(3))
    assert f.terms == {(0,): 1}
    g = parse_polynomial("2*X1 - 2", 1, dom=QQ)
    assert g.dom is QQ


def test_format_round_trip_random():
    rng = random.Random(99)
    for _ in range(300):
        n = rng.randint(1, 3)
        f = rand_poly(rng, n, 5, 7, 99)
        s = format_polynomial(f)
        assert parse_polynomial(s, n) == f


def test_format_style():
    f = Polynomial.from_terms(ZZ, 2, [((2, 1), 3), ((0, 1), -4), ((0, 0), 7)])
    assert format_polynomial(f) == "3*X1^2*X2 - 4*X2 + 7"
    assert format_polynomial(Polynomial.zero(ZZ, 2)) == "0"
    neg = Polynomial.from_terms(ZZ, 1, [((1,), -1)])
    assert format_polynomial(neg) == "-X1"
