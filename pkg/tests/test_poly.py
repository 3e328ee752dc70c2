import math
import random
from fractions import Fraction

import pytest

from polyz.domains import GF, QQ, ZZ
from polyz.errors import (
    ExponentBlowup,
    InputError,
    NonConstantLeading,
    NoVariables,
    Zero,
)
from polyz.poly import (
    Height,
    Polynomial,
    content_primitive,
    exact_div_poly,
    height_q,
    linear_change,
    pseudo_div_xn,
    reduce_mod_p,
    regular_xn_degree,
    translate_te,
)

NEG_INF = float("-inf")


def P(n, terms, dom=ZZ):
    return Polynomial.from_terms(dom, n, terms.items())


def rand_poly(rng, n, dmax, tmax, cmax, dom=ZZ):
    items = []
    for _ in range(rng.randint(0, tmax)):
        e = tuple(rng.randint(0, dmax) for _ in range(n))
        if sum(e) <= dmax:
            items.append((e, rng.randint(-cmax, cmax)))
    return Polynomial.from_terms(dom, n, items)


def test_degrees_examples():
    f = P(2, {(2, 1): 3, (0, 1): -4})
    assert f.degrees() == (3, (2, 1))
    z = Polynomial.zero(ZZ, 2)
    assert z.degrees() == (NEG_INF, (NEG_INF, NEG_INF))
    c = Polynomial.const(ZZ, 2, 7)
    assert c.degrees() == (0, (0, 0))


def test_from_terms_normalizes():
    f = Polynomial.from_terms(ZZ, 1, [((0,), 3), ((0,), -3), ((1,), 0)])
    assert f.is_zero()
    g = Polynomial.from_terms(ZZ, 1, [((1,), 2), ((1,), 3)])
    assert g.terms == {(1,): 5}


def test_split_xn_examples():
    f = P(2, {(1, 2): 1, (2, 0): 1})
    parts = f.split_xn()
    assert [g.to_str() for g in parts] == ["X1^2", "0", "X1"]
    assert Polynomial.zero(ZZ, 2).split_xn() == []
    g = P(2, {(0, 3): 2, (0, 2): 1, (1, 0): 1})
    assert [h.to_str() for h in g.split_xn()] == ["X1", "0", "1", "2"]
    back = Polynomial.from_xn_coeffs(ZZ, 2, g.split_xn())
    assert back == g


def test_split_xn_zero_variables():
    with pytest.raises(NoVariables):
        Polynomial.const(ZZ, 0, 5).split_xn()


def test_split_reassemble_random():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 3)
        f = rand_poly(rng, n, 5, 6, 9)
        parts = f.split_xn()
        assert Polynomial.from_xn_coeffs(ZZ, n, parts) == f
        for g in parts:
            if g.terms:
                assert g.degree() <= f.degree()


def test_translate_te_examples():
    x1 = Polynomial.var(ZZ, 2, 0)
    assert translate_te(x1, 2) == P(2, {(1, 0): 1, (0, 2): 1})
    x2 = Polynomial.var(ZZ, 2, 1)
    assert translate_te(x2, 2) == x2
    assert translate_te(x2, 5) == x2


def test_translate_te_round_trip_and_hom():
    rng = random.Random(22)
    for _ in range(60):
        n = rng.randint(1, 3)
        e = rng.randint(2, 4)
        f = rand_poly(rng, n, 3, 5, 6)
        g = rand_poly(rng, n, 3, 5, 6)
        tf = translate_te(f, e)
        assert translate_te(tf, e, inverse=True) == f
        assert translate_te(f * g, e) == tf * translate_te(g, e)
        assert translate_te(f + g, e) == tf + translate_te(g, e)


def test_translate_te_cap(monkeypatch):
    monkeypatch.setenv("POLYZ_TE_CAP", "10")
    f = P(3, {(4, 0, 0): 1})
    with pytest.raises(ExponentBlowup):
        translate_te(f, 4)


def test_regular_xn_degree_examples():
    f = P(2, {(0, 3): 2, (0, 2): 1, (1, 0): 1})
    assert regular_xn_degree(f, 2) == 2
    assert regular_xn_degree(P(2, {(0, 1): 2}), 2) is None
    t = translate_te(Polynomial.var(ZZ, 2, 0), 2)
    s = regular_xn_degree(t, 2)
    assert s == 2
    assert s < 2**2


def test_regularity_after_translation_random():
    rng = random.Random(33)
    hits = 0
    for _ in range(250):
        n = rng.randint(1, 3)
        p = rng.choice([2, 3, 5])
        e = rng.randint(2, 4)
        f = rand_poly(rng, n, e - 1, 4, 6)
        if reduce_mod_p(f, p).is_zero():
            continue
        s = regular_xn_degree(translate_te(f, e), p)
        assert s is not None
        assert s < e**n
        hits += 1
    assert hits > 100


def test_pseudo_div_xn_examples():
    f = P(2, {(0, 2): 1})
    g = P(2, {(0, 1): 2, (1, 0): -1})
    k, q, r = pseudo_div_xn(f, g)
    assert k == 2
    assert q == P(2, {(0, 1): 2, (1, 0): 1})
    assert r == P(2, {(2, 0): 1})
    assert f.scale(2**k) == q * g + r

    low = P(2, {(1, 0): 5})
    assert pseudo_div_xn(low, g) == (0, Polynomial.zero(ZZ, 2), low)

    monic = P(2, {(0, 1): 1, (1, 0): 3})
    k2, q2, r2 = pseudo_div_xn(f, monic)
    assert k2 == 0
    assert f == q2 * monic + r2


def test_pseudo_div_xn_errors():
    f = P(2, {(0, 2): 1})
    with pytest.raises(Zero):
        pseudo_div_xn(f, Polynomial.zero(ZZ, 2))
    with pytest.raises(NonConstantLeading):
        pseudo_div_xn(f, P(2, {(1, 1): 1}))


def test_pseudo_div_xn_random():
    rng = random.Random(44)
    for _ in range(200):
        n = rng.randint(1, 3)
        f = rand_poly(rng, n, 4, 5, 6)
        items = [(tuple([0] * (n - 1) + [rng.randint(1, 2)]), rng.choice([1, 2, 3, -2]))]
        items += [(tuple(rng.randint(0, 1) for _ in range(n)), rng.randint(-3, 3))]
        g = Polynomial.from_terms(ZZ, n, items)
        if g.is_zero() or not g.split_xn()[g.degree_xn()].is_constant():
            continue
        c = g.split_xn()[g.degree_xn()].constant_value()
        k, q, r = pseudo_div_xn(f, g)
        assert f.scale(c**k) == q * g + r
        if r.terms:
            assert r.degree_xn() < g.degree_xn()


def test_content_primitive_examples():
    f = P(1, {(1,): 6, (0,): 4})
    assert content_primitive(f) == (2, P(1, {(1,): 3, (0,): 2}))
    assert content_primitive(Polynomial.const(ZZ, 1, -3)) == (3, Polynomial.const(ZZ, 1, -1))
    g = P(2, {(1, 1): 5})
    assert content_primitive(g) == (5, P(2, {(1, 1): 1}))
    with pytest.raises(Zero):
        content_primitive(Polynomial.zero(ZZ, 1))


def test_height_q_examples():
    assert math.isclose(height_q([2]).log_value, math.log(2))
    assert height_q([1]).log_value == 0.0
    assert math.isclose(height_q([Fraction(1, 2)]).log_value, math.log(2))
    h = height_q([Fraction(1, 2), Fraction(3)])
    assert h.den_lcm == 2 and h.max_abs == 3
    assert math.isclose(h.log_value, math.log(6))


def test_height_q_properties_random():
    rng = random.Random(55)
    for _ in range(200):
        a = Fraction(rng.randint(1, 99), rng.randint(1, 99))
        b = Fraction(rng.randint(1, 99), rng.randint(1, 99))
        assert math.isclose(height_q([a]).log_value, height_q([1 / a]).log_value)
        assert height_q([a * b]).log_value <= height_q([a]).log_value + height_q([b]).log_value + 1e-9
        assert height_q([a + b]).log_value <= height_q([a, b]).log_value + math.log(2) + 1e-9


def test_linear_change_examples():
    f = P(2, {(1, 1): 1})
    assert linear_change(f, [1]) == P(2, {(1, 1): 1, (0, 2): 1})
    g = P(2, {(2, 0): 1})
    gg = linear_change(g, [1])
    assert gg == P(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert gg.split_xn()[2] == Polynomial.one(ZZ, 1)


def test_linear_change_round_trip_random():
    rng = random.Random(66)
    for _ in range(150):
        n = rng.randint(1, 3)
        f = rand_poly(rng, n, 4, 5, 6)
        c = [rng.randint(-3, 3) for _ in range(n - 1)]
        assert linear_change(linear_change(f, c), c, inverse=True) == f


def test_linear_change_wrong_length():
    with pytest.raises(InputError):
        linear_change(P(2, {(1, 0): 1}), [1, 2])


def test_ring_axioms_random():
    rng = random.Random(77)
    for dom in (ZZ, QQ, GF(5)):
        for _ in range(60):
            n = rng.randint(1, 2)
            f = rand_poly(rng, n, 3, 4, 5, dom)
            g = rand_poly(rng, n, 3, 4, 5, dom)
            h = rand_poly(rng, n, 3, 4, 5, dom)
            assert (f + g) + h == f + (g + h)
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h
            assert f + g == g + f
            assert f * g == g * f


def test_exact_div_poly():
    rng = random.Random(88)
    for _ in range(100):
        n = rng.randint(1, 2)
        f = rand_poly(rng, n, 3, 4, 5)
        g = rand_poly(rng, n, 2, 3, 4)
        if g.is_zero():
            continue
        assert exact_div_poly(f * g, g) == f
    f = Polynomial.var(ZZ, 1, 0)
    two = Polynomial.const(ZZ, 1, 2)
    assert exact_div_poly(f, two) is None
    assert exact_div_poly(f + 1, f) is None


def test_power():
    x = Polynomial.var(ZZ, 1, 0)
    f = x + 1
    assert f**0 == Polynomial.one(ZZ, 1)
    assert f**3 == P(1, {(3,): 1, (2,): 3, (1,): 3, (0,): 1})


def test_height_object():
    h = Height(3, Fraction(7))
    assert math.isclose(float(h), math.log(3) + math.log(7))
