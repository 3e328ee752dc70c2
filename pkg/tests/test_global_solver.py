import random

import pytest

from polyz import (
    InputError,
    NotPrime,
    Polynomial,
    PolyMatrix,
    ZeroMatrix,
    ZZ,
    bezout_local,
    bezout_z,
    denominator_delta,
    member_z,
    module_colon,
    module_intersect,
    module_saturate,
    parse_polynomial,
    power_cofactors,
    solve_linear_z,
    syzygy_bounded_z,
    syzygy_z,
)


def P(text, n=1):
    return parse_polynomial(text, n)


def row_matrix(texts, n=1):
    return PolyMatrix(ZZ, n, [[P(t, n) for t in texts]])


def columns(vectors, mdim, n):
    rows = [[vectors[k][i] for k in range(len(vectors))] for i in range(mdim)]
    return PolyMatrix(ZZ, n, rows, ncols=len(vectors))


def in_z_span(v, gens):
    if not gens:
        return all(f.is_zero() for f in v)
    A = columns(gens, len(v), v[0].n)
    return solve_linear_z(A, list(v)) is not None


def ideal_contains(gens, f):
    return member_z(f, gens) is not None


def ideals_equal(gens_a, gens_b):
    return all(ideal_contains(gens_b, f) for f in gens_a) and all(
        ideal_contains(gens_a, f) for f in gens_b
    )


def rand_poly(rng, n, deg, coeff, terms=3):
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, deg) for _ in range(n))
        if sum(e) > deg:
            continue
        c = rng.randint(-coeff, coeff)
        if c:
            out[e] = out.get(e, 0) + c
    return Polynomial.from_terms(ZZ, n, out.items())


def test_member_examples():
    cert = member_z(P("1"), [P("1 - 2*X1"), P("8*X1")])
    assert cert is not None
    assert cert.verify()
    assert cert.mode == "membership"

    assert member_z(P("X1"), [P("2*X1"), P("X1^2")]) is None
    assert member_z(P("2"), [P("6"), P("2*X1 + 4")]) is None

    f = P("3*X1^2 - X1 + 5")
    cert = member_z(f, [f, P("X1 + 1")])
    assert cert is not None
    assert cert.verify()


def test_member_explain_reasons():
    cert, reason = member_z(P("X1"), [P("2*X1"), P("X1^2")], explain=True)
    assert cert is None
    assert reason == "no solution over the integers localized at 2"

    cert, reason = member_z(P("2"), [P("6"), P("2*X1 + 4")], explain=True)
    assert cert is None
    assert reason == "no solution over the integers localized at 3"

    cert, reason = member_z(P("X1"), [P("X1^2")], explain=True)
    assert cert is None
    assert reason == "rank over Q"

    cert, reason = member_z(P("1"), [P("1 - 2*X1"), P("8*X1")], explain=True)
    assert cert is not None and reason is None


def test_member_degenerate_inputs():
    zero = P("0")
    cert = member_z(zero, [P("X1"), P("2")])
    assert cert is not None
    assert all(g.is_zero() for g in cert.cofactors)
    assert cert.verify()

    assert member_z(P("1"), []) is None
    assert member_z(P("X1"), [zero, zero]) is None
    with pytest.raises(InputError):
        member_z(P("X1"), [P("X1 + X2", 2)])


def test_member_certificate_dict_shape():
    cert = member_z(P("1"), [P("1 - 2*X1"), P("8*X1")])
    d = cert.to_dict()
    assert d["mode"] == "membership"
    assert d["target"] == "1"
    assert len(d["cofactors"]) == 2
    assert d["generators"] == ["-2*X1 + 1", "8*X1"]


def test_solve_linear_examples():
    A = PolyMatrix(ZZ, 1, [[P("1"), P("0")], [P("0"), P("2")]])
    b = [P("X1"), P("4*X1")]
    cert = solve_linear_z(A, b)
    assert cert is not None
    assert cert.verify()
    got = A.mul_vec(cert.cofactors)
    assert all((g - w).is_zero() for g, w in zip(got, b))

    cert, reason = solve_linear_z(row_matrix(["2"]), [P("X1")], explain=True)
    assert cert is None
    assert reason == "no solution over the integers localized at 2"

    A = PolyMatrix(ZZ, 1, [[P("1")], [P("1")]])
    cert, reason = solve_linear_z(A, [P("1"), P("2")], explain=True)
    assert cert is None
    assert reason == "rank over Q"


def test_solve_linear_zero_rhs_and_checks():
    A = row_matrix(["X1", "3"])
    cert = solve_linear_z(A, [P("0")])
    assert cert is not None
    assert all(g.is_zero() for g in cert.cofactors)
    assert cert.verify()

    with pytest.raises(InputError):
        solve_linear_z(A, [P("1"), P("2")])
    with pytest.raises(InputError):
        solve_linear_z(A, [P("X1 + X2", 2)])


def test_syzygy_z_spans_pinned_kernels():
    A = row_matrix(["X1", "X2"], 2)
    basis = syzygy_z(A)
    for y in basis.gens:
        assert all(f.is_zero() for f in A.mul_vec(y))
    assert in_z_span([P("X2", 2), P("-X1", 2)], basis.gens)

    A = row_matrix(["2", "X1"])
    basis = syzygy_z(A)
    for y in basis.gens:
        assert all(f.is_zero() for f in A.mul_vec(y))
    assert in_z_span([P("X1"), P("-2")], basis.gens)
    assert basis.delta % 2 == 0
    assert set(basis.provenance) <= {"field"} | {f"local:{p}" for p in (2, 3, 5, 7)}


def test_syzygy_z_zero_matrix():
    A = PolyMatrix(ZZ, 1, [[P("0"), P("0")]])
    basis = syzygy_z(A)
    keys = sorted(tuple(str(f.terms) for f in y) for y in basis.gens)
    assert len(basis.gens) == 2
    assert basis.delta == 1
    one = Polynomial.one(ZZ, 1)
    zero = Polynomial.zero(ZZ, 1)
    assert [one, zero] in basis.gens
    assert [zero, one] in basis.gens
    assert keys == sorted(keys)


def test_syzygy_z_provenance_and_max_degree():
    A = row_matrix(["2*X1", "X1^2", "4"])
    basis = syzygy_z(A)
    assert len(basis.provenance) == len(basis.gens)
    assert basis.max_degree() >= 1
    for tag in basis.provenance:
        assert tag == "field" or tag.startswith("local:")
    for y in basis.gens:
        assert all(f.is_zero() for f in A.mul_vec(y))


def test_denominator_delta_property():
    A = row_matrix(["2*X1", "X1^2"])
    from polyz import syzygy_field
    from polyz.domains import QQ

    fb = syzygy_field(A.to_domain(QQ))
    from polyz.global_solver import _clear_vector_z

    field_gens = [_clear_vector_z(v) for v in fb.gens]
    delta = denominator_delta(A)
    assert delta >= 1
    oracle = syzygy_bounded_z(A, 3)
    for w in oracle:
        scaled = [f.scale(delta) for f in w]
        assert in_z_span(scaled, field_gens)


def test_denominator_delta_unit_case():
    A = row_matrix(["1", "X1"])
    assert denominator_delta(A) == 1
    with pytest.raises(ZeroMatrix):
        denominator_delta(PolyMatrix(ZZ, 1, [[P("0")]]))


def test_power_cofactors_examples():
    ss = power_cofactors([P("1")], [P("1 - 2*X1")], 2)
    assert ss == [P("1 + 2*X1")]
    ss = power_cofactors([P("1")], [P("1 - 3*X1")], 2)
    assert ss == [P("1 + 3*X1")]
    rs = [P("X1"), P("2")]
    assert power_cofactors(rs, [P("3"), P("X1^2")], 1) == rs
    with pytest.raises(InputError):
        power_cofactors([P("1")], [P("1")], 0)
    with pytest.raises(InputError):
        power_cofactors([P("1")], [P("1"), P("2")], 2)


def test_power_cofactors_identity_random():
    rng = random.Random(20)
    one = Polynomial.one(ZZ, 1)
    for _ in range(40):
        n = rng.randint(1, 3)
        rs = [rand_poly(rng, 1, 2, 2) for _ in range(n)]
        fs = [rand_poly(rng, 1, 2, 2) for _ in range(n)]
        e = rng.randint(1, 4)
        ss = power_cofactors(rs, fs, e)
        q = one
        for r, f in zip(rs, fs):
            q = q - r * f
        lhs = one - q ** e
        rhs = Polynomial.zero(ZZ, 1)
        for s, f in zip(ss, fs):
            rhs = rhs + s * f
        assert (lhs - rhs).is_zero()


def test_bezout_local_examples():
    cert = bezout_local([P("1 - 2*X1"), P("8*X1")], 2)
    assert cert is not None
    assert cert.verify()
    assert cert.denominator % 2 == 1

    assert bezout_local([P("2"), P("X1")], 2) is None

    cert = bezout_local([P("3"), P("X1")], 2)
    assert cert is not None
    assert cert.denominator == 3
    assert cert.cofactors == [P("1"), P("0")]

    with pytest.raises(NotPrime):
        bezout_local([P("3")], 4)
    assert bezout_local([], 2) is None


def test_bezout_z_examples():
    cert = bezout_z([P("3"), P("X1 + 1"), P("X1 - 1")])
    assert cert is not None
    assert cert.verify()
    acc = Polynomial.zero(ZZ, 1)
    for g, f in zip(cert.cofactors, cert.generators):
        acc = acc + g * f
    assert acc == P("1")

    assert bezout_z([P("2"), P("X1")]) is None

    cert = bezout_z([P("1 - 2*X1"), P("8*X1")])
    assert cert is not None
    assert cert.verify()
    assert cert.mode == "bezout"


def test_bezout_member_duality():
    rng = random.Random(21)
    one = P("1")
    for _ in range(25):
        n = rng.randint(1, 3)
        fs = [rand_poly(rng, 1, 2, 3) for _ in range(n)]
        if all(f.is_zero() for f in fs):
            continue
        b = bezout_z(fs)
        m = member_z(one, fs)
        assert (b is None) == (m is None)
        if b is not None:
            assert b.verify() and m.verify()


def test_module_intersect_pinned():
    two = [[P("2")]]
    x1 = [[P("X1")]]
    got = module_intersect(two, x1)
    want = [P("2*X1")]
    assert ideals_equal([v[0] for v in got], want)

    got = module_intersect([[P("X1", 2)]], [[P("X2", 2)]])
    assert ideals_equal([v[0] for v in got], [P("X1*X2", 2)])


def test_module_intersect_self_and_empty():
    gens = [[P("2")], [P("X1")]]
    got = module_intersect(gens, gens)
    assert ideals_equal([v[0] for v in got], [v[0] for v in gens])
    assert module_intersect([], gens) == []
    with pytest.raises(InputError):
        module_intersect([[P("1")]], [[P("1"), P("2")]])


def test_module_colon_pinned():
    got = module_colon([[P("2*X1")]], [[P("X1")]])
    assert ideals_equal(got, [P("2")])

    got = module_colon([[P("X1")]], [[P("X1")]])
    assert ideals_equal(got, [P("1")])

    got = module_colon([[P("4")]], [[P("2")]])
    assert ideals_equal(got, [P("2")])

    got = module_colon([[P("X1")]], [], nvars=1)
    assert got == [P("1")]


def test_module_saturate_pinned():
    got = module_saturate([[P("2*X1")], [P("X1^2")]])
    assert ideals_equal([v[0] for v in got], [P("X1")])

    got = module_saturate([[P("X1")]])
    assert ideals_equal([v[0] for v in got], [P("X1")])

    got = module_saturate([[P("2")]])
    assert ideals_equal([v[0] for v in got], [P("1")])
    assert module_saturate([]) == []


def test_module_ops_vector_ambient():
    a = [[P("2"), P("0")], [P("0"), P("X1")]]
    b = [[P("2"), P("0")], [P("0"), P("2")]]
    got = module_intersect(a, b)
    for v in got:
        assert in_z_span(v, a)
        assert in_z_span(v, b)
    assert in_z_span([P("2"), P("0")], got)


def test_member_random_vs_oracle():
    from polyz import member_bounded_z

    rng = random.Random(22)
    agree = 0
    for _ in range(60):
        nv = rng.randint(1, 2)
        m = rng.randint(1, 3)
        fs = [rand_poly(rng, nv, 2, 3) for _ in range(m)]
        if all(f.is_zero() for f in fs):
            continue
        f0 = rand_poly(rng, nv, 2, 3)
        cert = member_z(f0, fs)
        oracle = member_bounded_z(f0, fs, 4)
        if oracle is not None:
            assert cert is not None, f"oracle found {oracle}, decision says absent"
        if cert is not None:
            assert cert.verify()
            agree += 1
    assert agree >= 10
