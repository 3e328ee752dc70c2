import random

import pytest

from polyz.bounds import flat_bound
from polyz.domains import QQ, ZZ
from polyz.errors import MixedSystems, ResourceLimit
from polyz.field_solver import syzygy_field
from polyz.global_solver import _clear_vector_z
from polyz.linalg import PolyMatrix
from polyz.local_solver import LocalSyzygyBasis, combine_generators, syzygy_local
from polyz.poly import Polynomial
from polyz.text import parse_polynomial


def P(s, n):
    return parse_polynomial(s, n)


def row_matrix(strs, n):
    return PolyMatrix(ZZ, n, [[P(s, n) for s in strs]])


def rand_poly(rng, n, dmax, tmax, cmax):
    items = []
    for _ in range(rng.randint(1, tmax)):
        e = tuple(rng.randint(0, dmax) for _ in range(n))
        if sum(e) <= dmax:
            items.append((e, rng.randint(-cmax, cmax)))
    return Polynomial.from_terms(ZZ, n, items)


def test_syzygy_local_examples():
    A = row_matrix(["2", "X1"], 1)
    basis = syzygy_local(A, 2)
    assert basis.p == 2
    assert basis.gens
    for y in basis.gens:
        assert all(f.is_zero() for f in A.mul_vec(y))
    # (X1, -2) generates: every generator's second entry has even coefficients
    for y in basis.gens:
        for c in y[1].terms.values():
            assert c % 2 == 0

    B = row_matrix(["5"], 1)
    assert syzygy_local(B, 5).gens == []

    Cm = row_matrix(["1", "X1"], 1)
    basis3 = syzygy_local(Cm, 3)
    assert basis3.gens
    for y in basis3.gens:
        assert all(f.is_zero() for f in Cm.mul_vec(y))
    # unit entry: delta is a unit, mu = 0 at the top level
    assert basis3.records[0]["mu"] == 0


def test_syzygy_local_zero_matrix():
    A = PolyMatrix(ZZ, 1, [[Polynomial.zero(ZZ, 1), Polynomial.zero(ZZ, 1)]])
    basis = syzygy_local(A, 2)
    assert len(basis.gens) == 2
    assert basis.records[0]["method"] == "zero"


def test_syzygy_local_records_and_bounds():
    A = row_matrix(["2*X1 + 4", "X1^2", "6"], 1)
    basis = syzygy_local(A, 2)
    assert isinstance(basis, LocalSyzygyBasis)
    degA = max(1, int(A.max_degree()))
    bound = flat_bound(A.nvars, degA, A.m)
    for y in basis.gens:
        assert all(f.is_zero() for f in A.mul_vec(y))
        for f in y:
            if f.terms:
                assert f.degree() <= bound
    for rec in basis.records:
        assert {"nvars", "rows", "cols", "nu"} <= set(rec)
        if rec.get("method") == "translate":
            assert rec["s"] < rec["e"] ** rec["nvars"]


def test_syzygy_local_translate_regularity_sweep():
    rng = random.Random(73)
    translate_hits = 0
    for _ in range(40):
        n = rng.randint(1, 2)
        p = rng.choice([2, 3, 5])
        nc = rng.randint(2, 3)
        # two-row systems at N=2 can recurse into very large derived systems;
        # the translate assertions fire just as well on one-row ones
        rows = rng.randint(1, 2) if n == 1 else 1
        A = PolyMatrix(ZZ, n, [[rand_poly(rng, n, 2, 3, 4) for _ in range(nc)] for _ in range(rows)])
        if A.is_zero():
            continue
        basis = syzygy_local(A, p)
        for y in basis.gens:
            assert all(f.is_zero() for f in A.mul_vec(y))
        for rec in basis.records:
            if rec.get("method") == "translate":
                translate_hits += 1
                assert rec["s"] is not None
                assert rec["s"] < rec["e"] ** rec["nvars"]
                assert rec["e"] <= int(rec["e_bound"])
    assert translate_hits >= 1


def test_unit_minor_short_circuit():
    # a unimodular constant minor: delta = +/-1, special solutions complete
    A = row_matrix(["1", "X1 + 2"], 1)
    basis = syzygy_local(A, 2)
    assert basis.records[0]["method"] == "unit-minor"
    for y in basis.gens:
        assert all(f.is_zero() for f in A.mul_vec(y))


def test_local_work_cap(monkeypatch):
    monkeypatch.setenv("POLYZ_LOCAL_WORK", "5")
    A = row_matrix(["2*X1^2 + 3", "X1 + 1", "X1^2 - 2"], 1)
    with pytest.raises(ResourceLimit):
        syzygy_local(A, 2)


def test_combine_generators_dedup():
    A = row_matrix(["2", "X1"], 1)
    fb = syzygy_field(A.to_domain(QQ))
    field_gens = [_clear_vector_z(v) for v in fb.gens]
    lb = syzygy_local(A, 2)
    combined = combine_generators(field_gens, lb)
    keys = set()
    for y in combined:
        key = tuple(tuple(sorted(f.terms.items())) for f in y)
        assert key not in keys
        keys.add(key)
    for y in combined:
        assert all(f.is_zero() for f in A.mul_vec(y))


def test_combine_generators_empty_side():
    A = row_matrix(["2", "X1"], 1)
    lb = syzygy_local(A, 2)
    assert combine_generators([], lb) == lb.gens
    alone = combine_generators([[P("X1", 1), P("-2", 1)]], LocalSyzygyBasis([], 2, 1, 2, []))
    assert alone == [[P("X1", 1), P("-2", 1)]]


def test_combine_generators_mixed_systems():
    A = row_matrix(["2", "X1"], 1)
    lb = syzygy_local(A, 2)
    bad = [[P("1", 1)]]
    with pytest.raises(MixedSystems):
        combine_generators(bad, lb)


def test_local_completeness_proxy_n1():
    # N=1, one row: oracle kernel vectors whose p-saturation stays solving
    # must lie in the Z_(p)[X]-span of the combined generators. Span tested
    # via an integer solve after clearing one p power at a time.
    from polyz.global_solver import solve_linear_z
    from polyz.oracle import syzygy_bounded_z

    rng = random.Random(83)
    for p in (2, 3):
        for _ in range(12):
            nc = rng.randint(2, 3)
            A = PolyMatrix(ZZ, 1, [[rand_poly(rng, 1, 2, 3, 3) for _ in range(nc)]])
            if A.is_zero():
                continue
            fb = syzygy_field(A.to_domain(QQ))
            field_gens = [_clear_vector_z(v) for v in fb.gens]
            lb = syzygy_local(A, p)
            G = combine_generators(field_gens, lb)
            if not G:
                continue
            B = PolyMatrix(ZZ, 1, [[G[j][i] for j in range(len(G))] for i in range(nc)])
            for w in syzygy_bounded_z(A, 4)[:3]:
                # w in Z_(p)-span of G iff p^k * w in Z-span for some small k
                ok = False
                scaled = list(w)
                for _ in range(4):
                    if solve_linear_z(B, scaled) is not None:
                        ok = True
                        break
                    scaled = [f.scale(p) for f in scaled]
                assert ok
