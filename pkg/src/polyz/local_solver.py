"""Local solver at a prime p: generators u^(1..n-r) from a minimum-valuation
minor plus a Kronecker-translation recursion, yielding vectors in Z[X]^n that
generate the solution module of A y = 0 over the p-adic completion of
Z_(p)[X]. Combined with the field generators they generate the solutions
over Z_(p)[X] itself.

Every recursion level certifies: the minor's adjugate entries have valuation
at least mu, the translated determinant divided by p^mu is regular in X_N of
degree s < e^N, the level's e respects the recursion bound, and all output
degrees respect the flatness bound.
"""

import math

from . import gauss, limits
from .arith import INF
from .bounds import e_level_bound, flat_bound
from .domains import ZZ
from .errors import InputError, InvariantViolation, MixedSystems, ResourceLimit
from .linalg import PolyMatrix, min_valuation_minor, montante_adjugate, poly_vp, rank_profile
from .poly import Polynomial, regular_xn_degree, translate_te


class LocalSyzygyBasis:
    """Generators over Z[X] of the completed local solution module, with one
    certification record per recursion level."""

    __slots__ = ("gens", "ncols", "nvars", "p", "records")

    def __init__(self, gens, ncols, nvars, p, records):
        self.gens = gens
        self.ncols = ncols
        self.nvars = nvars
        self.p = p
        self.records = records

    def max_degree(self):
        top = float("-inf")
        for y in self.gens:
            for f in y:
                top = max(top, f.degree())
        return top


def _verify_zero(A, y):
    for v in A.mul_vec(y):
        if v.terms:
            raise InvariantViolation("local generator does not solve A y = 0")


def _total_degree(A):
    d = 0
    for row in A.rows:
        for f in row:
            if f.terms:
                d = max(d, f.degree())
    return d


def _xn_degree(A):
    d = 0
    for row in A.rows:
        for f in row:
            if f.terms:
                d = max(d, f.degree_xn())
    return d


def _check_flat(A, gens):
    if not gens:
        return
    bound = flat_bound(A.nvars, max(_total_degree(A), 1), max(A.m, 1))
    for y in gens:
        for f in y:
            if f.terms and f.degree() > bound:
                raise InvariantViolation(
                    f"degree {f.degree()} exceeds the flatness bound {bound}"
                )


def _unit_vectors(n, nvars):
    out = []
    for j in range(n):
        y = [Polynomial.zero(ZZ, nvars) for _ in range(n)]
        y[j] = Polynomial.one(ZZ, nvars)
        out.append(y)
    return out


def _div_pmu(f, p, mu):
    if mu == 0:
        return f
    q = p ** mu
    terms = {}
    for e, c in f.terms.items():
        if c % q:
            raise InvariantViolation("valuation below mu in minor data")
        terms[e] = c // q
    return Polynomial(ZZ, f.n, terms)


def _constant_case(A, p, record):
    """Kernel generators for a constant integer matrix: special solutions
    scaled by p^-mu at small size, an integer kernel lattice basis beyond."""
    n = A.nc
    rows = [{j: f.constant_value() for j, f in enumerate(row) if f.terms} for row in A.rows]
    r = gauss.rank_q(rows, n)
    record["rank"] = r
    if r == n:
        record["method"] = "full-rank"
        return []
    if n > limits.local_minor_dim():
        record["method"] = "lattice"
        basis = gauss.kernel_lattice_at_p(rows, n, p)
        if len(basis) != n - r:
            raise InvariantViolation("kernel lattice dimension mismatch")
        modp = [{j: v % p for j, v in enumerate(vec) if v % p} for vec in basis]
        if gauss.rank_mod(modp, n, p) != n - r:
            raise InvariantViolation("kernel lattice basis drops rank mod p")
        return [[Polynomial.const(ZZ, A.nvars, v) for v in vec] for vec in basis]
    record["method"] = "minor"
    sel_rows, sel_cols, delta, mu = min_valuation_minor(A, p, r)
    record["mu"] = mu
    sub = A.submatrix(sel_rows, list(range(n)))
    delta2, R = montante_adjugate(sub, sel_cols)
    if poly_vp(delta2, p) != mu:
        raise InvariantViolation("adjugate pass changed the minor valuation")
    for i in range(r):
        for c in R[i]:
            if poly_vp(c, p) < mu:
                raise InvariantViolation("adjugate entry valuation below mu")
    free = [j for j in range(n) if j not in set(sel_cols)]
    du = _div_pmu(delta2, p, mu)
    gens = []
    for t, l in enumerate(free):
        y = [Polynomial.zero(ZZ, A.nvars) for _ in range(n)]
        y[l] = du
        for i, pc in enumerate(sel_cols):
            y[pc] = -_div_pmu(R[i][t], p, mu)
        gens.append(y)
    return gens


def _local_rec(A, p, records, top, nu):
    N = A.nvars
    n = A.nc
    record = {"nvars": N, "rows": A.m, "cols": n, "nu": nu}
    records.append(record)
    if n == 0:
        record["rank"] = 0
        record["method"] = "empty"
        return []
    if A.is_zero():
        record["rank"] = 0
        record["method"] = "zero"
        return _unit_vectors(n, N)
    degA = _total_degree(A)
    record["deg"] = degA
    if N == 0 or degA == 0:
        if N == 0:
            gens = _constant_case(A, p, record)
        else:
            flat = PolyMatrix(ZZ, 0, [[Polynomial.const(ZZ, 0, f.constant_value()) for f in row] for row in A.rows])
            zero_gens = _constant_case(flat, p, record)
            gens = [[Polynomial.const(ZZ, N, f.constant_value()) for f in y] for y in zero_gens]
        for y in gens:
            _verify_zero(A, y)
        _check_flat(A, gens)
        return gens
    cells = A.m * n * math.comb(min(A.m, n) * degA + N, N)
    if cells > limits.local_work():
        raise ResourceLimit(
            f"local elimination projects {cells} dense cells, over the configured cap"
        )
    r, _, _ = rank_profile(A)
    record["rank"] = r
    if r == n:
        record["method"] = "full-rank"
        return []
    sel_rows, sel_cols, _, mu = min_valuation_minor(A, p, r)
    record["mu"] = mu
    record["minor_rows"] = list(sel_rows)
    record["minor_cols"] = list(sel_cols)
    sub = A.submatrix(sel_rows, list(range(n)))
    delta, R = montante_adjugate(sub, sel_cols)
    if poly_vp(delta, p) != mu:
        raise InvariantViolation("adjugate pass changed the minor valuation")
    for i in range(r):
        for c in R[i]:
            if poly_vp(c, p) < mu:
                raise InvariantViolation("adjugate entry valuation below mu")
    free = [j for j in range(n) if j not in set(sel_cols)]
    du = _div_pmu(delta, p, mu)
    specials = []
    for t, l in enumerate(free):
        y = [Polynomial.zero(ZZ, N) for _ in range(n)]
        y[l] = du
        for i, pc in enumerate(sel_cols):
            y[pc] = -_div_pmu(R[i][t], p, mu)
        specials.append(y)
    if delta.is_constant():
        record["method"] = "unit-minor"
        for y in specials:
            _verify_zero(A, y)
        _check_flat(A, specials)
        return specials
    record["method"] = "translate"
    e = r * degA + 1
    record["e"] = e
    ebound = e_level_bound(min(nu, top[2]), top[2], max(top[1], 1), max(top[0], 1))
    record["e_bound"] = str(ebound)
    if e > ebound:
        raise InvariantViolation(f"level exponent e={e} exceeds the recursion bound {ebound}")
    B = PolyMatrix(ZZ, N, [[translate_te(f, e) for f in sub.rows[i]] for i in range(r)])
    eps = _div_pmu(translate_te(delta, e), p, mu)
    s = regular_xn_degree(eps, p)
    record["s"] = s
    if s is None or s >= e ** N:
        raise InvariantViolation("translated determinant is not regular of degree < e^N")
    d = _xn_degree(B)
    record["d_xn"] = d
    if d < 1 or d >= e ** N:
        raise InvariantViolation("translated matrix degree out of the certified range")
    window = r * d
    slices = (r + 1) * d
    record["window"] = window
    zero2 = Polynomial.zero(ZZ, N - 1)
    tables = [[f.split_xn() for f in B.rows[i]] for i in range(r)]
    rows2 = []
    for table in tables:
        for t in range(slices):
            row = []
            for j in range(n):
                cj = table[j]
                for k in range(window):
                    idx = t - k
                    row.append(cj[idx] if 0 <= idx < len(cj) else zero2)
            rows2.append(row)
    rows2 = [row for row in rows2 if any(f.terms for f in row)]
    A2 = PolyMatrix(ZZ, N - 1, rows2, ncols=n * window)
    record["derived_rows"] = A2.m
    sub_gens = _local_rec(A2, p, records, top, nu + 1)
    gens = list(specials)
    for z in sub_gens:
        y = []
        for j in range(n):
            acc = Polynomial.zero(ZZ, N)
            for k in range(window):
                f = z[j * window + k]
                if f.terms:
                    acc = acc + f.lift_var().shift_xn(k)
            y.append(acc)
        gens.append([translate_te(f, e, inverse=True) for f in y])
    for y in gens:
        _verify_zero(A, y)
    _check_flat(A, gens)
    return gens


def syzygy_local(A, p):
    """Generators of the local solution module of A y = 0 at the prime p.

    Returns Z[X]-vectors generating Sol over the p-adic completion; together
    with field generators they generate Sol over Z_(p)[X].
    """
    if A.dom is not ZZ:
        raise InputError("syzygy_local works on integer matrices")
    records = []
    top = (A.m, _total_degree(A), A.nvars)
    gens = _local_rec(A, p, records, top, 0)
    for y in gens:
        _verify_zero(A, y)
    _check_flat(A, gens)
    return LocalSyzygyBasis(gens, A.nc, A.nvars, p, records)


def combine_generators(field_gens, local_basis):
    """Union of cleared field generators and local generators; generates the
    solution module over Z_(p)[X]."""
    out = []
    seen = set()
    for y in list(field_gens) + list(local_basis.gens):
        if len(y) != local_basis.ncols:
            raise MixedSystems("generator length does not match the system")
        for f in y:
            if f.dom is not ZZ or f.n != local_basis.nvars:
                raise MixedSystems("generators from different rings cannot be combined")
        key = tuple(tuple(sorted(f.terms.items())) for f in y)
        if key not in seen:
            seen.add(key)
            out.append(y)
    return out
