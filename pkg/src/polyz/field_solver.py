"""Elimination solver over coefficient fields: generators of the solution
module of A y = 0 and single solutions of A y = b in F[X1..XN], by recursion
on the number of variables.

Each level picks a maximal nonsingular minor, reads off one special solution
per free column, makes the minor determinant unit-monic in X_N by a linear
change of variables, and converts the bounded-X_N-degree part of the solution
set into a derived system over one fewer variable. Over a finite prime field
the whole recursion runs over the infinite field F_p(T) and the result is
sliced back by powers of T.

Every public call verifies its outputs exactly and checks the elimination
degree bound with the call's own row count and degree.
"""

from itertools import count

from . import gauss
from .bounds import beta
from .domains import GF, QQ, FpRat, FpT, _u_divmod, _u_gcd, _u_mul
from .errors import (
    InputError,
    InvariantViolation,
    NoVariables,
    ResourceLimit,
)
from .linalg import PolyMatrix, montante_adjugate, rank_profile, reduce_to_s, special_solutions
from .poly import Polynomial, linear_change, pseudo_div_xn

_POINT_LIMIT = 1_000_000


class SolveTrace:
    """Per-run recursion data: the X_N-leading constants made unit-monic at
    each level (char-0 runs), base-case cleared denominators, and one record
    per recursion level."""

    __slots__ = ("constants", "levels")

    def __init__(self):
        self.constants = []
        self.levels = []


class FieldSyzygyBasis:
    """Generators of Sol_{F[X]}(A) plus the recursion trace."""

    __slots__ = ("gens", "ncols", "dom", "nvars", "trace")

    def __init__(self, gens, ncols, dom, nvars, trace):
        self.gens = gens
        self.ncols = ncols
        self.dom = dom
        self.nvars = nvars
        self.trace = trace

    def max_degree(self):
        top = float("-inf")
        for y in self.gens:
            for f in y:
                top = max(top, f.degree())
        return top


def _tuples_sum(k, s):
    if k == 0:
        if s == 0:
            yield ()
        return
    if k == 1:
        yield (s,)
        return
    for first in range(s, -1, -1):
        for rest in _tuples_sum(k - 1, s - first):
            yield (first,) + rest


def _point(dom, k):
    """k-th enumeration point of the coefficient field: the integer k in
    characteristic 0, the polynomial in T with base-p digits of k otherwise."""
    if dom.char == 0:
        return dom.from_int(k)
    p = dom.p
    if k == 0:
        return dom.zero
    digits = []
    while k:
        digits.append(k % p)
        k //= p
    return dom.from_coeffs(tuple(digits))


def normalize_delta(delta):
    """Linear change X_i -> X_i + c_i X_N making delta unit-monic in X_N.

    Returns (c, changed, u, e): changed = delta after the change, with
    X_N-degree e = deg(delta) and constant X_N-leading coefficient u != 0.
    The points c are enumerated in graded order, so the first workable tuple
    is returned deterministically.
    """
    if delta.n == 0:
        raise NoVariables("normalization needs at least one variable")
    if delta.is_constant():
        raise InputError("constant determinant needs no normalization")
    dom = delta.dom
    n = delta.n
    deg = delta.degree()
    top = Polynomial(dom, n, {e: c for e, c in delta.terms.items() if sum(e) == deg})
    tried = 0
    for s in count(0):
        for t in _tuples_sum(n - 1, s):
            tried += 1
            if tried > _POINT_LIMIT:
                raise ResourceLimit("no normalizing point found within the search budget")
            pt = [_point(dom, k) for k in t]
            u = top.evaluate(pt + [dom.one])
            if dom.is_zero(u):
                continue
            changed = linear_change(delta, pt)
            lead = changed.split_xn()
            if changed.degree_xn() != deg or not lead[deg].is_constant() or not dom.eq(lead[deg].constant_value(), u):
                raise InvariantViolation("change of variables did not produce the predicted leading form")
            return pt, changed, u, deg


def _verify_zero(A, y):
    for v in A.mul_vec(y):
        if v.terms:
            raise InvariantViolation("returned generator does not solve A y = 0")


def _verify_eq(A, y, b):
    out = A.mul_vec(y)
    for i, v in enumerate(out):
        if v != b[i]:
            raise InvariantViolation("returned vector does not solve A y = b")


def _total_degree(A, extra=()):
    d = 0
    for row in A.rows:
        for f in row:
            if f.terms:
                d = max(d, f.degree())
    for f in extra:
        if f.terms:
            d = max(d, f.degree())
    return d


def _check_beta(A, vectors, extra=()):
    if not vectors:
        return
    d_eff = max(_total_degree(A, extra), 1)
    m_eff = max(A.m, 1)
    bound = beta(A.nvars, d_eff, m_eff)
    for y in vectors:
        for f in y:
            if f.terms and f.degree() > bound:
                raise InvariantViolation(
                    f"degree {f.degree()} exceeds the elimination bound {bound}"
                )


def _unit_vectors(dom, nvars, n):
    out = []
    for j in range(n):
        y = [Polynomial.zero(dom, nvars) for _ in range(n)]
        y[j] = Polynomial.one(dom, nvars)
        out.append(y)
    return out


def _base_rows(A):
    return [{j: f.constant_value() for j, f in enumerate(row) if f.terms} for row in A.rows]


def _xn_degree(A):
    d = 0
    for row in A.rows:
        for f in row:
            if f.terms:
                d = max(d, f.degree_xn())
    return d


def _derived_rows(Atil):
    """X_N-coefficient tables of the changed kept rows."""
    return [[f.split_xn() for f in row] for row in Atil.rows]


def _derived_matrix(tables, n, window, slices, dom, nvars):
    zero = Polynomial.zero(dom, nvars - 1)
    rows = []
    for table in tables:
        for t in range(slices):
            row = []
            for j in range(n):
                cj = table[j]
                for k in range(window):
                    idx = t - k
                    row.append(cj[idx] if 0 <= idx < len(cj) else zero)
            rows.append(row)
    return rows


def _unpack(z, n, window, dom, nvars):
    out = []
    for j in range(n):
        acc = Polynomial.zero(dom, nvars)
        for k in range(window):
            f = z[j * window + k]
            if f.terms:
                acc = acc + f.lift_var().shift_xn(k)
        out.append(acc)
    return out


def _syzygy_rec(A, trace):
    dom = A.dom
    N = A.nvars
    n = A.nc
    record = {"nvars": N, "rows": A.m, "cols": n}
    trace.levels.append(record)
    if n == 0:
        record["rank"] = 0
        return []
    if A.is_zero():
        record["rank"] = 0
        gens = _unit_vectors(dom, N, n)
        return gens
    if N == 0:
        rows = _base_rows(A)
        if dom is QQ:
            vectors, dens = gauss.kernel_basis_q(rows, n)
            trace.constants.extend(d for d in dens if d != 1)
            gens = [[Polynomial.const(dom, 0, v) for v in vec] for vec in vectors]
        else:
            vectors = gauss.kernel_basis_op(rows, n, dom)
            gens = [[Polynomial.const(dom, 0, v) for v in vec] for vec in vectors]
        record["rank"] = n - len(gens)
        for y in gens:
            _verify_zero(A, y)
        return gens
    S = reduce_to_s(A)
    r = S.r
    record["rank"] = r
    record["pivot_cols"] = list(S.pivot_cols)
    if r == n:
        return []
    specials = special_solutions(S)
    if S.delta.is_constant():
        record["delta_degree"] = 0
        if dom.char == 0:
            cv = S.delta.constant_value()
            if cv not in (1, -1):
                trace.constants.append(cv)
        for y in specials:
            _verify_zero(A, y)
        _check_beta(A, specials)
        return specials
    c, dtil, u, e = normalize_delta(S.delta)
    record["delta_degree"] = e
    if dom.char == 0:
        trace.constants.append(u)
    Atil = PolyMatrix(dom, N, [[linear_change(f, c) for f in A.rows[i]] for i in S.kept_rows])
    d = _xn_degree(Atil)
    if d < 1:
        raise InvariantViolation("non-constant minor over an X_N-free matrix")
    window = r * d
    slices = (r + 1) * d
    record["window"] = window
    tables = _derived_rows(Atil)
    rows2 = [row for row in _derived_matrix(tables, n, window, slices, dom, N) if any(f.terms for f in row)]
    A2 = PolyMatrix(dom, N - 1, rows2, ncols=n * window)
    record["derived_rows"] = A2.m
    z_gens = _syzygy_rec(A2, trace)
    gens = list(specials)
    for z in z_gens:
        y = _unpack(z, n, window, dom, N)
        gens.append([linear_change(f, c, inverse=True) for f in y])
    for y in gens:
        _verify_zero(A, y)
    _check_beta(A, gens)
    return gens


def _lift_gf(A):
    F = FpT(A.dom.p)
    return PolyMatrix(F, A.nvars, [[f.map_coeffs(F, F.from_int) for f in row] for row in A.rows])


def _den_lcm(vec, p):
    den = (1,)
    for f in vec:
        for cv in f.terms.values():
            g = _u_gcd(den, cv.den, p)
            den = _u_divmod(_u_mul(den, cv.den, p), g, p)[0]
    return den


def _slice_fpt_vector(vec, gf):
    """All T-power slices of a cleared F_p(T)[X]-vector, as F_p[X]-vectors."""
    p = gf.p
    den = _den_lcm(vec, p)
    mult = FpRat(p, den)
    scaled = [f.scale(mult) for f in vec]
    tmax = 0
    for f in scaled:
        for cv in f.terms.values():
            if cv.den != (1,):
                raise InvariantViolation("denominator survived clearing")
            tmax = max(tmax, len(cv.num) - 1)
    out = []
    for k in range(tmax + 1):
        nonzero = False
        cut = []
        for f in scaled:
            terms = {}
            for e, cv in f.terms.items():
                a = cv.num[k] if k < len(cv.num) else 0
                if a:
                    terms[e] = a
            cut.append(Polynomial(gf, f.n, terms))
            nonzero = nonzero or bool(terms)
        if nonzero:
            out.append(cut)
    return out


def _dedup_vectors(vectors):
    seen = set()
    out = []
    for y in vectors:
        key = tuple(tuple(sorted(f.terms.items())) for f in y)
        if key not in seen:
            seen.add(key)
            out.append(y)
    return out


def descend_finite_field(vectors, p):
    """T-power coefficient slices of F_p(T)[X]-vectors, as F_p[X]-vectors.

    Denominators are cleared by a common p-unit first, so inputs holding
    rational functions of T are accepted. Zero slices are dropped and exact
    duplicates removed. If the inputs solve a T-free system A y = 0, every
    returned slice solves it too, and together they span the same solutions.
    """
    gf = GF(p)
    return _dedup_vectors(
        [cut for y in vectors for cut in _slice_fpt_vector(y, gf)]
    )


def syzygy_field(A):
    """Generating set of {y in F[X]^n : A y = 0} for a field domain F."""
    dom = A.dom
    if not dom.is_field:
        raise InputError("syzygy_field needs a field coefficient domain")
    if dom.kind == "mod":
        lifted = _lift_gf(A)
        base = syzygy_field(lifted)
        sliced = _dedup_vectors(
            [cut for y in base.gens for cut in _slice_fpt_vector(y, dom)]
        )
        for y in sliced:
            _verify_zero(A, y)
        _check_beta(A, sliced)
        return FieldSyzygyBasis(sliced, A.nc, dom, A.nvars, base.trace)
    trace = SolveTrace()
    gens = _syzygy_rec(A, trace)
    for y in gens:
        _verify_zero(A, y)
    _check_beta(A, gens)
    return FieldSyzygyBasis(gens, A.nc, dom, A.nvars, trace)


def _solve_rec(A, b):
    dom = A.dom
    N = A.nvars
    n = A.nc
    if all(not f.terms for f in b):
        return [Polynomial.zero(dom, N) for _ in range(n)]
    if n == 0:
        return None
    if N == 0:
        rows = _base_rows(A)
        const_b = [f.constant_value() for f in b]
        if dom is QQ:
            sol = gauss.solve_q(rows, const_b, n)
        else:
            sol = gauss.solve_op(rows, const_b, n, dom)
        if sol is None:
            return None
        return [Polynomial.const(dom, 0, v) for v in sol]
    r1, kept, pivots = rank_profile(A)
    aug = PolyMatrix(dom, N, [list(A.rows[i]) + [b[i]] for i in range(A.m)])
    r2, _, _ = rank_profile(aug)
    if r2 != r1:
        return None
    r = r1
    M = PolyMatrix(dom, N, [list(A.rows[i]) + [b[i]] for i in kept])
    delta, R = montante_adjugate(M, pivots)
    w = [R[i][-1] for i in range(r)]
    if delta.is_constant():
        inv = dom.inv(delta.constant_value())
        y = [Polynomial.zero(dom, N) for _ in range(n)]
        for i, pc in enumerate(pivots):
            y[pc] = w[i].scale(inv)
        _verify_eq(A, y, b)
        return y
    c, dtil, u, e = normalize_delta(delta)
    Atil = PolyMatrix(dom, N, [[linear_change(f, c) for f in A.rows[i]] for i in kept])
    btil = [linear_change(b[i], c) for i in kept]
    uinv = dom.inv(u)
    fs = []
    gs = []
    for bi in btil:
        k, q, rr = pseudo_div_xn(bi, dtil)
        scale = dom.one
        for _ in range(k):
            scale = dom.mul(scale, uinv)
        fs.append(q.scale(scale))
        gs.append(rr.scale(scale))
    Dtil = Atil.submatrix(range(r), pivots)
    M2 = PolyMatrix(dom, N, [list(Dtil.rows[i]) + [fs[i]] for i in range(r)])
    d2, R2 = montante_adjugate(M2, list(range(r)))
    if d2 == dtil:
        hp = [R2[i][0] for i in range(r)]
    elif d2 == -dtil:
        hp = [-R2[i][0] for i in range(r)]
    else:
        raise InvariantViolation("adjugate passes disagree on the pivot determinant")
    h = [Polynomial.zero(dom, N) for _ in range(n)]
    for i, pc in enumerate(pivots):
        h[pc] = hp[i]
    if all(not g.terms for g in gs):
        ytil = h
    else:
        d = _xn_degree(Atil)
        if d < 1:
            raise InvariantViolation("non-constant minor over an X_N-free matrix")
        window = r * d
        slices = (r + 1) * d
        tables = _derived_rows(Atil)
        rows2 = _derived_matrix(tables, n, window, slices, dom, N)
        b2 = []
        zero2 = Polynomial.zero(dom, N - 1)
        for i in range(r):
            gi = gs[i].split_xn()
            for t in range(slices):
                b2.append(gi[t] if t < len(gi) else zero2)
        keep_rows = []
        keep_b = []
        for row, bv in zip(rows2, b2):
            if any(f.terms for f in row):
                keep_rows.append(row)
                keep_b.append(bv)
            elif bv.terms:
                return None
        A2 = PolyMatrix(dom, N - 1, keep_rows, ncols=n * window)
        z = _solve_rec(A2, keep_b)
        if z is None:
            return None
        y2 = _unpack(z, n, window, dom, N)
        ytil = [y2[j] + h[j] for j in range(n)]
    y = [linear_change(f, c, inverse=True) for f in ytil]
    _verify_eq(A, y, b)
    return y


def solve_inhomogeneous_field(A, b):
    """One solution of A y = b in F[X]^n, or None when no solution exists."""
    dom = A.dom
    if not dom.is_field:
        raise InputError("solve_inhomogeneous_field needs a field coefficient domain")
    if len(b) != A.m:
        raise InputError("right-hand side length mismatch")
    if dom.kind == "mod":
        return _solve_gf(A, b)
    y = _solve_rec(A, b)
    if y is not None:
        _verify_eq(A, y, b)
        _check_beta(A, [y], extra=b)
    return y


def _solve_gf(A, b):
    gf = A.dom
    p = gf.p
    F = FpT(p)
    Af = _lift_gf(A)
    bf = [f.map_coeffs(F, F.from_int) for f in b]
    y = solve_inhomogeneous_field(Af, bf)
    if y is None:
        return None
    den = _den_lcm(y, p)
    mult = FpRat(p, den)
    scaled = [f.scale(mult) for f in y]
    k0 = next(k for k, a in enumerate(den) if a)
    inv0 = pow(den[k0], -1, p)
    out = []
    for f in scaled:
        terms = {}
        for e, cv in f.terms.items():
            if cv.den != (1,):
                raise InvariantViolation("denominator survived clearing")
            a = cv.num[k0] if k0 < len(cv.num) else 0
            a = (a * inv0) % p
            if a:
                terms[e] = a
        out.append(Polynomial(gf, f.n, terms))
    _verify_eq(A, out, b)
    _check_beta(A, [out], extra=b)
    return out


def structure_constants(A):
    """Division constants of the elimination structure of A over Q.

    Walks the same recursion as the inhomogeneous solver, with no right-hand
    side: per level it collects the pivot-minor determinant when constant or
    the X_N-leading constant after normalization, and at the base level the
    echelon pivot values. Every denominator of a rational solution of
    A c = v with integer v divides a product of powers of these constants.
    """
    if A.dom is not QQ:
        raise InputError("structure_constants works over the rationals")
    out = []

    def rec(A):
        N = A.nvars
        n = A.nc
        if n == 0 or A.is_zero():
            return
        if N == 0:
            out.extend(gauss.echelon_pivots_int(_base_rows(A), n))
            return
        S = reduce_to_s(A)
        if S.delta.is_constant():
            out.append(S.delta.constant_value())
            return
        c, dtil, u, e = normalize_delta(S.delta)
        out.append(u)
        Atil = PolyMatrix(A.dom, N, [[linear_change(f, c) for f in A.rows[i]] for i in S.kept_rows])
        d = _xn_degree(Atil)
        if d < 1:
            raise InvariantViolation("non-constant minor over an X_N-free matrix")
        window = S.r * d
        slices = (S.r + 1) * d
        tables = _derived_rows(Atil)
        rows2 = [row for row in _derived_matrix(tables, n, window, slices, A.dom, N) if any(f.terms for f in row)]
        rec(PolyMatrix(A.dom, N - 1, rows2, ncols=n * window))

    rec(A)
    return out
