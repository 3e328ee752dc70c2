"""Solvers over Z[X]: syzygy generating sets, linear-system and membership
decisions with exact cofactor certificates, Bezout identities, and module
operations (intersection, colon ideal, saturation).

The architecture is local-global: solve over Q, read off an integer
denominator, repair at each prime dividing it with the local solver, and
combine the per-prime certificates with an integer Bezout identity. Every
returned certificate is re-verified by exact polynomial arithmetic before it
leaves this module.
"""

import math
from fractions import Fraction

from . import limits
from .arith import combine_to_one, factorize, is_probable_prime, vp
from .domains import GF, QQ, ZZ
from .errors import (
    InputError,
    InvariantViolation,
    NotPrime,
    ResourceLimit,
    ZeroMatrix,
)
from .field_solver import (
    FieldSyzygyBasis,
    solve_inhomogeneous_field,
    structure_constants,
    syzygy_field,
)
from .linalg import PolyMatrix
from .local_solver import combine_generators, syzygy_local
from .poly import Polynomial, reduce_mod_p
from .text import format_polynomial


class Certificate:
    """Exact cofactor witness for a positive decision.

    mode "membership": sum cofactors[j] * generators[j] = target.
    mode "bezout": same with target 1.
    mode "linear-system": matrix * cofactors = rhs.
    """

    __slots__ = ("mode", "cofactors", "target", "generators", "matrix", "rhs")

    def __init__(self, mode, cofactors, target=None, generators=None, matrix=None, rhs=None):
        self.mode = mode
        self.cofactors = list(cofactors)
        self.target = target
        self.generators = list(generators) if generators is not None else None
        self.matrix = matrix
        self.rhs = list(rhs) if rhs is not None else None

    def verify(self):
        if self.mode == "linear-system":
            got = self.matrix.mul_vec(self.cofactors)
            return all((g - w).is_zero() for g, w in zip(got, self.rhs))
        acc = None
        for g, f in zip(self.cofactors, self.generators):
            t = g * f
            acc = t if acc is None else acc + t
        if acc is None:
            acc = Polynomial.zero(self.target.dom, self.target.n)
        return (acc - self.target).is_zero()

    def to_dict(self):
        out = {"mode": self.mode, "cofactors": [format_polynomial(g) for g in self.cofactors]}
        if self.target is not None:
            out["target"] = format_polynomial(self.target)
        if self.generators is not None:
            out["generators"] = [format_polynomial(f) for f in self.generators]
        if self.matrix is not None:
            out["matrix"] = [[format_polynomial(f) for f in row] for row in self.matrix.rows]
        if self.rhs is not None:
            out["rhs"] = [format_polynomial(f) for f in self.rhs]
        return out


class LocalCertificate:
    """Cofactors with sum cofactors[j] * generators[j] = denominator, where
    the integer denominator is a unit in Z localized at p."""

    __slots__ = ("p", "cofactors", "denominator", "generators")

    def __init__(self, p, cofactors, denominator, generators):
        self.p = p
        self.cofactors = list(cofactors)
        self.denominator = denominator
        self.generators = list(generators)

    def verify(self):
        if self.denominator % self.p == 0:
            return False
        acc = None
        for g, f in zip(self.cofactors, self.generators):
            t = g * f
            acc = t if acc is None else acc + t
        if acc is None:
            return False
        nv = self.generators[0].n
        return (acc - Polynomial.const(ZZ, nv, self.denominator)).is_zero()


class ZSyzygyBasis:
    """Generators of {y in Z[X]^n : A y = 0} with per-generator provenance
    ("field" or "local:p") and the denominator that selected the primes."""

    __slots__ = ("gens", "ncols", "nvars", "delta", "provenance", "records")

    def __init__(self, gens, ncols, nvars, delta, provenance, records):
        self.gens = gens
        self.ncols = ncols
        self.nvars = nvars
        self.delta = delta
        self.provenance = provenance
        self.records = records

    def max_degree(self):
        top = float("-inf")
        for y in self.gens:
            for f in y:
                top = max(top, f.degree())
        return top


def _verify_solves(A, y):
    for v in A.mul_vec(y):
        if v.terms:
            raise InvariantViolation("generator does not solve the system")


def _vec_key(y):
    return tuple(tuple(sorted(f.terms.items())) for f in y)


def _normalize_sign(y):
    """Negate a vector when its first nonzero entry has a negative leading
    coefficient, so sign-twins collapse under deduplication."""
    for f in y:
        if f.terms:
            if f.leading()[1] < 0:
                return [-g for g in y]
            return list(y)
    return list(y)


def _clear_vector_z(vec):
    """Primitive integer vector spanning the same line as a rational one."""
    den = 1
    for f in vec:
        for c in f.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
    tabs = []
    content = 0
    for f in vec:
        terms = {}
        for e, c in f.terms.items():
            w = c * den
            if w.denominator != 1:
                raise InvariantViolation("denominator clearing failed")
            terms[e] = w.numerator
            content = math.gcd(content, abs(w.numerator))
        tabs.append(terms)
    if content > 1:
        tabs = [{e: v // content for e, v in t.items()} for t in tabs]
    return [Polynomial(ZZ, vec[0].n if vec else 0, t) for t in tabs]


def _poly_q_to_z(f, mult):
    terms = {}
    for e, c in f.terms.items():
        w = c * mult
        if w.denominator != 1:
            raise InvariantViolation("denominator clearing failed")
        if w.numerator:
            terms[e] = w.numerator
    return Polynomial(ZZ, f.n, terms)


def _den_lcm_q(vec):
    den = 1
    for f in vec:
        for c in f.terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
    return den


def _int_const(c):
    if isinstance(c, Fraction):
        return abs(c.numerator) * abs(c.denominator)
    return abs(int(c))


def _support_primes(n):
    if abs(n) <= 1:
        return []
    return [p for p, _ in factorize(n)]


def _check_zz_matrix(A):
    if A.dom is not ZZ:
        raise InputError("this operation needs an integer-coefficient matrix")


def denominator_delta(A, field_gens=None):
    """Integer delta >= 1 from the recursion trace of the field solver.

    Its prime support covers every prime p at which the cleared field
    generators can fail to generate the solutions over Z localized at p; the
    defining property (delta times any integer solution lies in the integer
    span of the field generators) is audited in the test suite.
    """
    _check_zz_matrix(A)
    if A.m == 0 or A.is_zero():
        raise ZeroMatrix("denominator extraction needs a nonzero matrix")
    basis = field_gens if isinstance(field_gens, FieldSyzygyBasis) else None
    if basis is None:
        basis = syzygy_field(A.to_domain(QQ))
    delta = 1
    for c in basis.trace.constants:
        w = _int_const(c)
        if w > 1:
            delta *= w
    return delta


def syzygy_z(A):
    """Generators of the solution module of A y = 0 over Z[X].

    Field generators (Hermann recursion over Q, denominators cleared) are
    completed by local generators at every prime dividing the traced
    denominator.
    """
    _check_zz_matrix(A)
    n = A.nc
    nv = A.nvars
    if n == 0:
        return ZSyzygyBasis([], 0, nv, 1, [], {})
    if A.is_zero():
        gens = []
        for j in range(n):
            y = [Polynomial.zero(ZZ, nv) for _ in range(n)]
            y[j] = Polynomial.one(ZZ, nv)
            gens.append(y)
        return ZSyzygyBasis(gens, n, nv, 1, ["field"] * n, {})
    fb = syzygy_field(A.to_domain(QQ))
    gens = []
    provenance = []
    seen = set()
    for y in fb.gens:
        z = _clear_vector_z(y)
        if not any(f.terms for f in z):
            continue
        z = _normalize_sign(z)
        _verify_solves(A, z)
        key = _vec_key(z)
        if key not in seen:
            seen.add(key)
            gens.append(z)
            provenance.append("field")
    delta = denominator_delta(A, fb)
    records = {}
    for p in _support_primes(delta):
        lb = syzygy_local(A, p)
        records[p] = lb.records
        for z in lb.gens:
            if not any(f.terms for f in z):
                continue
            z = _normalize_sign(z)
            key = _vec_key(z)
            if key not in seen:
                seen.add(key)
                gens.append(z)
                provenance.append(f"local:{p}")
    return ZSyzygyBasis(gens, n, nv, delta, provenance, records)


def _absent(reason, explain):
    return (None, reason) if explain else None


def solve_linear_z(A, b, explain=False):
    """A solution certificate for A y = b over Z[X], or absent.

    With explain=True returns (certificate, reason): reason is None on
    success, otherwise "rank over Q" or the obstructing prime as
    "no solution over the integers localized at p".
    """
    _check_zz_matrix(A)
    if len(b) != A.m:
        raise InputError("right-hand side length mismatch")
    for f in b:
        if f.dom is not ZZ or f.n != A.nvars:
            raise InputError("right-hand side from a different ring")
    n = A.nc
    nv = A.nvars
    if all(not f.terms for f in b):
        cert = Certificate("linear-system", [Polynomial.zero(ZZ, nv)] * n, matrix=A, rhs=b)
        return (cert, None) if explain else cert
    if n == 0 or A.is_zero():
        return _absent("rank over Q", explain)
    yq = solve_inhomogeneous_field(A.to_domain(QQ), [f.to_domain(QQ) for f in b])
    if yq is None:
        return _absent("rank over Q", explain)
    den = _den_lcm_q(yq)
    y_den = [_poly_q_to_z(f, den) for f in yq]
    if den == 1:
        cert = Certificate("linear-system", y_den, matrix=A, rhs=b)
        if not cert.verify():
            raise InvariantViolation("integral solution failed verification")
        return (cert, None) if explain else cert
    H = PolyMatrix(ZZ, nv, [list(A.rows[i]) + [-b[i]] for i in range(A.m)])
    fbH = syzygy_field(H.to_domain(QQ))
    field_gens = [_clear_vector_z(v) for v in fbH.gens]
    field_gens = [v for v in field_gens if any(f.terms for f in v)]
    parts = []
    for p in _support_primes(den):
        gf = GF(p)
        modp = solve_inhomogeneous_field(A.to_domain(gf), [f.to_domain(gf) for f in b])
        if modp is None:
            return _absent(f"no solution over the integers localized at {p}", explain)
        lbH = syzygy_local(H, p)
        G = combine_generators(field_gens, lbH)
        last = [g[n] for g in G]
        loc = bezout_local(last, p)
        if loc is None:
            return _absent(f"no solution over the integers localized at {p}", explain)
        yp = []
        for j in range(n):
            acc = Polynomial.zero(ZZ, nv)
            for k, g in enumerate(G):
                if loc.cofactors[k].terms and g[j].terms:
                    acc = acc + loc.cofactors[k] * g[j]
            yp.append(acc)
        got = A.mul_vec(yp)
        want = [f.scale(loc.denominator) for f in b]
        if any((g - w).terms for g, w in zip(got, want)):
            raise InvariantViolation("local solution failed its scaling identity")
        parts.append((loc.denominator, yp))
    coeffs = combine_to_one([den] + [dp for dp, _ in parts])
    y = []
    for j in range(n):
        acc = y_den[j].scale(coeffs[0])
        for k, (_, yp) in enumerate(parts):
            acc = acc + yp[j].scale(coeffs[k + 1])
        y.append(acc)
    cert = Certificate("linear-system", y, matrix=A, rhs=b)
    if not cert.verify():
        raise InvariantViolation("combined solution failed verification")
    return (cert, None) if explain else cert


def member_z(f0, fs, explain=False):
    """Membership of f0 in the ideal (or submodule column span) generated by
    fs over Z[X], with exact cofactors on success."""
    if f0.dom is not ZZ:
        raise InputError("membership works over the integers")
    nv = f0.n
    for f in fs:
        if f.dom is not ZZ or f.n != nv:
            raise InputError("generators from a different ring")
    n = len(fs)
    if f0.is_zero():
        cert = Certificate("membership", [Polynomial.zero(ZZ, nv)] * n, target=f0, generators=fs)
        return (cert, None) if explain else cert
    if n == 0 or all(f.is_zero() for f in fs):
        return _absent("rank over Q", explain)
    A = PolyMatrix(ZZ, nv, [list(fs)])
    got, reason = solve_linear_z(A, [f0], explain=True)
    if got is None:
        return _absent(reason, explain)
    cert = Certificate("membership", got.cofactors, target=f0, generators=fs)
    if not cert.verify():
        raise InvariantViolation("membership certificate failed verification")
    return (cert, None) if explain else cert


def power_cofactors(rs, fs, e):
    """Cofactors (s_1..s_n) with 1 - (1 - sum r_i f_i)^e = sum s_i f_i."""
    if e < 1:
        raise InputError("the exponent must be at least 1")
    if len(rs) != len(fs):
        raise InputError("cofactor and generator lists differ in length")
    if not rs:
        return []
    nv = fs[0].n
    dom = fs[0].dom
    q = Polynomial.one(dom, nv)
    for r, f in zip(rs, fs):
        q = q - r * f
    ws = list(rs)
    for _ in range(e - 1):
        ws = [rs[i] + q * ws[i] for i in range(len(ws))]
    return ws


def _div_int_poly(f, k):
    terms = {}
    for e, c in f.terms.items():
        if c % k:
            raise InvariantViolation("inexact integer division of a polynomial")
        terms[e] = c // k
    return Polynomial(ZZ, f.n, terms)


def bezout_local(cs, p):
    """Cofactors h with sum h_j cs_j = denominator, an integer unit in Z
    localized at p; absent iff 1 is not in the ideal (cs) over that ring."""
    if not is_probable_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not cs:
        return None
    nv = cs[0].n
    for f in cs:
        if f.dom is not ZZ or f.n != nv:
            raise InputError("generators from a different ring")
    Aq = PolyMatrix(QQ, nv, [[f.to_domain(QQ) for f in cs]])
    cq = solve_inhomogeneous_field(Aq, [Polynomial.one(QQ, nv)])
    if cq is None:
        return None
    den = _den_lcm_q(cq)
    g = [_poly_q_to_z(f, den) for f in cq]
    e = vp(den, p)
    if e == 0:
        cert = LocalCertificate(p, g, den, cs)
        if not cert.verify():
            raise InvariantViolation("local certificate failed verification")
        return cert
    gf = GF(p)
    Ap = PolyMatrix(gf, nv, [[reduce_mod_p(f, p) for f in cs]])
    rp = solve_inhomogeneous_field(Ap, [Polynomial.one(gf, nv)])
    if rp is None:
        return None
    rs = [f.map_coeffs(ZZ, int) for f in rp]
    q = Polynomial.one(ZZ, nv)
    for r, f in zip(rs, cs):
        q = q - r * f
    if any(c % p for c in q.terms.values()):
        raise InvariantViolation("mod-p cofactors do not reduce to a Bezout identity")
    ss = power_cofactors(rs, cs, e)
    pe = p ** e
    sdiv = _div_int_poly(q ** e, pe)
    m = den // pe
    cof = [ss[j].scale(m) + sdiv * g[j] for j in range(len(cs))]
    cert = LocalCertificate(p, cof, m, cs)
    if not cert.verify():
        raise InvariantViolation("local certificate failed verification")
    return cert


def bezout_z(fs):
    """Cofactors h with sum h_j fs_j = 1 over Z[X], or absent."""
    if not fs:
        return None
    nv = fs[0].n
    for f in fs:
        if f.dom is not ZZ or f.n != nv:
            raise InputError("generators from a different ring")
    one = Polynomial.one(ZZ, nv)
    Aq = PolyMatrix(QQ, nv, [[f.to_domain(QQ) for f in fs]])
    cq = solve_inhomogeneous_field(Aq, [Polynomial.one(QQ, nv)])
    if cq is None:
        return None
    den = _den_lcm_q(cq)
    g = [_poly_q_to_z(f, den) for f in cq]
    if den == 1:
        cert = Certificate("bezout", g, target=one, generators=fs)
        if not cert.verify():
            raise InvariantViolation("Bezout certificate failed verification")
        return cert
    locals_ = []
    for p in _support_primes(den):
        loc = bezout_local(fs, p)
        if loc is None:
            return None
        locals_.append(loc)
    coeffs = combine_to_one([den] + [loc.denominator for loc in locals_])
    cof = []
    for j in range(len(fs)):
        acc = g[j].scale(coeffs[0])
        for k, loc in enumerate(locals_):
            acc = acc + loc.cofactors[j].scale(coeffs[k + 1])
        cof.append(acc)
    cert = Certificate("bezout", cof, target=one, generators=fs)
    if not cert.verify():
        raise InvariantViolation("Bezout certificate failed verification")
    return cert


def _check_gens(gens, what):
    if not gens:
        return None, None
    mdim = len(gens[0])
    if mdim == 0:
        raise InputError(f"{what} generators live in a zero-dimensional ambient module")
    nv = gens[0][0].n
    for v in gens:
        if len(v) != mdim:
            raise InputError(f"{what} generators have mixed ambient dimensions")
        for f in v:
            if f.dom is not ZZ or f.n != nv:
                raise InputError(f"{what} generators from a different ring")
    return mdim, nv


def _columns_matrix(cols, mdim, nv):
    rows = [[cols[k][i] for k in range(len(cols))] for i in range(mdim)]
    return PolyMatrix(ZZ, nv, rows, ncols=len(cols))


def _dedup_nonzero(vectors):
    out = []
    seen = set()
    for v in vectors:
        if not any(f.terms for f in v):
            continue
        v = _normalize_sign(v)
        key = _vec_key(v)
        if key not in seen:
            seen.add(key)
            out.append(v)
    return out


def _prune_span(vectors, mdim, nv):
    """Drop generators already in the span of the remaining ones."""
    out = list(vectors)
    i = 0
    while i < len(out):
        rest = out[:i] + out[i + 1:]
        if rest and _in_span(out[i], rest, mdim, nv):
            out.pop(i)
        else:
            i += 1
    return out


def module_intersect(gens_a, gens_b):
    """Generators of the intersection of the spans of gens_a and gens_b
    inside Z[X]^m."""
    ma, nva = _check_gens(gens_a, "left")
    mb, nvb = _check_gens(gens_b, "right")
    if ma is None or mb is None:
        return []
    if ma != mb or nva != nvb:
        raise InputError("intersection needs generators in the same ambient module")
    cols = [list(v) for v in gens_a] + [[-f for f in v] for v in gens_b]
    H = _columns_matrix(cols, ma, nva)
    Z = syzygy_z(H)
    s = len(gens_a)
    out = []
    for z in Z.gens:
        v = []
        for i in range(ma):
            acc = Polynomial.zero(ZZ, nva)
            for k in range(s):
                if z[k].terms and gens_a[k][i].terms:
                    acc = acc + z[k] * gens_a[k][i]
            v.append(acc)
        out.append(v)
    return _prune_span(_dedup_nonzero(out), ma, nva)


def module_colon(gens_mprime, gens_m, nvars=None):
    """Generators of the ideal {a in Z[X] : a * span(gens_m) is contained in
    span(gens_mprime)}."""
    mp_dim, mp_nv = _check_gens(gens_mprime, "left")
    m_dim, m_nv = _check_gens(gens_m, "right")
    if m_dim is None:
        nv = mp_nv if mp_nv is not None else nvars
        if nv is None:
            raise InputError("colon of empty generator lists needs the variable count")
        return [Polynomial.one(ZZ, nv)]
    if mp_dim is not None and (mp_dim != m_dim or mp_nv != m_nv):
        raise InputError("colon needs generators in the same ambient module")
    nv = m_nv
    result = None
    for v in gens_m:
        cols = [list(v)] + [[-f for f in w] for w in gens_mprime]
        H = _columns_matrix(cols, m_dim, nv)
        Z = syzygy_z(H)
        ideal_v = _dedup_nonzero([[z[0]] for z in Z.gens])
        ideal_v = [u[0] for u in ideal_v]
        if result is None:
            result = ideal_v
        else:
            meet = module_intersect([[a] for a in result], [[a] for a in ideal_v])
            result = [u[0] for u in meet]
        if not result:
            return []
    pruned = _prune_span(_dedup_nonzero([[a] for a in result]), 1, nv)
    return [u[0] for u in pruned]


def _in_span(v, gens, mdim, nv):
    A = _columns_matrix(gens, mdim, nv)
    return solve_linear_z(A, list(v)) is not None


def module_saturate(gens):
    """Generators of the contraction to Z[X]^m of the span of gens over
    Q[X]: all integer vectors that some nonzero integer multiplies into the
    span."""
    mdim, nv = _check_gens(gens, "input")
    if mdim is None:
        return []
    current = _dedup_nonzero([list(v) for v in gens])
    if not current:
        return []
    for _ in range(limits.saturate_rounds()):
        W = _columns_matrix(current, mdim, nv)
        delta = 1
        for c in structure_constants(W.to_domain(QQ)):
            w = _int_const(c)
            if w > 1:
                delta *= w
        cols = [list(v) for v in current]
        for i in range(mdim):
            e = [Polynomial.zero(ZZ, nv) for _ in range(mdim)]
            e[i] = Polynomial.const(ZZ, nv, -delta)
            cols.append(e)
        H = _columns_matrix(cols, mdim, nv)
        Z = syzygy_z(H)
        s = len(current)
        candidates = _dedup_nonzero([[z[s + i] for i in range(mdim)] for z in Z.gens])
        grew = False
        for v in candidates:
            if not _in_span(v, current, mdim, nv):
                current.append(v)
                grew = True
        if not grew:
            return _prune_span(_dedup_nonzero(current), mdim, nv)
    raise ResourceLimit("saturation did not stabilize within the configured rounds")
