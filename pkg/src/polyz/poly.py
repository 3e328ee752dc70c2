"""Sparse exact multivariate polynomials over a pluggable coefficient domain,
with the structural operations the solvers need: X_N-coefficient splitting,
Kronecker-type translations, linear changes of variables, pseudo-division in
X_N, content extraction and logarithmic heights over Q.

Variables are X1..XN. Monomials are exponent tuples of length N. The canonical
term order is graded lexicographic with X1 > ... > XN; it fixes iteration and
output order only, no algorithm depends on it.
"""

import math
from fractions import Fraction

from . import limits
from ._kernels import (
    tm_add_int,
    tm_add_mod,
    tm_add_obj,
    tm_mul_int,
    tm_mul_mod,
    tm_mul_obj,
    tm_scale_int,
    tm_scale_mod,
    tm_scale_obj,
)
from .domains import GF, QQ, ZZ, Domain
from .errors import (
    ExponentBlowup,
    InputError,
    NonConstantLeading,
    NoVariables,
    Zero,
)

NEG_INF = float("-inf")


def _grlex_key(exps):
    return (sum(exps), exps)


class Polynomial:
    """Immutable sparse polynomial. Do not mutate `terms` after construction."""

    __slots__ = ("dom", "n", "terms")

    def __init__(self, dom, n, terms):
        self.dom = dom
        self.n = n
        self.terms = terms

    # construction

    @classmethod
    def zero(cls, dom, n):
        return cls(dom, n, {})

    @classmethod
    def one(cls, dom, n):
        return cls(dom, n, {(0,) * n: dom.one})

    @classmethod
    def const(cls, dom, n, c):
        c = dom.normalize(c)
        return cls(dom, n, {(0,) * n: c} if not dom.is_zero(c) else {})

    @classmethod
    def var(cls, dom, n, i):
        """The variable X_{i+1} (0-based index i)."""
        if not 0 <= i < n:
            raise InputError(f"variable index {i} out of range for {n} variables")
        e = [0] * n
        e[i] = 1
        return cls(dom, n, {tuple(e): dom.one})

    @classmethod
    def from_terms(cls, dom, n, items):
        """Normalize arbitrary (exponent tuple, raw coefficient) pairs."""
        terms = {}
        for exps, raw in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise InputError(f"bad exponent tuple {exps} for {n} variables")
            c = dom.normalize(raw)
            if exps in terms:
                c = dom.add(terms[exps], c)
            if dom.is_zero(c):
                terms.pop(exps, None)
            else:
                terms[exps] = c
        return cls(dom, n, terms)

    # basic queries

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and (0,) * self.n in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.n, self.dom.zero)

    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def degree_in(self, i):
        if not self.terms:
            return NEG_INF
        return max(e[i] for e in self.terms)

    def degrees(self):
        """(total degree, per-variable degree vector); -inf entries for 0."""
        if not self.terms:
            return (NEG_INF, tuple([NEG_INF] * self.n))
        return (self.degree(), tuple(self.degree_in(i) for i in range(self.n)))

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def leading(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise Zero("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.dom is other.dom and self.terms == other.terms

    def __hash__(self):
        return hash((self.dom.name, self.n, tuple(self.sorted_terms())))

    def __repr__(self):
        return f"Polynomial({self.dom.name}, {self.to_str()!r})"

    # arithmetic

    def _binop(self, other, fi, fm, fo):
        dom = self.dom
        if not isinstance(other, Polynomial):
            other = Polynomial.const(dom, self.n, other)
        if other.dom is not dom or other.n != self.n:
            raise InputError("mixed polynomial rings")
        k = dom.kind
        if k == "int":
            t = fi(self.terms, other.terms)
        elif k == "mod":
            t = fm(self.terms, other.terms, dom.p)
        else:
            t = fo(self.terms, other.terms)
        return Polynomial(dom, self.n, t)

    def __add__(self, other):
        return self._binop(other, tm_add_int, tm_add_mod, tm_add_obj)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Polynomial) else -Polynomial.const(self.dom, self.n, other))

    def __neg__(self):
        dom = self.dom
        return self.scale(dom.neg(dom.one))

    def __mul__(self, other):
        return self._binop(other, tm_mul_int, tm_mul_mod, tm_mul_obj)

    def scale(self, c):
        dom = self.dom
        c = dom.normalize(c)
        k = dom.kind
        if k == "int":
            t = tm_scale_int(self.terms, c)
        elif k == "mod":
            t = tm_scale_mod(self.terms, c, dom.p)
        else:
            t = tm_scale_obj(self.terms, c)
        return Polynomial(dom, self.n, t)

    def __pow__(self, k):
        if k < 0:
            raise InputError("negative polynomial power")
        result = Polynomial.one(self.dom, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def shift_xn(self, k):
        """Multiply by X_N^k."""
        if k == 0 or not self.terms:
            return self
        out = {}
        for e, c in self.terms.items():
            e2 = e[:-1] + (e[-1] + k,)
            out[e2] = c
        return Polynomial(self.dom, self.n, out)

    # structure in the last variable

    def degree_xn(self):
        if self.n == 0:
            raise NoVariables("no variables")
        return self.degree_in(self.n - 1)

    def split_xn(self):
        """Coefficients (f_0..f_D) of f = sum f_i X_N^i, each over X1..X_{N-1}.

        Returns [] for the zero polynomial.
        """
        if self.n == 0:
            raise NoVariables("split_xn needs at least one variable")
        if not self.terms:
            return []
        d = self.degree_xn()
        slices = [dict() for _ in range(d + 1)]
        for e, c in self.terms.items():
            slices[e[-1]][e[:-1]] = c
        return [Polynomial(self.dom, self.n - 1, t) for t in slices]

    @classmethod
    def from_xn_coeffs(cls, dom, n, coeffs):
        """Reassemble from X_N-coefficients (inverse of split_xn)."""
        terms = {}
        for k, f in enumerate(coeffs):
            for e, c in f.terms.items():
                terms[e + (k,)] = c
        return cls(dom, n, terms)

    def lift_var(self):
        """Reinterpret an (n)-variable polynomial in n+1 variables (X_{n+1}-free)."""
        return Polynomial(self.dom, self.n + 1, {e + (0,): c for e, c in self.terms.items()})

    # substitution

    def substitute(self, i, g):
        """Replace X_{i+1} by the polynomial g (same ring). Horner in X_{i+1}."""
        if not self.terms:
            return self
        groups = {}
        for e, c in self.terms.items():
            k = e[i]
            e0 = e[:i] + (0,) + e[i + 1 :]
            groups.setdefault(k, {})[e0] = c
        top = max(groups)
        acc = Polynomial.zero(self.dom, self.n)
        for k in range(top, -1, -1):
            if k != top:
                acc = acc * g
            part = groups.get(k)
            if part:
                acc = acc + Polynomial(self.dom, self.n, part)
        return acc

    def evaluate(self, vals):
        """Full evaluation at domain elements vals (length n)."""
        dom = self.dom
        if len(vals) != self.n:
            raise InputError("wrong number of evaluation values")
        vals = [dom.normalize(v) for v in vals]
        total = dom.zero
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                for _ in range(k):
                    term = dom.mul(term, vals[i])
            total = dom.add(total, term)
        return total

    def map_coeffs(self, new_dom, fn):
        out = {}
        for e, c in self.terms.items():
            w = fn(c)
            if not new_dom.is_zero(w):
                out[e] = w
        return Polynomial(new_dom, self.n, out)

    def to_domain(self, new_dom):
        """Convert between coefficient domains along the canonical maps."""
        return self.map_coeffs(new_dom, new_dom.normalize)

    # text form (grammar: integers, X1..XN, + - * ^, parentheses)

    def to_str(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            parts.append(_term_str(self.dom, e, c, first=not parts))
        return "".join(parts)


def _coeff_str(dom, c):
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def _term_str(dom, exps, c, first):
    vars_part = "*".join(
        f"X{i + 1}^{k}" if k > 1 else f"X{i + 1}" for i, k in enumerate(exps) if k
    )
    cs = _coeff_str(dom, c)
    neg = cs.startswith("-")
    mag = cs[1:] if neg else cs
    if vars_part and mag == "1":
        body = vars_part
    elif vars_part:
        body = f"{mag}*{vars_part}"
    else:
        body = mag
    if first:
        return f"-{body}" if neg else body
    return f" - {body}" if neg else f" + {body}"


# paper-structural operations as module functions


def degrees(f):
    return f.degrees()


def split_xn(f):
    return f.split_xn()


def translate_te(f, e, inverse=False):
    """Apply X_i -> X_i +/- X_N^{e^{N-i}} for i < N (X_N fixed).

    A ring automorphism for every e > 1. Forward and inverse compose to the
    identity. Raises ExponentBlowup when e^{N-1} * deg f exceeds the cap.
    """
    if f.n == 0:
        raise NoVariables("translation needs at least one variable")
    if e <= 1:
        raise InputError("translation exponent must exceed 1")
    if not f.terms or f.n == 1:
        return f
    n = f.n
    cap = limits.te_cap()
    top = e ** (n - 1)
    d = f.degree()
    if top * max(d, 1) > cap:
        raise ExponentBlowup(f"e^(N-1)*deg = {top * max(d, 1)} exceeds cap {cap}")
    out = f
    for i in range(n - 1):
        power = e ** (n - 1 - i)
        shift = Polynomial(f.dom, n, {tuple(0 if j != n - 1 else power for j in range(n)): f.dom.one})
        g = Polynomial.var(f.dom, n, i) + (shift if not inverse else -shift)
        out = out.substitute(i, g)
    return out


def linear_change(f, c, inverse=False):
    """Apply X_i -> X_i +/- c_i * X_N for i < N (X_N fixed); automorphism."""
    if f.n == 0:
        raise NoVariables("change of variables needs at least one variable")
    if len(c) != f.n - 1:
        raise InputError(f"need {f.n - 1} change coefficients, got {len(c)}")
    out = f
    n = f.n
    for i, ci in enumerate(c):
        ci = f.dom.normalize(ci) if not isinstance(ci, int) else f.dom.from_int(ci)
        if f.dom.is_zero(ci):
            continue
        xn = Polynomial.var(f.dom, n, n - 1).scale(ci)
        g = Polynomial.var(f.dom, n, i) + (xn if not inverse else -xn)
        out = out.substitute(i, g)
    return out


def reduce_mod_p(f, p):
    """Image of a Z- or Z_(p)-coefficient polynomial in F_p[X]."""
    gf = GF(p)
    return f.map_coeffs(gf, gf.normalize)


def regular_xn_degree(f, p):
    """Degree s such that f mod p is unit-monic of degree s in X_N.

    Returns s when the reduction is nonzero with a constant nonzero
    X_N-leading coefficient, None otherwise (including zero reduction).
    """
    if f.n == 0:
        raise NoVariables("regularity needs at least one variable")
    fbar = reduce_mod_p(f, p)
    if not fbar.terms:
        return None
    s = fbar.degree_xn()
    lead = fbar.split_xn()[s]
    if lead.is_constant():
        return s
    return None


def pseudo_div_xn(f, g):
    """Pseudo-division by g in X_N: returns (k, q, r) with c^k f = q g + r,
    deg_XN(r) < deg_XN(g), where c is g's X_N-leading coefficient.

    c must be a nonzero constant (NonConstantLeading otherwise). k stays 0
    when c = 1 (plain Euclidean division).
    """
    if g.is_zero():
        raise Zero("pseudo-division by zero")
    if f.n == 0:
        raise NoVariables("pseudo-division needs at least one variable")
    dom = f.dom
    e = g.degree_xn()
    g_coeffs = g.split_xn()
    lead = g_coeffs[e]
    if not lead.is_constant():
        raise NonConstantLeading("X_N-leading coefficient of divisor is not constant")
    c = lead.constant_value()
    one = dom.eq(c, dom.one)
    k = 0
    q = Polynomial.zero(dom, f.n)
    r = f
    while r.terms and r.degree_xn() >= e:
        d = r.degree_xn()
        rd = r.split_xn()[d].lift_var().shift_xn(d - e)
        if one:
            q = q + rd
            r = r - rd * g
        else:
            k += 1
            q = q.scale(c) + rd
            r = r.scale(c) - rd * g
    return k, q, r


def exact_div_poly(f, g):
    """Exact quotient f / g in the polynomial ring, or None when not exact.

    Greedy leading-term division in graded-lex order; sound over any
    integral coefficient domain.
    """
    if g.is_zero():
        raise Zero("division by zero polynomial")
    dom = f.dom
    if not f.terms:
        return f
    ge, gc = g.leading()
    q = {}
    r = f
    while r.terms:
        re, rc = r.leading()
        de = tuple(a - b for a, b in zip(re, ge))
        if any(x < 0 for x in de):
            return None
        qc = dom.exact_div(rc, gc)
        if qc is None:
            return None
        q[de] = qc
        r = r - Polynomial(dom, f.n, {de: qc}) * g
    return Polynomial(dom, f.n, q)


def content_primitive(f):
    """(content, primitive) with content > 0, f = content * primitive."""
    if f.dom is not ZZ:
        raise InputError("content extraction is for integer polynomials")
    if not f.terms:
        raise Zero("zero polynomial has no content")
    g = 0
    for c in f.terms.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    prim = Polynomial(ZZ, f.n, {e: c // g for e, c in f.terms.items()})
    return g, prim


class Height:
    """Exact height data of a finite set of rationals.

    den_lcm is the lcm of reduced denominators, max_abs the maximum absolute
    value; log(den_lcm) + log+(max_abs) is the reported height. Exact until
    log_value is read.
    """

    __slots__ = ("den_lcm", "max_abs")

    def __init__(self, den_lcm, max_abs):
        self.den_lcm = den_lcm
        self.max_abs = max_abs

    @property
    def log_value(self):
        out = math.log(self.den_lcm) if self.den_lcm > 1 else 0.0
        if self.max_abs > 1:
            out += math.log(self.max_abs)
        return out

    def __float__(self):
        return self.log_value

    def __repr__(self):
        return f"Height(den_lcm={self.den_lcm}, max_abs={self.max_abs})"


def height_q(values):
    """Height of a finite set of rationals (or the coefficients of one
    polynomial / an iterable of polynomials over Z or Q)."""
    flat = []
    for v in values:
        if isinstance(v, Polynomial):
            flat.extend(v.terms.values())
        else:
            flat.append(v)
    den = 1
    top = Fraction(0)
    for v in flat:
        fv = Fraction(v)
        if not fv:
            continue
        den = den * fv.denominator // math.gcd(den, fv.denominator)
        if abs(fv) > top:
            top = abs(fv)
    return Height(den, top)
