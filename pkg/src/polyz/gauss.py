"""Exact linear algebra over constant coefficients: fraction-free echelon
over Q with denominator tracking, modular and generic-field elimination, and
integer kernel lattice bases. Rows are sparse dicts {column: coefficient}.

These are the base cases of the polynomial solvers (zero remaining
variables), so they are written for speed on sparse integer data.
"""

import math
from fractions import Fraction

from ._kernels import (
    row_combine_int,
    row_combine_mod,
    row_combine_obj,
    row_div_int,
    row_gcd,
)
from .errors import InputError, InvariantViolation


def _clear_row(row):
    """Integer sparse row from a rational one (scaled by denominator lcm)."""
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = den * v.denominator // math.gcd(den, v.denominator)
    out = {}
    for c, v in row.items():
        w = int(v * den) if isinstance(v, Fraction) else v * den
        if w:
            out[c] = w
    g = row_gcd(out)
    if g > 1:
        out = row_div_int(out, g)
    return out


def _echelon_int(rows, ncols):
    """Fraction-free reduced echelon form.

    Returns (pivots, spent) where pivots is a list of (col, row) in ascending
    column order; every pivot row is eliminated against all later pivots, so
    it touches only its pivot column and free columns.
    """
    work = [_clear_row(r) for r in rows]
    work = [r for r in work if r]
    pivots = []
    for col in range(ncols):
        best = -1
        for i, r in enumerate(work):
            if r is not None and col in r:
                if best < 0 or abs(r[col]) < abs(work[best][col]):
                    best = i
        if best < 0:
            continue
        prow = work[best]
        work[best] = None
        a = prow[col]
        for i, r in enumerate(work):
            if r is not None and col in r:
                b = r[col]
                g = math.gcd(a, b)
                r2 = row_combine_int(r, prow, a // g, b // g)
                g2 = row_gcd(r2)
                if g2 > 1:
                    r2 = row_div_int(r2, g2)
                work[i] = r2 or None
        for j, (pc, pr) in enumerate(pivots):
            if col in pr:
                b = pr[col]
                g = math.gcd(a, b)
                r2 = row_combine_int(pr, prow, a // g, b // g)
                g2 = row_gcd(r2)
                if g2 > 1:
                    r2 = row_div_int(r2, g2)
                pivots[j] = (pc, r2)
        pivots.append((col, prow))
    pivots.sort(key=lambda t: t[0])
    return pivots


def kernel_basis_q(rows, ncols):
    """Kernel of an integer/rational sparse matrix, cleared to Z-vectors.

    Returns (vectors, dens): vectors are primitive integer lists of length
    ncols, one per free column f with vector[f] = dens[k] > 0; a rational
    kernel element y decomposes as sum over free columns of
    (y[f] / dens[k]) * vectors[k].
    """
    pivots = _echelon_int(rows, ncols)
    pivot_cols = {c for c, _ in pivots}
    vectors = []
    dens = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for c, r in pivots:
            if f in r:
                x[c] = Fraction(-r[f], r[c])
        den = 1
        for v in x:
            den = den * v.denominator // math.gcd(den, v.denominator)
        w = [int(v * den) for v in x]
        g = 0
        for v in w:
            g = math.gcd(g, v)
        if g > 1:
            w = [v // g for v in w]
        vectors.append(w)
        dens.append(w[f])
    return vectors, dens


def echelon_pivots_int(rows, ncols):
    """Pivot values of the reduced fraction-free echelon form.

    Every denominator of a rational solution of A x = b with integer data
    divides a product of powers of these values.
    """
    return [r[c] for c, r in _echelon_int(rows, ncols)]


def solve_q(rows, b, ncols):
    """One rational solution of A x = b, or None. Free variables set to 0."""
    aug = []
    for i, r in enumerate(rows):
        r2 = dict(r)
        bi = b[i] if i < len(b) else 0
        if bi:
            r2[ncols] = -bi
        aug.append(r2)
    pivots = _echelon_int(aug, ncols + 1)
    x = [Fraction(0)] * (ncols + 1)
    x[ncols] = Fraction(1)
    for c, r in pivots:
        if c == ncols:
            return None
        if ncols in r:
            x[c] = Fraction(-r[ncols], r[c])
    return x[:ncols]


def rank_q(rows, ncols):
    return len(_echelon_int(rows, ncols))


def rank_mod(rows, ncols, p):
    return len(_echelon_mod(rows, ncols, p))


def _echelon_mod(rows, ncols, p):
    work = []
    for r in rows:
        r2 = {c: v % p for c, v in r.items() if v % p}
        if r2:
            work.append(r2)
    pivots = []
    for col in range(ncols):
        best = -1
        for i, r in enumerate(work):
            if r is not None and col in r:
                best = i
                break
        if best < 0:
            continue
        prow = work[best]
        work[best] = None
        inv = pow(prow[col], -1, p)
        prow = {c: (v * inv) % p for c, v in prow.items()}
        for i, r in enumerate(work):
            if r is not None and col in r:
                r2 = row_combine_mod(r, prow, 1, r[col], p)
                work[i] = r2 or None
        for j, (pc, pr) in enumerate(pivots):
            if col in pr:
                pivots[j] = (pc, row_combine_mod(pr, prow, 1, pr[col], p))
        pivots.append((col, prow))
    pivots.sort(key=lambda t: t[0])
    return pivots


def kernel_basis_mod(rows, ncols, p):
    """Kernel basis over F_p; vectors are integer lists with entries in 0..p-1,
    one per free column (entry 1 there)."""
    pivots = _echelon_mod(rows, ncols, p)
    pivot_cols = {c for c, _ in pivots}
    vectors = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        x = [0] * ncols
        x[f] = 1
        for c, r in pivots:
            if f in r:
                x[c] = (-r[f]) % p
        vectors.append(x)
    return vectors


def solve_mod(rows, b, ncols, p):
    aug = []
    for i, r in enumerate(rows):
        r2 = {c: v % p for c, v in r.items() if v % p}
        bi = b[i] % p if i < len(b) else 0
        if bi:
            r2[ncols] = (-bi) % p
        aug.append(r2)
    pivots = _echelon_mod(aug, ncols + 1, p)
    x = [0] * (ncols + 1)
    x[ncols] = 1
    for c, r in pivots:
        if c == ncols:
            return None
        if ncols in r:
            x[c] = (-r[ncols]) % p
    return x[:ncols]


def _echelon_op(rows, ncols, dom):
    work = []
    for r in rows:
        r2 = {c: v for c, v in r.items() if v}
        if r2:
            work.append(r2)
    one = dom.one
    pivots = []
    for col in range(ncols):
        best = -1
        for i, r in enumerate(work):
            if r is not None and col in r:
                best = i
                break
        if best < 0:
            continue
        prow = work[best]
        work[best] = None
        inv = dom.inv(prow[col])
        prow = {c: dom.mul(v, inv) for c, v in prow.items()}
        for i, r in enumerate(work):
            if r is not None and col in r:
                r2 = row_combine_obj(r, prow, one, r[col])
                work[i] = r2 or None
        for j, (pc, pr) in enumerate(pivots):
            if col in pr:
                pivots[j] = (pc, row_combine_obj(pr, prow, one, pr[col]))
        pivots.append((col, prow))
    pivots.sort(key=lambda t: t[0])
    return pivots


def kernel_basis_op(rows, ncols, dom):
    """Kernel basis over a generic field; vectors are lists of dom elements."""
    pivots = _echelon_op(rows, ncols, dom)
    pivot_cols = {c for c, _ in pivots}
    vectors = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        x = [dom.zero] * ncols
        x[f] = dom.one
        for c, r in pivots:
            if f in r:
                x[c] = dom.neg(r[f])
        vectors.append(x)
    return vectors


def solve_op(rows, b, ncols, dom):
    aug = []
    for i, r in enumerate(rows):
        r2 = {c: v for c, v in r.items() if v}
        bi = b[i] if i < len(b) else dom.zero
        if bi:
            r2[ncols] = dom.neg(bi)
        aug.append(r2)
    pivots = _echelon_op(aug, ncols + 1, dom)
    x = [dom.zero] * (ncols + 1)
    x[ncols] = dom.one
    for c, r in pivots:
        if c == ncols:
            return None
        if ncols in r:
            x[c] = dom.neg(r[ncols])
    return x[:ncols]


def _vp_int(v, p):
    k = 0
    while v % p == 0:
        v //= p
        k += 1
    return k


def kernel_lattice_at_p(rows, ncols, p):
    """Integer vectors generating {x : A x = 0} over Z localized at p.

    Works on [A^T | I]: each column is cleared in one pass against a live
    row whose entry has minimal p-valuation, combining rows as
    (b/g) row - (a/g) pivot with g = gcd(a, b), so rows are only ever
    scaled by p-units, and stripping the content of every result. Rows
    whose A^T part vanishes carry the generators in the identity part;
    their span over Z localized at p is the full solution module there.
    """
    nrows = len(rows)
    work = []
    for j in range(ncols):
        merged = {j + nrows: 1}
        for i, r in enumerate(rows):
            v = r.get(j, 0)
            if v:
                merged[i] = v
        work.append(merged)
    for col in range(nrows):
        best = -1
        key = None
        for i, r in enumerate(work):
            v = r.get(col)
            if v:
                cand = (_vp_int(v, p), abs(v))
                if best < 0 or cand < key:
                    best = i
                    key = cand
        if best < 0:
            continue
        pivot = work.pop(best)
        b = pivot[col]
        for i, r in enumerate(work):
            a = r.get(col)
            if not a:
                continue
            g = math.gcd(a, b)
            r2 = row_combine_int(r, pivot, b // g, a // g)
            g2 = row_gcd(r2)
            if g2 > 1:
                r2 = row_div_int(r2, g2)
            work[i] = r2
    basis = []
    for r in work:
        vec = [0] * ncols
        for c, v in r.items():
            if c < nrows:
                raise InvariantViolation("column clearing left a nonzero residual")
            vec[c - nrows] = v
        basis.append(vec)
    basis.sort()
    return basis
