"""Matrices of polynomials: fraction-free rank/determinant/adjugate
computation (Bareiss and Montante eliminations), the (S)-form reduction used
by the elimination solvers, special solutions, and minimum-valuation minor
selection for the local theory.
"""

import math
from itertools import combinations

from . import limits
from .arith import INF, vp
from .errors import (
    CombinatorialLimit,
    InputError,
    InvariantViolation,
    SingularMinor,
    Zero,
    ZeroMatrix,
)
from .poly import Polynomial, exact_div_poly


class PolyMatrix:
    """Dense matrix of Polynomial entries over a common domain."""

    __slots__ = ("dom", "nvars", "rows", "m", "nc")

    def __init__(self, dom, nvars, rows, ncols=None):
        self.dom = dom
        self.nvars = nvars
        self.rows = [list(r) for r in rows]
        self.m = len(self.rows)
        self.nc = len(self.rows[0]) if self.rows else (ncols or 0)
        for r in self.rows:
            if len(r) != self.nc:
                raise InputError("ragged matrix")

    @classmethod
    def from_polys(cls, dom, nvars, rows):
        out = []
        for r in rows:
            out.append([f if isinstance(f, Polynomial) else Polynomial.const(dom, nvars, f) for f in r])
        return cls(dom, nvars, out)

    def is_zero(self):
        return all(f.is_zero() for r in self.rows for f in r)

    def entry(self, i, j):
        return self.rows[i][j]

    def col(self, j):
        return [r[j] for r in self.rows]

    def submatrix(self, row_idx, col_idx):
        return PolyMatrix(self.dom, self.nvars, [[self.rows[i][j] for j in col_idx] for i in row_idx])

    def mul_vec(self, y):
        if len(y) != self.nc:
            raise InputError("vector length mismatch")
        out = []
        for r in self.rows:
            acc = Polynomial.zero(self.dom, self.nvars)
            for a, b in zip(r, y):
                if a.terms and b.terms:
                    acc = acc + a * b
            out.append(acc)
        return out

    def map_entries(self, fn):
        return PolyMatrix(self.dom, self.nvars, [[fn(f) for f in r] for r in self.rows])

    def to_domain(self, new_dom):
        return PolyMatrix(new_dom, self.nvars, [[f.to_domain(new_dom) for f in r] for r in self.rows])

    def max_degree(self):
        d = float("-inf")
        for r in self.rows:
            for f in r:
                d = max(d, f.degree())
        return d

    def __repr__(self):
        return f"PolyMatrix({self.m}x{self.nc}, {self.dom.name}, nvars={self.nvars})"


def _pivot_weight(f):
    return (f.degree(), len(f.terms))


def _exact(num, den):
    q = exact_div_poly(num, den)
    if q is None:
        raise InvariantViolation("fraction-free elimination produced a non-exact division")
    return q


def bareiss_det(A):
    """Exact determinant of a square PolyMatrix (fraction-free, signed)."""
    r = A.m
    if r != A.nc:
        raise InputError("determinant of a non-square matrix")
    if r == 0:
        return Polynomial.one(A.dom, A.nvars)
    W = [list(row) for row in A.rows]
    one = Polynomial.one(A.dom, A.nvars)
    prev = one
    sign = 1
    for k in range(r - 1):
        if W[k][k].is_zero():
            swap = next((i for i in range(k + 1, r) if not W[i][k].is_zero()), None)
            if swap is None:
                return Polynomial.zero(A.dom, A.nvars)
            W[k], W[swap] = W[swap], W[k]
            sign = -sign
        piv = W[k][k]
        for i in range(k + 1, r):
            for j in range(k + 1, r):
                W[i][j] = _exact(piv * W[i][j] - W[i][k] * W[k][j], prev)
            W[i][k] = Polynomial.zero(A.dom, A.nvars)
        prev = piv
    det = W[r - 1][r - 1]
    return -det if sign < 0 else det


def rank_profile(A):
    """(rank, pivot row indices, pivot column indices) by fraction-free
    elimination; pivots chosen minimal by (degree, term count, row, column)."""
    W = [list(row) for row in A.rows]
    free_rows = list(range(A.m))
    free_cols = list(range(A.nc))
    kept_rows = []
    pivot_cols = []
    prev = Polynomial.one(A.dom, A.nvars)
    while free_rows and free_cols:
        best = None
        key = None
        for i in free_rows:
            for j in free_cols:
                f = W[i][j]
                if f.terms:
                    k = _pivot_weight(f) + (i, j)
                    if key is None or k < key:
                        key = k
                        best = (i, j)
        if best is None:
            break
        bi, bj = best
        piv = W[bi][bj]
        free_rows.remove(bi)
        free_cols.remove(bj)
        kept_rows.append(bi)
        pivot_cols.append(bj)
        for i in free_rows:
            for j in free_cols:
                W[i][j] = _exact(piv * W[i][j] - W[i][bj] * W[bi][j], prev)
            W[i][bj] = Polynomial.zero(A.dom, A.nvars)
        prev = piv
    return len(kept_rows), sorted(kept_rows), sorted(pivot_cols)


class SSystem:
    """Triangular form of a full-rank row selection: delta * y_{p_i} +
    sum over free columns l of C[i][l] * y_l = 0 for i = 1..r, where delta is
    a determinant of the pivot minor and C its adjugate action on the free
    columns. Solutions of the S-system with the dropped rows' dependence
    relations match solutions of the original system over the fraction
    field.
    """

    __slots__ = ("r", "kept_rows", "pivot_cols", "free_cols", "delta", "C", "dom", "nvars", "ncols")

    def __init__(self, r, kept_rows, pivot_cols, free_cols, delta, C, dom, nvars, ncols):
        self.r = r
        self.kept_rows = kept_rows
        self.pivot_cols = pivot_cols
        self.free_cols = free_cols
        self.delta = delta
        self.C = C
        self.dom = dom
        self.nvars = nvars
        self.ncols = ncols


def montante_adjugate(A, cols):
    """(delta, R) with delta = det of the square block A[:, cols] up to sign
    and R = delta * inverse(block) * rest, rest being the other columns in
    ascending order. Fraction-free Gauss-Jordan (Montante)."""
    r = A.m
    rest = [j for j in range(A.nc) if j not in set(cols)]
    order = list(cols) + rest
    W = [[A.rows[i][j] for j in order] for i in range(r)]
    n = len(order)
    zero = Polynomial.zero(A.dom, A.nvars)
    prev = Polynomial.one(A.dom, A.nvars)
    for k in range(r):
        if W[k][k].is_zero():
            swap = next((i for i in range(k + 1, r) if not W[i][k].is_zero()), None)
            if swap is None:
                raise SingularMinor("pivot block is singular")
            W[k], W[swap] = W[swap], W[k]
        piv = W[k][k]
        for i in range(r):
            if i == k:
                continue
            wik = W[i][k]
            for j in range(n):
                if j == k:
                    continue
                W[i][j] = _exact(piv * W[i][j] - wik * W[k][j], prev)
            W[i][k] = zero
        prev = piv
    delta = W[0][0]
    for k in range(1, r):
        if W[k][k] != delta:
            raise InvariantViolation("Montante elimination left unequal diagonal entries")
    R = [[W[i][r + t] for t in range(len(rest))] for i in range(r)]
    return delta, R


def reduce_to_s(A):
    """Reduce A y = 0 to its (S)-form on a maximal nonsingular minor."""
    if A.is_zero():
        raise ZeroMatrix("zero matrix has no (S)-form")
    r, kept, pivots = rank_profile(A)
    sub = A.submatrix(kept, list(range(A.nc)))
    delta, C = montante_adjugate(sub, pivots)
    free = [j for j in range(A.nc) if j not in set(pivots)]
    return SSystem(r, kept, pivots, free, delta, C, A.dom, A.nvars, A.nc)


def special_solutions(S):
    """One solution per free column: y_free = delta there, y_{p_i} = -C[i][l],
    zero elsewhere. Exactly the classical n - r independent solutions."""
    out = []
    zero = Polynomial.zero(S.dom, S.nvars)
    for t, l in enumerate(S.free_cols):
        y = [zero] * S.ncols
        y[l] = S.delta
        for i, pc in enumerate(S.pivot_cols):
            y[pc] = -S.C[i][t]
        out.append(y)
    return out


def poly_vp(f, p):
    """Gauss valuation: minimum p-adic valuation of the coefficients."""
    if not f.terms:
        return INF
    return min(vp(c, p) for c in f.terms.values())


def min_valuation_minor(A, p, r):
    """A nonsingular r x r minor of minimal Gauss valuation.

    Returns (row_idx, col_idx, delta, mu). Exhausts all minors when the
    count fits the configured cap; otherwise uses greedy fraction-free
    pivoting on valuation (each Bareiss entry is a bordered minor, so each
    step picks the valuation-minimal extension), which reaches the global
    minimum because the minimum over nested DVR minors is attained greedily.
    In strict mode the fallback raises CombinatorialLimit instead.
    """
    if r < 1:
        raise InputError("minor size must be positive")
    count = math.comb(A.m, r) * math.comb(A.nc, r)
    if count <= limits.minor_cap():
        best = None
        for rows in combinations(range(A.m), r):
            for cols in combinations(range(A.nc), r):
                d = bareiss_det(A.submatrix(rows, cols))
                if d.is_zero():
                    continue
                mu = poly_vp(d, p)
                if best is None or mu < best[3]:
                    best = (list(rows), list(cols), d, mu)
        if best is None:
            raise SingularMinor(f"no nonsingular {r}x{r} minor")
        return best
    if limits.minor_strict():
        raise CombinatorialLimit(f"{count} minors exceed the enumeration cap")
    W = [list(row) for row in A.rows]
    free_rows = list(range(A.m))
    free_cols = list(range(A.nc))
    sel_rows = []
    sel_cols = []
    prev = Polynomial.one(A.dom, A.nvars)
    for _ in range(r):
        best = None
        key = None
        for i in free_rows:
            for j in free_cols:
                f = W[i][j]
                if f.terms:
                    k = (poly_vp(f, p), i, j)
                    if key is None or k < key:
                        key = k
                        best = (i, j)
        if best is None:
            raise SingularMinor(f"rank below requested minor size {r}")
        bi, bj = best
        piv = W[bi][bj]
        free_rows.remove(bi)
        free_cols.remove(bj)
        sel_rows.append(bi)
        sel_cols.append(bj)
        for i in free_rows:
            for j in free_cols:
                W[i][j] = _exact(piv * W[i][j] - W[i][bj] * W[bi][j], prev)
            W[i][bj] = Polynomial.zero(A.dom, A.nvars)
        prev = piv
    rows = sorted(sel_rows)
    cols = sorted(sel_cols)
    delta = bareiss_det(A.submatrix(rows, cols))
    return rows, cols, delta, poly_vp(delta, p)
