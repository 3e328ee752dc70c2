"""Independent brute-force verifier.

Degree-truncated membership and syzygy questions over Z[X] reduce to exact
integer linear algebra on coefficient matrices. The integer solving here is
a self-contained Hermite-style column reduction kept deliberately separate
from the solver stack, so oracle verdicts share no code path with the
solvers beyond polynomial arithmetic.

Absence is one-sided: "no certificate of degree <= B" never proves
non-membership.
"""

from . import limits
from .bounds import mono_count
from .domains import ZZ
from .errors import InputError, InvariantViolation, ResourceLimit
from .poly import Polynomial


def _monomials(N, B):
    """Exponent tuples of total degree <= B in graded lexicographic order."""
    if N == 0:
        return [()]
    out = []

    def rec(prefix, budget):
        if len(prefix) == N - 1:
            for a in range(budget + 1):
                out.append(prefix + (a,))
            return
        for a in range(budget + 1):
            rec(prefix + (a,), budget - a)

    rec((), B)
    out.sort(key=lambda e: (sum(e), e))
    return out


class CoefficientSystem:
    """Integer matrix of the map (g_1..g_n of degree <= B) -> sum g_j f_j,
    restricted to output degrees <= B + d, stored column-wise."""

    __slots__ = ("cols", "nrows", "col_monos", "row_index", "n", "nvars")

    def __init__(self, rows_of_polys, nvars, B, d):
        col_monos = _monomials(nvars, B)
        row_monos = _monomials(nvars, B + d)
        m = len(rows_of_polys)
        n = len(rows_of_polys[0]) if m else 0
        cells = m * len(row_monos) * n * len(col_monos)
        if cells > limits.oracle_cells():
            raise ResourceLimit(
                f"coefficient system of {cells} cells exceeds the oracle cap"
            )
        self.n = n
        self.nvars = nvars
        self.col_monos = col_monos
        self.row_index = {mu: i for i, mu in enumerate(row_monos)}
        self.nrows = m * len(row_monos)
        self.cols = []
        stride = len(row_monos)
        for j in range(n):
            for e in col_monos:
                col = [0] * self.nrows
                for i in range(m):
                    f = rows_of_polys[i][j]
                    for eps, c in f.terms.items():
                        mu = tuple(a + b for a, b in zip(eps, e))
                        idx = self.row_index.get(mu)
                        if idx is None:
                            raise InvariantViolation("product degree escaped the row range")
                        col[i * stride + idx] += c
                self.cols.append(col)

    def vector_to_polys(self, x):
        M = len(self.col_monos)
        out = []
        for j in range(self.n):
            terms = {}
            for k, e in enumerate(self.col_monos):
                v = x[j * M + k]
                if v:
                    terms[e] = v
            out.append(Polynomial(ZZ, self.nvars, terms))
        return out


def _col_sub(a, b, q):
    for i in range(len(a)):
        a[i] -= q * b[i]


def _column_echelon(cols, nrows):
    """Column echelon form by unimodular column operations.

    Returns (cols, U, pivots): cols is mutated in place, U holds the applied
    transform as columns (cols_out = cols_in * U), and pivots lists
    (row, col) positions. Columns without a pivot end up identically zero.
    """
    n = len(cols)
    U = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    lead = 0
    pivots = []
    for r in range(nrows):
        if lead >= n:
            break
        while True:
            live = [j for j in range(lead, n) if cols[j][r]]
            if not live:
                break
            j0 = min(live, key=lambda j: (abs(cols[j][r]), j))
            others = [j for j in live if j != j0]
            if not others:
                if j0 != lead:
                    cols[lead], cols[j0] = cols[j0], cols[lead]
                    U[lead], U[j0] = U[j0], U[lead]
                if cols[lead][r] < 0:
                    cols[lead] = [-v for v in cols[lead]]
                    U[lead] = [-v for v in U[lead]]
                pivots.append((r, lead))
                lead += 1
                break
            a = cols[j0][r]
            for j in others:
                q = cols[j][r] // a
                if q:
                    _col_sub(cols[j], cols[j0], q)
                    _col_sub(U[j], U[j0], q)
    return cols, U, pivots


def _solve_int(cols, U, pivots, b, n):
    piv_by_row = dict(pivots)
    z = [0] * n
    for r in range(len(b)):
        residual = b[r]
        for rr, c in pivots:
            if rr >= r:
                break
            if cols[c][r] and z[c]:
                residual -= cols[c][r] * z[c]
        c = piv_by_row.get(r)
        if c is None:
            if residual:
                return None
        else:
            a = cols[c][r]
            if residual % a:
                return None
            z[c] = residual // a
    x = [0] * n
    for c in range(n):
        if z[c]:
            Uc = U[c]
            for i in range(n):
                if Uc[i]:
                    x[i] += z[c] * Uc[i]
    return x


def _kernel_columns(cols, U, pivots):
    pivot_cols = {c for _, c in pivots}
    basis = []
    for j in range(len(cols)):
        if j in pivot_cols:
            continue
        if any(cols[j]):
            raise InvariantViolation("non-pivot column is not zero after reduction")
        basis.append(list(U[j]))
    return basis


def member_bounded_z(f0, fs, B):
    """Cofactors of degree <= B with sum g_j fs_j = f0 over Z[X], or None.

    A None verdict means only that no certificate of degree <= B exists;
    negative B is the empty search and returns None for nonzero f0.
    """
    if f0.dom is not ZZ:
        raise InputError("the oracle works over the integers")
    nv = f0.n
    for f in fs:
        if f.dom is not ZZ or f.n != nv:
            raise InputError("generators from a different ring")
    if f0.is_zero():
        return [Polynomial.zero(ZZ, nv) for _ in fs]
    if B < 0 or not fs:
        return None
    d = max(max((f.degree() for f in fs if f.terms), default=0), 0)
    if f0.terms and f0.degree() > B + d:
        return None
    system = CoefficientSystem([list(fs)], nv, B, d)
    b = [0] * system.nrows
    for mu, c in f0.terms.items():
        b[system.row_index[mu]] = c
    cols, U, pivots = _column_echelon(system.cols, system.nrows)
    x = _solve_int(cols, U, pivots, b, len(cols))
    if x is None:
        return None
    gs = system.vector_to_polys(x)
    acc = Polynomial.zero(ZZ, nv)
    for g, f in zip(gs, fs):
        acc = acc + g * f
    if not (acc - f0).is_zero():
        raise InvariantViolation("oracle certificate failed the round trip")
    return gs


def syzygy_bounded_z(A, B):
    """Basis of the lattice of solutions y of A y = 0 with deg y <= B.

    Every returned vector solves the system exactly; together they span all
    integer solutions of degree <= B (as a lattice under coefficientwise
    addition).
    """
    if A.dom is not ZZ:
        raise InputError("the oracle works over the integers")
    if B < 0 or A.nc == 0:
        return []
    nv = A.nvars
    d = max(A.max_degree(), 0)
    system = CoefficientSystem([list(row) for row in A.rows], nv, B, d)
    cols, U, pivots = _column_echelon(system.cols, system.nrows)
    basis = _kernel_columns(cols, U, pivots)
    out = []
    for x in basis:
        y = system.vector_to_polys(x)
        for v in A.mul_vec(y):
            if v.terms:
                raise InvariantViolation("oracle kernel vector failed the round trip")
        out.append(y)
    out.sort(key=lambda y: tuple(tuple(sorted(f.terms.items())) for f in y))
    return out
