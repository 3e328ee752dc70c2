"""Pure-Python term-map and sparse-row kernels.

A term map is a dict {exponent tuple: coefficient} with no zero coefficients.
A sparse row is a dict {column index: coefficient} with no zero entries.
These functions are the hot loops of the whole package; polyz._kernels_c is the
compiled twin with identical semantics.
"""

from math import gcd
from operator import add as _add

BACKEND = "python"


# term maps over plain integers


def tm_add_int(A, B):
    out = dict(A)
    for e, c in B.items():
        v = out.get(e)
        if v is None:
            out[e] = c
        else:
            v += c
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def tm_mul_int(A, B):
    if len(A) > len(B):
        A, B = B, A
    out = {}
    for ea, ca in A.items():
        for eb, cb in B.items():
            e = tuple(map(_add, ea, eb))
            v = out.get(e)
            if v is None:
                out[e] = ca * cb
            else:
                v += ca * cb
                if v:
                    out[e] = v
                else:
                    del out[e]
    return out


def tm_scale_int(A, c):
    if c == 0:
        return {}
    return {e: c * v for e, v in A.items()}


# term maps over Z/p (coefficients normalized to 0..p-1)


def tm_add_mod(A, B, p):
    out = dict(A)
    for e, c in B.items():
        v = out.get(e)
        if v is None:
            out[e] = c
        else:
            v = (v + c) % p
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def tm_mul_mod(A, B, p):
    if len(A) > len(B):
        A, B = B, A
    out = {}
    for ea, ca in A.items():
        for eb, cb in B.items():
            e = tuple(map(_add, ea, eb))
            v = out.get(e)
            if v is None:
                v = ca * cb % p
            else:
                v = (v + ca * cb) % p
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


def tm_scale_mod(A, c, p):
    c %= p
    if c == 0:
        return {}
    out = {}
    for e, v in A.items():
        w = v * c % p
        if w:
            out[e] = w
    return out


# term maps over operator-closed coefficient objects (Fraction, F_p(T), ...)


def tm_add_obj(A, B):
    out = dict(A)
    for e, c in B.items():
        v = out.get(e)
        if v is None:
            out[e] = c
        else:
            v = v + c
            if v:
                out[e] = v
            else:
                del out[e]
    return out


def tm_mul_obj(A, B):
    if len(A) > len(B):
        A, B = B, A
    out = {}
    for ea, ca in A.items():
        for eb, cb in B.items():
            e = tuple(map(_add, ea, eb))
            v = out.get(e)
            if v is None:
                v = ca * cb
            else:
                v = v + ca * cb
            if v:
                out[e] = v
            elif e in out:
                del out[e]
    return out


def tm_scale_obj(A, c):
    if not c:
        return {}
    out = {}
    for e, v in A.items():
        w = v * c
        if w:
            out[e] = w
    return out


# sparse rows


def row_combine_int(row, prow, a, b):
    """a*row - b*prow with zero entries dropped."""
    out = {}
    if a == 1:
        out.update(row)
    else:
        for j, v in row.items():
            out[j] = a * v
    for j, v in prow.items():
        w = out.get(j)
        if w is None:
            out[j] = -b * v
        else:
            w -= b * v
            if w:
                out[j] = w
            else:
                del out[j]
    return out


def row_gcd(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def row_div_int(row, g):
    return {j: v // g for j, v in row.items()}


def row_combine_mod(row, prow, a, b, p):
    out = {}
    a %= p
    b %= p
    if a != 1:
        for j, v in row.items():
            w = a * v % p
            if w:
                out[j] = w
    else:
        out.update(row)
    for j, v in prow.items():
        w = out.get(j, 0) - b * v
        w %= p
        if w:
            out[j] = w
        elif j in out:
            del out[j]
    return out


def row_combine_obj(row, prow, a, b):
    out = {}
    for j, v in row.items():
        out[j] = a * v
    for j, v in prow.items():
        w = out.get(j)
        if w is None:
            out[j] = -(b * v)
        else:
            w = w - b * v
            if w:
                out[j] = w
            else:
                del out[j]
    return out
