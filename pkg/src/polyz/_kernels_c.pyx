# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-map and sparse-row kernels; semantics match _kernels_py."""

from math import gcd

BACKEND = "cython"


cdef inline tuple _etuple_add(tuple ea, tuple eb):
    cdef Py_ssize_t i, n = len(ea)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = ea[i] + eb[i]
    return tuple(out)


def tm_add_int(dict A, dict B):
    cdef dict out = dict(A)
    cdef object e, c, v
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


def tm_mul_int(dict A, dict B):
    cdef dict out = {}
    cdef object ea, ca, eb, cb, v
    cdef tuple e
    if len(A) > len(B):
        A, B = B, A
    for ea, ca in A.items():
        for eb, cb in B.items():
            e = _etuple_add(<tuple> ea, <tuple> eb)
            v = out.get(e)
            if v is None:
                out[e] = ca * cb
            else:
                v = v + ca * cb
                if v:
                    out[e] = v
                else:
                    del out[e]
    return out


def tm_scale_int(dict A, object c):
    cdef dict out = {}
    cdef object e, v
    if c == 0:
        return out
    for e, v in A.items():
        out[e] = c * v
    return out


def tm_add_mod(dict A, dict B, object p):
    cdef dict out = dict(A)
    cdef object e, c, v
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


def tm_mul_mod(dict A, dict B, object p):
    cdef dict out = {}
    cdef object ea, ca, eb, cb, v
    cdef tuple e
    if len(A) > len(B):
        A, B = B, A
    for ea, ca in A.items():
        for eb, cb in B.items():
            e = _etuple_add(<tuple> ea, <tuple> eb)
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


def tm_scale_mod(dict A, object c, object p):
    cdef dict out = {}
    cdef object e, v, w
    c = c % p
    if c == 0:
        return out
    for e, v in A.items():
        w = v * c % p
        if w:
            out[e] = w
    return out


def tm_add_obj(dict A, dict B):
    cdef dict out = dict(A)
    cdef object e, c, v
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


def tm_mul_obj(dict A, dict B):
    cdef dict out = {}
    cdef object ea, ca, eb, cb, v
    cdef tuple e
    if len(A) > len(B):
        A, B = B, A
    for ea, ca in A.items():
        for eb, cb in B.items():
            e = _etuple_add(<tuple> ea, <tuple> eb)
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


def tm_scale_obj(dict A, object c):
    cdef dict out = {}
    cdef object e, v, w
    if not c:
        return out
    for e, v in A.items():
        w = v * c
        if w:
            out[e] = w
    return out


def row_combine_int(dict row, dict prow, object a, object b):
    cdef dict out = {}
    cdef object j, v, w
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
            w = w - b * v
            if w:
                out[j] = w
            else:
                del out[j]
    return out


def row_gcd(dict row):
    cdef object g = 0
    cdef object v
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


def row_div_int(dict row, object g):
    cdef dict out = {}
    cdef object j, v
    for j, v in row.items():
        out[j] = v // g
    return out


def row_combine_mod(dict row, dict prow, object a, object b, object p):
    cdef dict out = {}
    cdef object j, v, w
    a = a % p
    b = b % p
    if a != 1:
        for j, v in row.items():
            w = a * v % p
            if w:
                out[j] = w
    else:
        out.update(row)
    for j, v in prow.items():
        w = (out.get(j, 0) - b * v) % p
        if w:
            out[j] = w
        elif j in out:
            del out[j]
    return out


def row_combine_obj(dict row, dict prow, object a, object b):
    cdef dict out = {}
    cdef object j, v, w
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
