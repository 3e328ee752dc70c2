"""Integer and rational arithmetic support: extended gcd, p-adic valuations,
deterministic primality testing and integer factorization.

All functions are exact. vp(0) returns the distinguished INF sentinel, which
compares greater than every integer.
"""

import math
from fractions import Fraction

from . import limits
from .errors import NotCoprime, NotPrime, ResourceLimit, Zero

INF = float("inf")

_SMALL_PRIME_BOUND = 10_000
_small_primes = None


def _sieve(bound):
    flags = bytearray([1]) * (bound + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(bound + 1) if flags[i]]


def _small_prime_list():
    global _small_primes
    if _small_primes is None:
        _small_primes = _sieve(_SMALL_PRIME_BOUND)
    return _small_primes


def ext_gcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g.

    ext_gcd(0, 0) = (0, 0, 0) by convention.
    """
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    if a == 0 and b == 0:
        return (0, 0, 0)
    return (old_r, old_x, old_y)


def combine_to_one(ds):
    """Coefficients (a_1..a_K) with sum a_k * ds[k] = 1.

    Raises NotCoprime when gcd(ds) != 1. Folds ext_gcd left to right.
    """
    if not ds:
        raise NotCoprime("empty list has gcd 0")
    coeffs = [0] * len(ds)
    g, x, _ = ext_gcd(ds[0], 0)
    coeffs[0] = x
    for k in range(1, len(ds)):
        g2, u, v = ext_gcd(g, ds[k])
        for i in range(k):
            coeffs[i] *= u
        coeffs[k] = v
        g = g2
    if g != 1:
        raise NotCoprime(f"gcd of combination set is {g}, not 1")
    assert sum(a * d for a, d in zip(coeffs, ds)) == 1
    return coeffs


def vp(a, p):
    """p-adic valuation of a rational (or integer). vp(0) is the INF sentinel."""
    if not is_probable_prime(p):
        raise NotPrime(f"{p} is not prime")
    if a == 0:
        return INF
    if isinstance(a, Fraction):
        return _vp_int(a.numerator, p) - _vp_int(a.denominator, p)
    return _vp_int(int(a), p)


def _vp_int(n, p):
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# Deterministic Miller-Rabin witness set for n < 3.3e24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DET_BOUND = 3_317_044_064_679_887_385_961_981


def _miller_rabin(n, a):
    if n % a == 0:
        return n == a
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a, n):
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n):
    # Selfridge parameter search, then a strong Lucas probable-prime test.
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -(d + 2) if d > 0 else -(d - 2)
    q = (1 - d) // 4
    k = n + 1
    s = 0
    while k % 2 == 0:
        k //= 2
        s += 1
    # Lucas sequence by binary ladder on (U, V, Q^m)
    u, v, qk = 1, 1, q % n
    for bit in bin(k)[3:]:
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (u + v) % n, (v + d * u) % n
            if u % 2:
                u += n
            if v % 2:
                v += n
            u, v = u // 2 % n, v // 2 % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def is_probable_prime(n):
    """Primality test: deterministic below 3.3e24 (fixed Miller-Rabin witness
    set), Baillie-PSW beyond."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    if n < _MR_DET_BOUND:
        return all(_miller_rabin(n, a) for a in _MR_WITNESSES)
    if not _miller_rabin(n, 2):
        return False
    r = math.isqrt(n)
    if r * r == n:
        return False
    return _strong_lucas(n)


def _brent_rho(n, budget):
    # Brent's cycle variant of Pollard rho; returns a nontrivial factor.
    if n % 2 == 0:
        return 2
    spent = 0
    for c in range(1, 1000):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                k += m
                spent += m
                if spent > budget:
                    raise ResourceLimit("factoring budget exhausted")
                g = math.gcd(q, n)
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
                spent += 1
                if spent > budget:
                    raise ResourceLimit("factoring budget exhausted")
        if g != n:
            return g
    raise ResourceLimit("rho failed to split within budget")


def factorize(n):
    """Prime factorization of |n| as a sorted list of (prime, multiplicity).

    factorize(1) = []. Raises Zero for n = 0 and ResourceLimit when the
    configured budget is exhausted.
    """
    if n == 0:
        raise Zero("cannot factor 0")
    n = abs(n)
    budget = limits.factor_budget()
    counts = {}
    for p in _small_prime_list():
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _brent_rho(m, budget)
        stack.append(d)
        stack.append(m // d)
    return sorted(counts.items())
