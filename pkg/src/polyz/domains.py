"""Coefficient domains: Z, Q, F_p, F_p(T) and the localization Z_(p).

A domain instance carries the element representation conventions and the
operations polynomials need. Element kinds:
  - ZZ: plain int
  - QQ: fractions.Fraction
  - GF(p): int reduced to 0..p-1
  - FpT(p): FpRat (reduced fraction of dense F_p[T] coefficient tuples)
  - ZLoc(p): Fraction whose denominator is coprime to p

The `kind` tag ("int" / "mod" / "op") selects the term-map kernel family.
"""

from fractions import Fraction
from functools import lru_cache

from .arith import INF, is_probable_prime, vp
from .errors import InputError, NotPrime, Zero


class Domain:
    kind = "op"
    is_field = False
    char = 0

    def __repr__(self):
        return self.name

    # scalar helpers shared by all domains
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a):
        return not a

    def eq(self, a, b):
        return a == b


class IntegerDomain(Domain):
    name = "Z"
    kind = "int"
    zero = 0
    one = 1

    def from_int(self, k):
        return int(k)

    def normalize(self, c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise InputError(f"{c} is not an integer")
            return c.numerator
        return int(c)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def exact_div(self, a, b):
        if b == 0:
            raise Zero("division by zero")
        q, r = divmod(a, b)
        return q if r == 0 else None

    def is_unit(self, a):
        return a == 1 or a == -1

    def inv(self, a):
        if not self.is_unit(a):
            raise InputError(f"{a} is not a unit in Z")
        return a


class RationalDomain(Domain):
    name = "Q"
    kind = "op"
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def normalize(self, c):
        return Fraction(c)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def exact_div(self, a, b):
        if not b:
            raise Zero("division by zero")
        return a / b

    def is_unit(self, a):
        return bool(a)

    def inv(self, a):
        if not a:
            raise Zero("inverse of zero")
        return 1 / a


class PrimeField(Domain):
    kind = "mod"
    is_field = True
    zero = 0
    one = 1

    def __init__(self, p):
        if not is_probable_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.char = p
        self.name = f"F{p}"

    def from_int(self, k):
        return k % self.p

    def normalize(self, c):
        if isinstance(c, Fraction):
            den = c.denominator % self.p
            if den == 0:
                raise InputError(f"denominator of {c} vanishes mod {self.p}")
            return c.numerator * pow(den, -1, self.p) % self.p
        return int(c) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def exact_div(self, a, b):
        if b % self.p == 0:
            raise Zero("division by zero")
        return a * pow(b, -1, self.p) % self.p

    def is_unit(self, a):
        return a % self.p != 0

    def inv(self, a):
        if a % self.p == 0:
            raise Zero("inverse of zero")
        return pow(a, -1, self.p)


# dense univariate arithmetic over F_p for the F_p(T) field; coefficient
# tuples c = (c_0, ..., c_d) with c_d != 0, () is the zero polynomial


def _u_trim(cs):
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _u_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _u_trim(out)


def _u_neg(a, p):
    return tuple(-c % p for c in a)


def _u_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _u_trim(out)


def _u_divmod(a, b, p):
    if not b:
        raise Zero("univariate division by zero")
    inv_lead = pow(b[-1], -1, p)
    rem = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = rem[k + len(b) - 1] * inv_lead % p
        if c:
            q[k] = c
            for i, cb in enumerate(b):
                rem[k + i] = (rem[k + i] - c * cb) % p
    return _u_trim(q), _u_trim(rem)


def _u_gcd(a, b, p):
    while b:
        _, r = _u_divmod(a, b, p)
        a, b = b, r
    if a:
        inv_lead = pow(a[-1], -1, p)
        a = tuple(c * inv_lead % p for c in a)
    return a


class FpRat:
    """Element of F_p(T): reduced num/den coefficient tuples, den monic."""

    __slots__ = ("p", "num", "den")

    def __init__(self, p, num, den=(1,), reduce=True):
        if reduce:
            num = _u_trim(num)
            den = _u_trim(den)
            if not den:
                raise Zero("zero denominator in F_p(T)")
            if not num:
                den = (1,)
            else:
                g = _u_gcd(num, den, p)
                if len(g) > 1:
                    num, _ = _u_divmod(num, g, p)
                    den, _ = _u_divmod(den, g, p)
                inv_lead = pow(den[-1], -1, p)
                if inv_lead != 1:
                    num = tuple(c * inv_lead % p for c in num)
                    den = tuple(c * inv_lead % p for c in den)
        self.p = p
        self.num = num
        self.den = den

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, FpRat):
            return self.p == other.p and self.num == other.num and self.den == other.den
        if isinstance(other, int):
            o = other % self.p
            return self.den == (1,) and (self.num == ((o,) if o else ()))
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.num, self.den))

    def __add__(self, other):
        p = self.p
        num = _u_add(_u_mul(self.num, other.den, p), _u_mul(other.num, self.den, p), p)
        return FpRat(p, num, _u_mul(self.den, other.den, p))

    def __sub__(self, other):
        p = self.p
        num = _u_add(_u_mul(self.num, other.den, p), _u_neg(_u_mul(other.num, self.den, p), p), p)
        return FpRat(p, num, _u_mul(self.den, other.den, p))

    def __neg__(self):
        return FpRat(self.p, _u_neg(self.num, self.p), self.den, reduce=False)

    def __mul__(self, other):
        p = self.p
        return FpRat(p, _u_mul(self.num, other.num, p), _u_mul(self.den, other.den, p))

    def __truediv__(self, other):
        if not other.num:
            raise Zero("division by zero in F_p(T)")
        p = self.p
        return FpRat(p, _u_mul(self.num, other.den, p), _u_mul(self.den, other.num, p))

    def __repr__(self):
        return f"FpRat({self.num}/{self.den} mod {self.p})"


class RationalFunctionField(Domain):
    """F_p(T), an infinite field of characteristic p."""

    kind = "op"
    is_field = True

    def __init__(self, p):
        if not is_probable_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.char = p
        self.name = f"F{p}(T)"
        self.zero = FpRat(p, (), reduce=False)
        self.one = FpRat(p, (1,), reduce=False)

    def from_int(self, k):
        k %= self.p
        return FpRat(self.p, (k,) if k else (), reduce=False)

    def t_power(self, k):
        """The element T^k."""
        return FpRat(self.p, (0,) * k + (1,), reduce=False)

    def from_coeffs(self, cs):
        return FpRat(self.p, tuple(c % self.p for c in cs))

    def normalize(self, c):
        if isinstance(c, FpRat):
            return c
        return self.from_int(int(c))

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def exact_div(self, a, b):
        return a / b

    def is_unit(self, a):
        return bool(a)

    def inv(self, a):
        return self.one / a


class LocalIntegers(Domain):
    """Z_(p): rationals with denominator coprime to p."""

    kind = "op"
    zero = Fraction(0)
    one = Fraction(1)

    def __init__(self, p):
        if not is_probable_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.name = f"Z({p})"

    def from_int(self, k):
        return Fraction(k)

    def normalize(self, c):
        c = Fraction(c)
        if c.denominator % self.p == 0:
            raise InputError(f"{c} is not in Z_({self.p}): denominator divisible by {self.p}")
        return c

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def exact_div(self, a, b):
        if not b:
            raise Zero("division by zero")
        q = a / b
        if q.denominator % self.p == 0:
            return None
        return q

    def is_unit(self, a):
        return bool(a) and vp(a, self.p) == 0

    def inv(self, a):
        if not self.is_unit(a):
            raise InputError(f"{a} is not a unit in Z_({self.p})")
        return 1 / a

    def valuation(self, a):
        return vp(a, self.p) if a else INF


ZZ = IntegerDomain()
QQ = RationalDomain()


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)


@lru_cache(maxsize=None)
def FpT(p):
    return RationalFunctionField(p)


@lru_cache(maxsize=None)
def ZLoc(p):
    return LocalIntegers(p)


def domain_for_tag(tag, prime=None):
    """Map a CLI ring tag to a domain instance."""
    if tag == "Z":
        return ZZ
    if tag == "Q":
        return QQ
    if tag == "Fp":
        if prime is None:
            raise InputError("ring Fp needs --prime")
        return GF(prime)
    if tag == "Zp":
        if prime is None:
            raise InputError("ring Zp needs --prime")
        return ZLoc(prime)
    raise InputError(f"unknown ring tag {tag!r} (expected Z, Q, Fp or Zp)")
