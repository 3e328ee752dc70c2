"""Explicit degree-bound formulas and audit reports: the elimination bound
(2md)^(2^N), the flatness bound (2md)^(2((N+1)^N - 1)), monomial counts, and
comparison of observed run data against the certified values.
"""

import json
import math

from .errors import InputError


def beta(N, d, m):
    """Elimination degree bound (2md)^(2^N)."""
    if d < 1 or m < 1 or N < 0:
        raise InputError("beta needs d >= 1, m >= 1, N >= 0")
    return (2 * m * d) ** (2 ** N)


def flat_bound(N, d, m):
    """Flatness degree bound (2md)^(2((N+1)^N - 1))."""
    if d < 1 or m < 1 or N < 0:
        raise InputError("flat_bound needs d >= 1, m >= 1, N >= 0")
    return (2 * m * d) ** (2 * ((N + 1) ** N - 1))


def e_level_bound(nu, N, d, m):
    """Certified bound (md+1)^((N+2)^nu) on the exponent e at recursion
    depth nu of the local solver.

    The depth-0 exponent is at most md+1. One descent step from a level
    with k variables keeps entry degrees bounded by d while the derived
    row count is at most (e-1)(r+1)e^(k-1) < e^(k+1), so the next exponent
    is below e^(k+2); iterating from k = N and bounding every factor by
    N+2 gives the closed form. The deepest level has nu = N.
    """
    if d < 1 or m < 1 or N < 0 or not 0 <= nu <= N:
        raise InputError("e_level_bound needs d,m >= 1 and 0 <= nu <= N")
    return (m * d + 1) ** ((N + 2) ** nu)


def mono_count(N, d):
    """Number of monomials of degree <= d in N variables."""
    if N < 0 or d < 0:
        raise InputError("mono_count needs N, d >= 0")
    return math.comb(N + d, N)


class BoundReport:
    """Observed-versus-certified audit of one solver run."""

    __slots__ = (
        "N",
        "d",
        "m",
        "n",
        "h_input",
        "beta_value",
        "flat_value",
        "observed_degree",
        "observed_height",
        "field_pass",
        "local_pass",
        "trace",
    )

    def __init__(self, N, d, m, n, h_input, beta_value, flat_value,
                 observed_degree, observed_height, field_pass, local_pass, trace):
        self.N = N
        self.d = d
        self.m = m
        self.n = n
        self.h_input = h_input
        self.beta_value = beta_value
        self.flat_value = flat_value
        self.observed_degree = observed_degree
        self.observed_height = observed_height
        self.field_pass = field_pass
        self.local_pass = local_pass
        self.trace = trace

    @property
    def ok(self):
        return self.field_pass and self.local_pass

    def to_dict(self):
        return {
            "N": self.N,
            "d": self.d,
            "m": self.m,
            "n": self.n,
            "h_input": self.h_input,
            "beta": str(self.beta_value),
            "flat": str(self.flat_value),
            "observed_degree": self.observed_degree,
            "observed_height": self.observed_height,
            "field_pass": self.field_pass,
            "local_pass": self.local_pass,
            "trace": self.trace,
            "ok": self.ok,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def audit(N, d, m, n, h_input, field_degrees, local_degrees, observed_height, trace=None):
    """Compare observed output degrees against the certified bounds.

    field_degrees / local_degrees are the maximum total degrees of outputs
    with elimination / flatness provenance (None when that phase did not
    run). Mutates nothing; returns a BoundReport.
    """
    d_eff = max(d, 1)
    m_eff = max(m, 1)
    bv = beta(N, d_eff, m_eff)
    fv = flat_bound(N, d_eff, m_eff)
    field_obs = -1 if field_degrees is None else field_degrees
    local_obs = -1 if local_degrees is None else local_degrees
    field_pass = field_obs <= bv
    local_pass = local_obs <= fv
    observed = max(field_obs, local_obs)
    return BoundReport(
        N, d, m, n, h_input, bv, fv,
        observed if observed >= 0 else None,
        observed_height,
        field_pass, local_pass,
        trace if trace is not None else [],
    )
