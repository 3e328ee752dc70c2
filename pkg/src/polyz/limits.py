"""Resource caps, overridable through environment variables.

Each cap is read at call time so tests can tighten or relax them without
re-importing. Defaults are sized for desk-scale inputs (matrices up to ~6x6,
degrees up to ~8); the recursion-internal systems the solvers build for
themselves are allowed to be larger.
"""

import os

_DEFAULTS = {
    # max C(m,r)*C(n,r) for exhaustive minor enumeration; beyond this the
    # greedy valuation pivot is used (or CombinatorialLimit in strict mode)
    "POLYZ_MINOR_CAP": 10_000,
    # max exponent e^{N-1}*deg f allowed in the Kronecker substitution
    "POLYZ_TE_CAP": 1_000_000,
    # max cells in an oracle coefficient matrix
    "POLYZ_ORACLE_CELLS": 10_000_000,
    # give up factoring beyond this many Brent-rho iterations per cofactor
    "POLYZ_FACTOR_BUDGET": 2_000_000,
    # matrix dimension up to which the local N=0 basis uses the
    # minimal-valuation-minor construction (beyond: kernel-lattice basis)
    "POLYZ_LOCAL_MINOR_DIM": 8,
    # saturation fixed-point iteration cap
    "POLYZ_SATURATE_ROUNDS": 64,
    # projected dense-cell count beyond which local elimination gives up
    "POLYZ_LOCAL_WORK": 20_000_000,
}


def _get(name):
    raw = os.environ.get(name)
    if raw is None:
        return _DEFAULTS[name]
    try:
        return int(raw)
    except ValueError:
        return _DEFAULTS[name]


def minor_cap():
    return _get("POLYZ_MINOR_CAP")


def minor_strict():
    """True when the minor cap should raise instead of falling back."""
    return os.environ.get("POLYZ_MINOR_STRICT", "") == "1"


def te_cap():
    return _get("POLYZ_TE_CAP")


def oracle_cells():
    return _get("POLYZ_ORACLE_CELLS")


def factor_budget():
    return _get("POLYZ_FACTOR_BUDGET")


def local_minor_dim():
    return _get("POLYZ_LOCAL_MINOR_DIM")


def saturate_rounds():
    return _get("POLYZ_SATURATE_ROUNDS")


def local_work():
    return _get("POLYZ_LOCAL_WORK")
