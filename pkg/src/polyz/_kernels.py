"""Kernel backend selection.

Imports the compiled extension when available, otherwise the pure-Python
implementation. POLYZ_PURE=1 forces the pure backend (used by the benchmark
and to debug suspected kernel issues).
"""

import os

if os.environ.get("POLYZ_PURE") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND

tm_add_int = _impl.tm_add_int
tm_mul_int = _impl.tm_mul_int
tm_scale_int = _impl.tm_scale_int
tm_add_mod = _impl.tm_add_mod
tm_mul_mod = _impl.tm_mul_mod
tm_scale_mod = _impl.tm_scale_mod
tm_add_obj = _impl.tm_add_obj
tm_mul_obj = _impl.tm_mul_obj
tm_scale_obj = _impl.tm_scale_obj
row_combine_int = _impl.row_combine_int
row_gcd = _impl.row_gcd
row_div_int = _impl.row_div_int
row_combine_mod = _impl.row_combine_mod
row_combine_obj = _impl.row_combine_obj
