"""Backend selection for the sparse polynomial kernels.

The compiled ``_speedups`` extension is used when it was built; otherwise the
pure-Python implementation in ``_kernels_py`` is loaded.  Setting the
environment variable ``OHMRUSH_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("OHMRUSH_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "cython" if _impl is not _kernels_py else "python"

NATIVE, MODULAR, GENERIC = _kernels_py.NATIVE, _kernels_py.MODULAR, _kernels_py.GENERIC
LEX, GRLEX, GREVLEX = _kernels_py.LEX, _kernels_py.GRLEX, _kernels_py.GREVLEX

mono_mul = _impl.mono_mul
mono_div = _impl.mono_div
mono_divides = _impl.mono_divides
mono_lcm = _impl.mono_lcm
mono_coprime = _impl.mono_coprime
order_key = _impl.order_key
poly_mul = _impl.poly_mul
poly_sub_mul = _impl.poly_sub_mul
normal_form = _impl.normal_form


def implementations():
    """Return the available kernel modules keyed by backend name."""
    found = {"python": _kernels_py}
    try:
        from . import _speedups
    except ImportError:
        pass
    else:
        found["cython"] = _speedups
    return found
