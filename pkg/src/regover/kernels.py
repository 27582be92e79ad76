"""Kernel backend selection.

The hot loops (truncated Cauchy products and power series division) exist
twice: a Cython extension ``regover._ckernel`` and a pure-Python twin
``regover._pykernel``.  The compiled module is used when importable;
setting ``REGOVER_PURE_PYTHON=1`` forces the fallback.  Modular kernels are
routed to the compiled path only for moduli below 2**31 so all int64
intermediates stay exact.
"""

import os

from . import _pykernel

_MOD_LIMIT = 1 << 31

if os.environ.get("REGOVER_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from . import _ckernel as _compiled
    except ImportError:
        _compiled = None

HAVE_COMPILED = _compiled is not None


def backend_name():
    return "compiled" if HAVE_COMPILED else "pure-python"


def mul_mod(a, b, out_len, m):
    if _compiled is not None and m < _MOD_LIMIT:
        return _compiled.mul_mod(a, b, out_len, m)
    return _pykernel.mul_mod(a, b, out_len, m)


def div_mod(num, den, out_len, m):
    if _compiled is not None and m < _MOD_LIMIT:
        return _compiled.div_mod(num, den, out_len, m)
    return _pykernel.div_mod(num, den, out_len, m)


def mul_exact(a, b, out_len):
    if _compiled is not None:
        return _compiled.mul_exact(a, b, out_len)
    return _pykernel.mul_exact(a, b, out_len)


def div_exact(num, den, out_len):
    if _compiled is not None:
        return _compiled.div_exact(num, den, out_len)
    return _pykernel.div_exact(num, den, out_len)
