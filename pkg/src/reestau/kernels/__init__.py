"""Arithmetic kernel selection.

The compiled Cython kernel is used when its extension module built; the
pure-Python twin is the fallback.  Set ``REESTAU_PURE=1`` to force the
fallback (used by the parity tests and the benchmark).
"""

import os

from . import _pure

_impl = _pure
if os.environ.get("REESTAU_PURE") != "1":
    try:
        from . import _speed  # type: ignore[attr-defined]

        _impl = _speed
    except ImportError:
        pass

IMPL = _impl.IMPL
add_terms = _impl.add_terms
scale_terms = _impl.scale_terms
shift_terms = _impl.shift_terms
mul_terms = _impl.mul_terms
nf_terms = _impl.nf_terms


def kernel_name() -> str:
    return IMPL
