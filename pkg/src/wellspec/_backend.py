"""Pick the compiled kernels when importable, else the numpy fallback.

Set ``WELLSPEC_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

if os.environ.get("WELLSPEC_PURE_PYTHON", "") not in ("", "0"):
    kernels = _pykernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        kernels = _pykernels

BACKEND = "python" if kernels is _pykernels else "cython"

__all__ = ["BACKEND", "kernels"]
