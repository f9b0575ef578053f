"""Kernel selection.

The compiled extension is used when it imports; setting the environment
variable ``PROJCLOSURE_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

import os

from . import _kernels_py

if os.environ.get("PROJCLOSURE_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _kernels_py

BinomialBasis = _impl.BinomialBasis
BACKEND = _impl.BACKEND
PyBinomialBasis = _kernels_py.BinomialBasis
