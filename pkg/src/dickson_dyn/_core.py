"""Kernel backend selection.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``DICKSON_DYN_PURE_PYTHON`` is set to a non-empty value
other than ``0``, the pure-Python kernels are used.
"""

import os

from . import _pykernels

kernels = _pykernels
BACKEND = "python"

if os.environ.get("DICKSON_DYN_PURE_PYTHON", "") in ("", "0"):
    try:
        from . import _ckernels  # type: ignore[attr-defined]
    except ImportError:  # extension not built
        pass
    else:
        kernels = _ckernels
        BACKEND = "cython"
