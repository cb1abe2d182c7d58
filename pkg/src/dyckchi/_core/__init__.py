"""Word-enumeration kernels.

The compiled extension ``_kernels`` is used when it was built; otherwise the
pure-Python module ``_kernels_py`` with the same signatures is loaded.  Set
``DYCKCHI_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("DYCKCHI_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

word_histogram = _impl.word_histogram

__all__ = ["BACKEND", "word_histogram"]
