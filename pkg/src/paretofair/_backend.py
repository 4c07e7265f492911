"""Select the kernel implementation at import time.

The compiled extension is used when it was built; otherwise the numpy
fallback. ``PARETOFAIR_BACKEND=python`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

kernels_py = _kernels_py

try:
    from . import _kernels as kernels_compiled  # type: ignore[attr-defined]
except ImportError:  # extension not built
    kernels_compiled = None

if kernels_compiled is not None and os.environ.get("PARETOFAIR_BACKEND", "").lower() != "python":
    kernels = kernels_compiled
    BACKEND = "cython"
else:
    kernels = _kernels_py
    BACKEND = "python"
