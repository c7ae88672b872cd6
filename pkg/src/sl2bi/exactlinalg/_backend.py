"""Pick the kernel implementation at import time.

The compiled module is used when it was built; ``SL2BI_PURE_PYTHON=1``
forces the pure-Python twin.
"""
import os

from . import _kernels_py

kernels = _kernels_py
if not os.environ.get("SL2BI_PURE_PYTHON"):
    try:
        from . import _kernels_c as kernels
    except ImportError:  # extension not built
        kernels = _kernels_py

BACKEND = kernels.NAME
