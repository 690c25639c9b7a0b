"""Pick the kernel implementation once, at import time.

Set ``ARSCOPE_BACKEND=python`` to force the pure-Python fallback.
"""

import os

if os.environ.get("ARSCOPE_BACKEND", "").lower() == "python":
    from . import _pykernels as kernels
    NAME = "python"
else:
    try:
        from . import _kernels as kernels
        NAME = "cython"
    except ImportError:
        from . import _pykernels as kernels
        NAME = "python"

__all__ = ["kernels", "NAME"]
