"""Backend selection for the numeric kernels.

The compiled extension is used when it imports; set ``OSMROADS_PURE_PYTHON=1``
to force the pure-Python implementation.  Both backends are always reachable
through ``BACKENDS`` for testing and benchmarking.
"""

import os

from . import _kernels_py

BACKENDS = {"python": _kernels_py}

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None
else:
    BACKENDS["cython"] = _compiled

if _compiled is not None and not os.environ.get("OSMROADS_PURE_PYTHON"):
    backend = _compiled
    BACKEND_NAME = "cython"
else:
    backend = _kernels_py
    BACKEND_NAME = "python"

tm_forward = backend.tm_forward
tm_forward_many = backend.tm_forward_many
haversine = backend.haversine
haversine_segments = backend.haversine_segments
