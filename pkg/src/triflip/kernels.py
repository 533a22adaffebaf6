"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
reference implementation is used.  Set ``TRIFLIP_PURE_PYTHON=1`` to force
the fallback.
"""

import os

from . import _pykernels

try:
    if os.environ.get("TRIFLIP_PURE_PYTHON"):
        raise ImportError("pure python requested")
    from . import _ckernels as _impl
except ImportError:
    _impl = _pykernels

BACKEND = _impl.BACKEND
septri_scan = _impl.septri_scan
canonical_code = _impl.canonical_code

# labelled canonical forms are only needed off the hot path
canonical_form = _pykernels.canonical_form
containment_depths = _pykernels.containment_depths


def backends():
    """All importable backends, keyed by name (for tests and benchmarks)."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels
        found["cython"] = _ckernels
    except ImportError:
        pass
    return found
