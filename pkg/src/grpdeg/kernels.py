"""Backend selection for the hot loops.

The compiled extension is used when it imports; setting ``GRPDEG_PURE_PYTHON=1``
forces the numpy fallback. ``BACKEND`` names the active one.
"""

import os

from . import _kernels_py

if os.environ.get("GRPDEG_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

count_bruteforce = _impl.count_bruteforce
centralizer_sum = _impl.centralizer_sum
dp_step = _impl.dp_step
mc_hits = _impl.mc_hits
dp_step_bigint = _kernels_py.dp_step_bigint


def backends():
    """Every importable backend module, keyed by name."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels

        out["cython"] = _kernels
    except ImportError:
        pass
    return out
