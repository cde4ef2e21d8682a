"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module takes over. Setting ``EXTSHIFT_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _kernels_py

if os.environ.get("EXTSHIFT_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

echelon_pivots = _impl.echelon_pivots
compound_levels = _impl.compound_levels
masks_of_size = _kernels_py.masks_of_size
colex_rank = _kernels_py.colex_rank

__all__ = ["BACKEND", "echelon_pivots", "compound_levels", "masks_of_size", "colex_rank"]
