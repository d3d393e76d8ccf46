"""Kernel backend selection.

Imports the compiled extension when present, falling back to the pure-Python
twin.  Set SKEWLAT_PURE=1 to force the fallback (used by the parity tests
and the benchmark).
"""

import os

from . import _kernels_py

if os.environ.get("SKEWLAT_PURE"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels_c as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

assoc_witness = _impl.assoc_witness
meet_tables = _impl.meet_tables
join_completions = _impl.join_completions
relabel = _impl.relabel
canonical_pair = _impl.canonical_pair
