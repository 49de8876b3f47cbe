"""Kernel selection: the compiled extension when importable, else pure Python.

Set BOOLHOOD_PURE=1 to force the fallback regardless. `BACKEND` names the
choice so callers (and the benchmark) can report it.
"""

import os

from . import _kernels_py

if os.environ.get("BOOLHOOD_PURE", "0") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "pure"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "pure"

max_independent = _impl.max_independent
max_dominated = _impl.max_dominated
parents_of = _impl.parents_of
children_of = _impl.children_of
count_antichain_covers = _impl.count_antichain_covers

# enumeration stays on the pure generator: it feeds the ground-truth suite
# and must remain trivially auditable
iter_antichain_covers = _kernels_py.iter_antichain_covers
