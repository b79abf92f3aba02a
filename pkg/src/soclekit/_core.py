"""Kernel lane selection: compiled extension if available, else pure Python.

Set ``SOCLEKIT_PURE=1`` to force the pure lane (useful for benchmarking and
for debugging suspected kernel issues).
"""

from __future__ import annotations

import os

if os.environ.get("SOCLEKIT_PURE"):
    from . import _kernels as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels as _impl

IMPLEMENTATION: str = _impl.IMPLEMENTATION

closure_mask = _impl.closure_mask
extend_mask = _impl.extend_mask
all_subgroup_masks = _impl.all_subgroup_masks
perm_closed_filter = _impl.perm_closed_filter

from ._kernels import iter_bits  # tiny; no compiled counterpart needed
