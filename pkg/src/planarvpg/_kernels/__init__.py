"""Kernel selection: compiled extension if available, NumPy fallback otherwise.

Set ``PLANARVPG_KERNEL=py`` (or ``c``) to force a backend.
"""

from __future__ import annotations

import os

_choice = os.environ.get("PLANARVPG_KERNEL", "").strip().lower()

if _choice == "py":
    from . import pykern as _impl
elif _choice == "c":
    from . import ckern as _impl  # type: ignore[no-redef]
else:
    try:
        from . import ckern as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import pykern as _impl  # type: ignore[no-redef]

BACKEND = _impl.BACKEND
hv_hits = _impl.hv_hits
hh_overlaps = _impl.hh_overlaps
vv_overlaps = _impl.vv_overlaps
shift_from = _impl.shift_from
