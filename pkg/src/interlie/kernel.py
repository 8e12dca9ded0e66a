"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``INTERLIE_PURE=1`` in the environment to force the pure-Python kernel.
"""

from __future__ import annotations

import os

if os.environ.get("INTERLIE_PURE") == "1":
    from . import _blockmul_py as _impl
else:
    try:
        from . import _blockmul as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _blockmul_py as _impl

merge_factor = _impl.merge_factor
IMPLEMENTATION = _impl.IMPLEMENTATION


def active_kernel() -> str:
    """Name of the kernel implementation in use ('cython' or 'python')."""
    return IMPLEMENTATION
