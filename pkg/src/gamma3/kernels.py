"""Kernel selection: compiled hamiltonian-path search when the extension
built, pure Python otherwise.  GAMMA3_PURE=1 forces the fallback."""

from __future__ import annotations

import os
from typing import List, Optional

from . import _hampath_py

KERNEL = "pure"
_cy = None
if os.environ.get("GAMMA3_PURE") != "1":
    try:
        from . import _hampath_cy as _cy  # type: ignore[no-redef]

        KERNEL = "cython"
    except ImportError:
        _cy = None


def hampath(n: int, adj: List[int], a: int, b: int) -> Optional[List[int]]:
    if _cy is not None and n <= 64:
        return _cy.hampath(n, adj, a, b)
    return _hampath_py.hampath(n, adj, a, b)
