"""Kernel selection.

The compiled extension is used when it imports cleanly. Setting
``TOEPLITZ_LATTICE_PURE=1`` forces the pure-Python kernels.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels


def _load() -> tuple[ModuleType, str]:
    if os.environ.get("TOEPLITZ_LATTICE_PURE", "") not in ("", "0"):
        return _pykernels, "python"
    try:
        from . import _kernels
    except ImportError:
        return _pykernels, "python"
    return _kernels, "cython"


kernels, BACKEND = _load()

toeplitz_prefix = kernels.toeplitz_prefix
lattice_extract = kernels.lattice_extract
almost_periodic_witness = kernels.almost_periodic_witness
prefix_conditions = kernels.prefix_conditions
compose_bodies = kernels.compose_bodies
first_mismatch = kernels.first_mismatch
