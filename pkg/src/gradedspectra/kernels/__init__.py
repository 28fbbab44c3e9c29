"""Kernel backend selection.

The hot subset-algebra loops exist twice: a compiled Cython module
(``_ckernels``) and a pure-Python fallback (``pykernels``) with the same
interface.  The compiled one is preferred when importable; set
``GRADEDSPECTRA_KERNELS=python`` or ``=cython`` to force a choice.
``benchmarks/bench_kernels.py`` compares the two.
"""

from __future__ import annotations

import os

_choice = os.environ.get("GRADEDSPECTRA_KERNELS", "auto").lower()

if _choice == "python":
    from . import pykernels as backend
elif _choice == "cython":
    from . import _ckernels as backend  # type: ignore[attr-defined]
else:
    try:
        from . import _ckernels as backend  # type: ignore[attr-defined]
    except ImportError:
        from . import pykernels as backend

BACKEND_NAME = backend.NAME

__all__ = ["backend", "BACKEND_NAME"]
