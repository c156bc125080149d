"""Backend selection for the hot kernels.

The compiled extension is used when it was built; otherwise, or when
``FIBCUBE_PURE_PYTHON`` is set to a non-empty value, the pure-Python
implementations are used.  Both expose the same three functions.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels


def _load_compiled() -> ModuleType | None:
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels


compiled = _load_compiled()

if compiled is not None and not os.environ.get("FIBCUBE_PURE_PYTHON"):
    backend: ModuleType = compiled
    BACKEND = "cython"
else:
    backend = _pykernels
    BACKEND = "python"

enumerate_independent = backend.enumerate_independent
toggle_adjacency = backend.toggle_adjacency
match_all = backend.match_all


def get_backend(name: str) -> ModuleType:
    """Return a specific backend ("python" or "cython") for comparisons."""
    if name == "python":
        return _pykernels
    if name == "cython":
        if compiled is None:
            raise ImportError("compiled kernels are not built")
        return compiled
    raise ValueError(f"unknown backend {name!r}")
