"""Kernel dispatch: the compiled extension when importable, numpy otherwise.

Set ``INNERISOTOPE_PURE=1`` to force the fallback.
"""
import os

from . import _pykernels

if os.environ.get("INNERISOTOPE_PURE"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

scan_idempotents = _impl.scan_idempotents
quasigroup_automorphisms = _impl.quasigroup_automorphisms
