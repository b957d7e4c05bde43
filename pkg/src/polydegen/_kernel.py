"""Select the term-kernel backend.

The compiled Cython module is preferred when it imported cleanly; setting
the environment variable ``POLYDEGEN_PURE=1`` forces the pure Python kernel,
which is handy for benchmarking and for debugging coefficient arithmetic.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("POLYDEGEN_PURE") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND

add_terms = _impl.add_terms
sub_terms = _impl.sub_terms
neg_terms = _impl.neg_terms
scale_terms = _impl.scale_terms
mul_terms = _impl.mul_terms


def kernel_backend() -> str:
    """Name of the active term-kernel backend: "compiled" or "pure"."""
    return BACKEND
