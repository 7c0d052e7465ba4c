"""Kernel backend selection.

The compiled kernels are preferred when present; set QPART_BACKEND to
"python" or "c" to force a choice (forcing "c" fails loudly when the
extension was not built).
"""

import os

_choice = os.environ.get("QPART_BACKEND", "").strip().lower()

if _choice in ("python", "py", "pure"):
    from . import _kernels_py as kernels
elif _choice in ("c", "compiled"):
    from . import _kernels as kernels  # type: ignore[no-redef]
elif _choice == "":
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as kernels
else:
    raise ValueError(
        f"unrecognized QPART_BACKEND value {_choice!r}; use 'c' or 'python'"
    )

BACKEND: str = kernels.BACKEND
