"""Kernel backend selection.

The hot loops (coefficient convolution over GF(q), dense row reduction)
live in a small compiled extension with a pure-Python twin.  The twin is
authoritative for semantics; the extension must match it bit for bit.

Set BKCRYS_BACKEND=py|c to force a backend (default: compiled if built).
"""

import os

_requested = os.environ.get("BKCRYS_BACKEND", "auto")

if _requested == "py":
    from . import _pykernel as kernel

    BACKEND = "py"
elif _requested == "c":
    from . import _ckernel as kernel  # type: ignore[no-redef]

    BACKEND = "c"
elif _requested == "auto":
    try:
        from . import _ckernel as kernel  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        from . import _pykernel as kernel

        BACKEND = "py"
else:
    raise RuntimeError(f"unknown BKCRYS_BACKEND value {_requested!r}")

Tables = kernel.Tables
