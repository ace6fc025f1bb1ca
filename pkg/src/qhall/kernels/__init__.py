"""Kernel backend selection.

The compiled extension is preferred; the pure-Python module is a drop-in
fallback. Set QHALL_KERNEL=python or QHALL_KERNEL=cython to force a backend
(the latter raises if the extension was not built).
"""

import os

_forced = os.environ.get("QHALL_KERNEL", "").strip().lower()

if _forced == "python":
    from . import _pykernels as _impl
elif _forced == "cython":
    from . import _ckernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND
conv = _impl.conv
conv_trunc = _impl.conv_trunc
