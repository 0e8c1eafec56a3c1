"""Select the kernel backend at import time.

The compiled extension is preferred.  Setting MALMSTEN_PURE_PYTHON=1 forces
the pure-Python fallback, which is also used when the extension was not
built.
"""
from __future__ import annotations

import os

from . import _pycore

if os.environ.get("MALMSTEN_PURE_PYTHON", "").strip() not in ("", "0"):
    _impl = _pycore
else:
    try:
        from . import _ccore as _impl
    except ImportError:
        _impl = _pycore

BACKEND = "cython" if _impl is not _pycore else "python"

digamma = _impl.digamma
periodic_sum = _impl.periodic_sum
shifted_sum = _impl.shifted_sum
twisted_sum = _impl.twisted_sum
