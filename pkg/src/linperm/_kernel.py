"""Arithmetic kernel backend, selected once at import time.

The compiled Cython core is preferred when it is built; setting the
environment variable ``LINPERM_PURE_PYTHON`` to any nonempty value forces
the pure-Python fallback.
"""

import os

if os.environ.get("LINPERM_PURE_PYTHON"):
    from . import _corepy as _impl
else:
    try:
        from . import _corecy as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _corepy as _impl

BACKEND = _impl.BACKEND
addmod = _impl.addmod
submod = _impl.submod
negmod = _impl.negmod
mulmod = _impl.mulmod
matvec = _impl.matvec
eval_all = _impl.eval_all
