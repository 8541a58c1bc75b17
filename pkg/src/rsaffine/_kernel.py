"""Kernel selection: compiled extension when available, pure Python otherwise.

Set RSAFFINE_PURE=1 to force the pure-Python kernel (used by the benchmark
and the parity tests).
"""

import os

if os.environ.get("RSAFFINE_PURE"):
    from . import _pykernel as _impl
else:
    try:
        from . import _ckernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernel as _impl

BACKEND = _impl.BACKEND_NAME

padd = _impl.padd
psub = _impl.psub
pneg = _impl.pneg
pscale = _impl.pscale
pshift = _impl.pshift
pmul = _impl.pmul
peq = _impl.peq
