"""Enumeration kernels for the finite-field Rota-Baxter sweep.

The compiled extension is used when it imports; otherwise the numpy
implementation takes over. Set ``LEIBNIZ_PURE_PYTHON=1`` to force the
fallback.
"""

import os

from ..errors import InputError

from ._fallback import rb_sweep as rb_sweep_python

try:
    if os.environ.get("LEIBNIZ_PURE_PYTHON"):
        raise ImportError("compiled kernel disabled by LEIBNIZ_PURE_PYTHON")
    from ._rbsweep import rb_sweep as rb_sweep_compiled
except ImportError:
    rb_sweep_compiled = None

BACKENDS = {"python": rb_sweep_python}
if rb_sweep_compiled is not None:
    BACKENDS["cython"] = rb_sweep_compiled

BACKEND = "cython" if rb_sweep_compiled is not None else "python"
rb_sweep = BACKENDS[BACKEND]


def get_backend(name: str):
    try:
        return BACKENDS[name]
    except KeyError:
        raise InputError(f"kernel backend {name!r} is not available; have {sorted(BACKENDS)}") from None
