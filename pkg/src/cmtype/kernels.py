"""Backend selection for the row-reduction kernels.

The compiled extension (cmtype._rref, built from Cython) is preferred when
importable; otherwise the pure-Python fallback is used.  Setting the
environment variable CMTYPE_PURE_PYTHON=1 forces the fallback, which is
what the benchmark uses to compare the two.

Rational-field routines always come from the pure module: Fraction
arithmetic dominates their runtime, so compiling the loop gains nothing.
"""

import os

from . import _rref_py

if os.environ.get("CMTYPE_PURE_PYTHON"):
    _fp = _rref_py
else:
    try:
        from . import _rref as _fp  # type: ignore[attr-defined]
    except ImportError:
        _fp = _rref_py

BACKEND = _fp.IMPLEMENTATION

rref_fp = _fp.rref_fp
reduce_rows_fp = _fp.reduce_rows_fp
rref_qq = _rref_py.rref_qq
reduce_rows_qq = _rref_py.reduce_rows_qq
