"""Selects the compiled homology kernel when available.

Set ``MONOLIN_PURE_PYTHON=1`` to force the pure-Python implementation.
"""

import os

from . import _pykernels

BACKEND = "python"
_compiled = None

if os.environ.get("MONOLIN_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _compiled
        BACKEND = "cython"
    except ImportError:
        _compiled = None


def multidegree_betti(b, gens, prime=None):
    """``[beta_{0,b}, beta_{1,b}, ...]`` (trailing entries may be zero)."""
    if _compiled is not None and prime is None:
        out = _compiled.multidegree_betti(b, gens)
        if out is not None:
            return out
    return _pykernels.multidegree_betti(b, gens, prime)


def python_multidegree_betti(b, gens, prime=None):
    return _pykernels.multidegree_betti(b, gens, prime)


def compiled_multidegree_betti(b, gens):
    if _compiled is None:
        raise ImportError("the compiled kernel is not available")
    return _compiled.multidegree_betti(b, gens)
