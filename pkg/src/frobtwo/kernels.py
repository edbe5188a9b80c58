"""Hot kernels, compiled when the extension is built, numpy otherwise.

Set ``FROBTWO_PURE_PYTHON=1`` to force the numpy fallback.
"""
import os

from . import _pykernels

try:
    if os.environ.get("FROBTWO_PURE_PYTHON"):
        raise ImportError("pure python requested")
    from . import _ckernels as _impl
except ImportError:
    _impl = _pykernels

BACKEND = _impl.BACKEND
srg_profile = _impl.srg_profile
difference_weights = _impl.difference_weights
difference_keys = _impl.difference_keys
cayley_adjacency = _impl.cayley_adjacency
