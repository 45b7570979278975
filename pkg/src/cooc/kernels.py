"""Kernel backend selection.

The compiled extension is used when it imports; set ``COOC_PURE_PYTHON=1``
to force the pure-Python fallback. ``BACKEND`` names the active one.
"""
import os

from . import _pykernels

if os.environ.get("COOC_PURE_PYTHON"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = _impl.BACKEND
band_edges = _impl.band_edges
hopcroft_karp = _impl.hopcroft_karp
matching_sizes = _impl.matching_sizes
lcs_length = _impl.lcs_length


def available_backends():
    """Importable kernel modules, pure Python first."""
    mods = [_pykernels]
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        mods.append(_ckernels)
    return mods
