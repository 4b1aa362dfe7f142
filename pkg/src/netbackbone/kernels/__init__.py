"""Kernel backend selection.

The hot inner loops (single-source shortest paths, betweenness
accumulation) exist twice: a Cython extension compiled at install time
and a pure-Python twin. Both take the same CSR arrays (``int32`` index
arrays, ``float64`` lengths, ``uint8`` edge mask) and produce bit-identical
distances, predecessors and scores; only container types differ (lists vs
ndarrays). The compiled backend is used when importable; setting the
environment variable ``NETBACKBONE_PURE=1`` forces the fallback.
"""

import os

from . import _pure

BACKEND = "pure"
_impl = _pure

if not os.environ.get("NETBACKBONE_PURE"):
    try:
        from . import _fast as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

dijkstra = _impl.dijkstra
betweenness_accumulate = _impl.betweenness_accumulate

__all__ = ["BACKEND", "dijkstra", "betweenness_accumulate"]
