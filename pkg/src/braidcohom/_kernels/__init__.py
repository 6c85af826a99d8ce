"""Hot loops behind a switchable backend.

``BRAIDCOHOM_BACKEND=numba`` (default when numba imports) or ``numpy``.
Both backends expose ``necklace_scan`` and ``centralizer_indicator`` with
identical results; the benchmark in ``benchmarks/`` compares them.
"""

import logging
import os
from functools import lru_cache
from types import ModuleType

import numpy as np

log = logging.getLogger(__name__)

BACKENDS = ("numba", "numpy")


def load_backend(name: str) -> ModuleType:
    if name == "numba":
        from . import _numba
        return _numba
    if name == "numpy":
        from . import _numpy
        return _numpy
    raise ValueError(f"unknown backend {name!r}; choose from {BACKENDS}")


def _default_backend() -> ModuleType:
    name = os.environ.get("BRAIDCOHOM_BACKEND", "").strip().lower()
    if name:
        return load_backend(name)
    try:
        return load_backend("numba")
    except ImportError:
        log.warning("numba not available, using the numpy kernels")
        return load_backend("numpy")


backend = _default_backend()
BACKEND_NAME = backend.__name__.rsplit("._", 1)[-1]


@lru_cache(maxsize=None)
def permutation_table(m: int) -> tuple[np.ndarray, np.ndarray]:
    """All permutations of ``range(m)`` as rows, with their signs.

    Built by inserting the largest symbol into every slot; inserting ``k`` at
    position ``pos`` of a length-``k`` word adds ``k - pos`` inversions.
    """
    perms = np.zeros((1, 0), dtype=np.int64)
    signs = np.ones(1, dtype=np.int8)
    for k in range(m):
        rows = []
        srows = []
        for pos in range(k + 1):
            ins = np.insert(perms, pos, k, axis=1)
            rows.append(ins)
            srows.append(signs if (k - pos) % 2 == 0 else -signs)
        perms = np.concatenate(rows, axis=0)
        signs = np.concatenate(srows)
    perms.setflags(write=False)
    signs.setflags(write=False)
    return perms, signs
