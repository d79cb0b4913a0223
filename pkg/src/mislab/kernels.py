"""Backend selection for the enumeration kernels.

The compiled module is used when it imported cleanly and the instance fits
in 64-bit rows; everything else goes to the pure-Python kernels. Set
``MISLAB_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from types import ModuleType
from typing import Sequence

from . import _pykernels

try:
    if os.environ.get("MISLAB_PURE", "") not in ("", "0"):
        raise ImportError("pure backend forced")
    from . import _ckernels  # type: ignore[attr-defined]
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
C_MAX = 64


def backends() -> dict[str, ModuleType]:
    out: dict[str, ModuleType] = {"python": _pykernels}
    if _ckernels is not None:
        out["cython"] = _ckernels
    return out


def _pick(n: int) -> ModuleType:
    if _ckernels is not None and n <= C_MAX:
        return _ckernels
    return _pykernels


def default_threads() -> int:
    raw = os.environ.get("MISLAB_THREADS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        return 1


def mis_count(n: int, adj: Sequence[int], threads: int | None = None) -> int:
    impl = _pick(n)
    threads = default_threads() if threads is None else max(1, threads)
    if threads == 1 or n < 16:
        return int(impl.mis_count(n, adj))
    # Subtree counts are summed in frontier order: the result is identical to
    # the single-threaded count for any thread count.
    states = _pykernels.mis_frontier(n, adj, depth=min(n, 4 + threads.bit_length()))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(lambda s: int(impl.mis_count_from(n, adj, *s)), states)
        return sum(parts)


def mis_list(n: int, adj: Sequence[int]) -> list[int]:
    return list(_pick(n).mis_list(n, adj))


def irr_count(nx: int, adjx: Sequence[int]) -> int:
    return int(_pick(nx).irr_count(nx, adjx))


def irr_list(nx: int, adjx: Sequence[int]) -> list[int]:
    return list(_pick(nx).irr_list(nx, adjx))
