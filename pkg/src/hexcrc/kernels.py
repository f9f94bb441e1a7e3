"""Backend selection for the constraint kernel.

The compiled extension (hexcrc._core) is preferred when it was built;
the pure-Python reference (hexcrc._pykernels) is the fallback.  Both
implement the same decision procedure, so switching backends never
changes results, only speed.  Set HEXCRC_BACKEND=python|compiled to
force one at import time; tests use set_backend() to compare the two.
"""

from __future__ import annotations

import os
from typing import Sequence

from . import _pykernels
from ._pykernels import BudgetExceeded

try:
    from . import _core
except ImportError:
    _core = None

_BACKENDS = {"python": _pykernels}
if _core is not None:
    _BACKENDS["compiled"] = _core

_forced = os.environ.get("HEXCRC_BACKEND")
if _forced:
    if _forced not in _BACKENDS:
        raise ImportError(
            f"HEXCRC_BACKEND={_forced!r} is not available; "
            f"choices: {sorted(_BACKENDS)}"
        )
    _active = _forced
else:
    _active = "compiled" if _core is not None else "python"


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def active_backend() -> str:
    return _active


def set_backend(name: str) -> None:
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; choices: {sorted(_BACKENDS)}")
    _active = name


def solve(
    n: int,
    k: int,
    nbrs: Sequence[int],
    kind: Sequence[int],
    rows: Sequence[int],
    pins: Sequence[tuple[int, int]],
    sym_triple: tuple[int, int, int] | None = None,
    max_assigns: int | None = None,
) -> list[int] | None:
    """Dispatch to the active backend (see hexcrc._pykernels.solve)."""
    return _BACKENDS[_active].solve(
        n, k, nbrs, kind, rows, pins, sym_triple, max_assigns
    )
