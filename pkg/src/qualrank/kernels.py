"""Kernel lane selection.

The pairwise witness evaluation is the hot loop of the whole engine; it has
a jitted lane (numba) and a vectorized pure-numpy lane with identical
contracts. Set ``QUALRANK_NO_NUMBA=1`` to force the numpy lane; the numpy
lane is also the automatic fallback when numba cannot be imported.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_numpy

DISABLE_ENV = "QUALRANK_NO_NUMBA"

CODE_EQUAL = _kernels_numpy.CODE_EQUAL
CODE_BETTER = _kernels_numpy.CODE_BETTER
CODE_WORSE = _kernels_numpy.CODE_WORSE
CODE_INCOMPARABLE = _kernels_numpy.CODE_INCOMPARABLE

_numba_lane = None
_numba_failed = False


def _numba_disabled() -> bool:
    return os.environ.get(DISABLE_ENV, "").strip().lower() in {"1", "true", "yes", "on"}


def _load_numba_lane():
    global _numba_lane, _numba_failed
    if _numba_lane is None and not _numba_failed:
        try:
            from . import _kernels_numba

            _numba_lane = _kernels_numba
        except ImportError:
            _numba_failed = True
    return _numba_lane


def active_lane() -> str:
    """Name of the lane a call would use right now: "numba" or "numpy"."""
    if not _numba_disabled() and _load_numba_lane() is not None:
        return "numba"
    return "numpy"


def witness_masks(codes: np.ndarray, checked: np.ndarray, lane: str | None = None) -> np.ndarray:
    """Dispatch the witness kernel; ``lane`` overrides the env selection."""
    chosen = lane or active_lane()
    if chosen == "numba":
        mod = _load_numba_lane()
        if mod is None:
            raise RuntimeError("numba lane requested but numba is unavailable")
        return mod.witness_masks(codes, checked)
    if chosen == "numpy":
        return _kernels_numpy.witness_masks(codes, checked)
    raise ValueError(f"unknown kernel lane {chosen!r}")
