"""Jitted lane of the dominance kernel.

Importing this module compiles nothing; compilation happens on first call
(cached on disk). Keep every operand uint64 inside the loops: mixing signed
and unsigned would silently promote to float under numba's typing rules.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def witness_masks(codes, checked):  # pragma: no cover - exercised via dispatcher
    m = codes.shape[0]
    n = codes.shape[1]
    one = np.uint64(1)
    zero = np.uint64(0)

    # phase 1: pack per-attribute outcomes into per-pair bit words,
    # walking each attribute plane contiguously
    better = np.zeros((n, n), dtype=np.uint64)
    weak = np.zeros((n, n), dtype=np.uint64)
    for k in range(m):
        bit = one << np.uint64(k)
        plane = codes[k]
        for i in range(n):
            for j in range(n):
                c = plane[i, j]
                if c == 1:
                    better[i, j] |= bit
                    weak[i, j] |= bit
                elif c == 0:
                    weak[i, j] |= bit

    # phase 2: witness test per pair, mask-and-compare per candidate bit
    out = np.zeros((n, n), dtype=np.uint64)
    for i in range(n):
        for j in range(n):
            b = better[i, j]
            if b == zero:
                continue
            wk = weak[i, j]
            mask = zero
            for w in range(m):
                wbit = one << np.uint64(w)
                if b & wbit != zero and checked[w] & ~wk == zero:
                    mask |= wbit
            out[i, j] = mask
    return out
