"""Pure-numpy lane of the dominance kernel.

Same contract as the jitted lane in ``_kernels_numba``; selected when numba
is unavailable or disabled via ``QUALRANK_NO_NUMBA``.
"""

from __future__ import annotations

import numpy as np

CODE_EQUAL = 0
CODE_BETTER = 1
CODE_WORSE = 2
CODE_INCOMPARABLE = 3


def witness_masks(codes: np.ndarray, checked: np.ndarray) -> np.ndarray:
    """Per-pair witness bitmasks from per-attribute outcome codes.

    ``codes`` is (m, n, n) uint8 outcome codes; ``checked[w]`` is the uint64
    bitmask of attributes that must pass the weak test for witness w. Bit w
    of the result at (a, b) is set iff attribute w certifies a over b:
    strictly better on w and better-or-equal on every attribute in
    ``checked[w]``.
    """
    m, n, _ = codes.shape
    better = codes == CODE_BETTER
    weak = better | (codes == CODE_EQUAL)
    weak_bits = np.zeros((n, n), dtype=np.uint64)
    for k in range(m):
        weak_bits |= weak[k].astype(np.uint64) << np.uint64(k)
    out = np.zeros((n, n), dtype=np.uint64)
    for w in range(m):
        ok = (weak_bits & checked[w]) == checked[w]
        hit = better[w] & ok
        out[hit] |= np.uint64(1 << w)
    return out
