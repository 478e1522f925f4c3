"""Compiled inner loop for the pruned canonical-word search.

One function, deliberately free of Python objects: an iterative
depth-first walk over canonical words, operating on the value-position
array in place.  Compiled lazily and cached on disk, released from the
interpreter lock so thread pools scale.

Counts are accumulated in int64, which is why callers cap the rank at
13; the big-integer fallback lives in :mod:`.engine`.
"""

import numpy as np
from numba import njit

__all__ = ["count_completions"]


@njit(cache=True, nogil=True)
def count_completions(pos, letters, depth0, total_len, n):
    # pos[v]: current index of value v (identity of the suffix still to
    # be sorted); letters[0:depth]: the word built so far; cand[d]: next
    # generator to try at depth d.  A letter i is taken when it is a
    # descent (pos[i+1] < pos[i]) and appending it keeps the prefix
    # canonical: scanning backward, the first earlier letter >= i-1 must
    # not be >= i+2 (it would commute with i and be larger).
    if depth0 >= total_len:
        return 1 if depth0 == total_len else 0
    count = 0
    depth = depth0
    cand = np.zeros(total_len + 1, np.uint8)
    cand[depth0] = 1
    while depth >= depth0:
        i = cand[depth]
        if i >= n:
            depth -= 1
            if depth >= depth0:
                x = letters[depth]
                t = pos[x]
                pos[x] = pos[x + 1]
                pos[x + 1] = t
            continue
        cand[depth] = i + 1
        if pos[i + 1] < pos[i]:
            ok = True
            for j in range(depth - 1, -1, -1):
                pj = letters[j]
                if pj >= i - 1:
                    ok = pj <= i + 1
                    break
            if ok:
                if depth + 1 == total_len:
                    count += 1
                else:
                    letters[depth] = i
                    t = pos[i]
                    pos[i] = pos[i + 1]
                    pos[i + 1] = t
                    depth += 1
                    cand[depth] = 1
    return count
