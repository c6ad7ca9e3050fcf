"""Compiled inner loops."""
import numba
import numpy as np


@numba.njit(cache=True)
def scan(seq, target, m, first_only):
    """Sliding-window jumbled match; returns 1-based start positions.

    ``diff[c]`` is window count minus target count for symbol ``c`` and
    ``bad`` is the number of symbols with ``diff != 0``.
    """
    n = seq.size
    out = np.empty(max(n - m + 1, 0), dtype=np.int64)
    found = 0
    if m <= 0 or m > n:
        return out[:0]
    diff = -target.copy()
    for t in range(m):
        diff[seq[t]] += 1
    bad = 0
    for c in range(diff.size):
        if diff[c] != 0:
            bad += 1
    for start in range(n - m + 1):
        if bad == 0:
            out[found] = start + 1
            found += 1
            if first_only:
                break
        if start + m >= n:
            break
        c_out = seq[start]
        c_in = seq[start + m]
        if c_out == c_in:
            continue
        if diff[c_out] == 0:
            bad += 1
        diff[c_out] -= 1
        if diff[c_out] == 0:
            bad -= 1
        if diff[c_in] == 0:
            bad += 1
        diff[c_in] += 1
        if diff[c_in] == 0:
            bad -= 1
    return out[:found]


def _warm_up():
    # compile (or load from cache) at import so timings exclude JIT work;
    # text arrays are read-only, which numba types separately
    seq = np.zeros(2, dtype=np.int32)
    seq.setflags(write=False)
    scan(seq, np.zeros(1, dtype=np.int64), 1, True)


_warm_up()
