"""Exhaustive minimum-genus search over the rotation systems of one
biconnected block.

Darts are numbered so that edge j contributes darts 2j and 2j+1 and reversal
is xor with 1.  A rotation system is encoded by one digit per vertex choosing
a precomputed cyclic order of its outgoing darts; the kernel walks the digit
odometer, keeps the dart-successor table patched incrementally, counts faces
by cycle-tracing d -> next_rot[d ^ 1], and stops early once a face count
proving the block's lower bound is reached.

The same function body runs pure-Python (reference and fallback) and
numba-jitted (used for real searches when numba imports).
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False


def _search_impl(nd, rot_rows, row_offset, row_count, deg, f_target, budget, best_digits):
    nv = len(row_count)
    next_rot = np.zeros(nd, dtype=np.int64)
    digits = np.zeros(nv, dtype=np.int64)
    for i in range(nv):
        off = row_offset[i]
        d = deg[i]
        for t in range(d):
            a = rot_rows[off + t]
            b = rot_rows[off + (t + 1) % d]
            next_rot[a] = b
    stamp = np.zeros(nd, dtype=np.int64)
    cur = 0
    best_f = -1
    nodes = 0
    while True:
        nodes += 1
        cur += 1
        f = 0
        for d0 in range(nd):
            if stamp[d0] != cur:
                f += 1
                d = d0
                while stamp[d] != cur:
                    stamp[d] = cur
                    d = next_rot[d ^ 1]
        if f > best_f:
            best_f = f
            for i in range(nv):
                best_digits[i] = digits[i]
            if best_f >= f_target:
                return best_f, nodes, True
        if nodes >= budget:
            return best_f, nodes, False
        i = nv - 1
        while i >= 0:
            digits[i] += 1
            if digits[i] < row_count[i]:
                off = row_offset[i] + digits[i] * deg[i]
                dd = deg[i]
                for t in range(dd):
                    a = rot_rows[off + t]
                    b = rot_rows[off + (t + 1) % dd]
                    next_rot[a] = b
                break
            digits[i] = 0
            off = row_offset[i]
            dd = deg[i]
            for t in range(dd):
                a = rot_rows[off + t]
                b = rot_rows[off + (t + 1) % dd]
                next_rot[a] = b
            i -= 1
        if i < 0:
            return best_f, nodes, True


search_python = _search_impl

if HAVE_NUMBA:
    search_jit = _njit(cache=True)(_search_impl)
else:  # pragma: no cover
    search_jit = None
