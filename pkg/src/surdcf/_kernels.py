"""Accelerated kernels for bulk d-range sweeps.

The exact big-integer engine stays the source of truth; these kernels exist
because range sweeps (structure checks over every d up to 1e5 and beyond) are
dominated by a tiny machine-word inner loop.  Values are gated well inside
int64 range before a kernel is allowed to run.

Backend selection, via SURDCF_KERNEL:

    numba   - @njit kernels (default when numba imports cleanly)
    numpy   - lockstep vectorized fallback, no JIT
    python  - force the pure big-int engine path (handled by callers)

Both accelerated backends return identical arrays, and tests pin them against
the engine, so reports are byte-identical whichever one runs.
"""

from __future__ import annotations

import os

import numpy as np

# Bit layout of the per-d flags array.
F_SQUARE = 1
F_PAL = 2
F_TERM = 4
F_BOUND = 8
F_OVERFLOW = 16

# Periods for d <= 1e7 stay far below this; overflowing lanes are redone
# exactly by the caller.
WORD_BUFFER = 8192

# Kernels use int64 intermediates up to d itself; keep a wide safety margin.
KERNEL_D_LIMIT = 10**12

try:  # pragma: no cover - exercised via the numba backend tests
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


def backend_name() -> str:
    """Active sweep backend after applying the SURDCF_KERNEL override."""
    choice = os.environ.get("SURDCF_KERNEL", "").strip().lower()
    if choice in ("numba", "numpy", "python"):
        if choice == "numba" and not HAVE_NUMBA:
            return "numpy"
        return choice
    return "numba" if HAVE_NUMBA else "numpy"


@njit(cache=True)
def _sweep_numba(lo, hi, buf_len):  # pragma: no cover - numba-compiled
    n = hi - lo
    ell = np.zeros(n, np.int64)
    a0s = np.zeros(n, np.int64)
    centers = np.full(n, -1, np.int64)
    flags = np.zeros(n, np.uint8)
    word = np.zeros(buf_len, np.int64)
    for i in range(n):
        d = lo + i
        r = np.int64(np.sqrt(np.float64(d)))
        while (r + 1) * (r + 1) <= d:
            r += 1
        while r * r > d:
            r -= 1
        a0s[i] = r
        if r * r == d:
            flags[i] |= F_SQUARE
            continue
        P = r
        Q = d - r * r
        steps = 0
        overflow = False
        while True:
            a = (r + P) // Q
            if steps >= buf_len:
                overflow = True
                break
            word[steps] = a
            steps += 1
            if Q == 1:
                break
            P = a * Q - P
            Q = (d - P * P) // Q
        if overflow:
            flags[i] |= F_OVERFLOW
            continue
        ell[i] = steps
        pal = True
        for j in range((steps - 1) // 2):
            if word[j] != word[steps - 2 - j]:
                pal = False
                break
        bound = True
        for j in range(steps - 1):
            if word[j] > r:
                bound = False
                break
        if pal:
            flags[i] |= F_PAL
        if word[steps - 1] == 2 * r:
            flags[i] |= F_TERM
        if bound:
            flags[i] |= F_BOUND
        if steps % 2 == 0:
            centers[i] = word[steps // 2 - 1]
    return ell, a0s, centers, flags


@njit(cache=True)
def _two_squares_numba(lo, hi):  # pragma: no cover - numba-compiled
    out = np.zeros(hi - lo, np.uint8)
    a = 1
    while a * a + 1 < hi:
        b = 1
        while b <= a:
            s = a * a + b * b
            if s >= hi:
                break
            if s >= lo:
                x, y = a, b
                while y:
                    x, y = y, x % y
                if x == 1:
                    out[s - lo] = 1
            b += 1
        a += 1
    return out


def _isqrt_vec(d: np.ndarray) -> np.ndarray:
    r = np.sqrt(d.astype(np.float64)).astype(np.int64)
    for _ in range(2):
        r = np.where((r + 1) * (r + 1) <= d, r + 1, r)
        r = np.where(r * r > d, r - 1, r)
    return r


def _sweep_numpy_block(d: np.ndarray, buf_len: int):
    n = d.shape[0]
    r = _isqrt_vec(d)
    square = r * r == d
    ell = np.zeros(n, np.int64)
    centers = np.full(n, -1, np.int64)
    flags = np.zeros(n, np.uint8)
    flags[square] |= F_SQUARE

    active = ~square
    P = np.where(active, r, 0)
    Q = np.where(active, d - r * r, 1)
    steps = []
    step = 0
    while active.any():
        if step >= buf_len:
            flags[active] |= F_OVERFLOW
            break
        a = (r + P) // Q
        steps.append(np.where(active, a, 0))
        step += 1
        done = active & (Q == 1)
        ell[done] = step
        active = active & ~done
        if active.any():
            P1 = np.where(active, a * Q - P, 0)
            Q = np.where(active, (d - P1 * P1) // np.where(active, Q, 1), 1)
            P = P1

    if steps:
        words = np.stack(steps, axis=1)
        for i in np.nonzero(ell > 0)[0]:
            L = ell[i]
            w = words[i, :L]
            inner = w[: L - 1]
            ok = F_BOUND if (inner <= r[i]).all() else 0
            if inner.size == 0 or (inner == inner[::-1]).all():
                ok |= F_PAL
            if w[L - 1] == 2 * r[i]:
                ok |= F_TERM
            if L % 2 == 0:
                centers[i] = w[L // 2 - 1]
            flags[i] |= ok
    return ell, r, centers, flags


def _sweep_numpy(lo: int, hi: int, buf_len: int, block: int = 1024):
    parts = []
    for start in range(lo, hi, block):
        d = np.arange(start, min(start + block, hi), dtype=np.int64)
        parts.append(_sweep_numpy_block(d, buf_len))
    return tuple(np.concatenate([p[i] for p in parts]) for i in range(4))


def _two_squares_numpy(lo: int, hi: int) -> np.ndarray:
    out = np.zeros(hi - lo, np.uint8)
    a = 1
    while a * a + 1 < hi:
        bmax = min(a, int(np.sqrt(hi - 1 - a * a)))
        if bmax >= 1:
            b = np.arange(1, bmax + 1, dtype=np.int64)
            s = a * a + b * b
            keep = (s >= lo) & (s < hi) & (np.gcd(a, b) == 1)
            out[s[keep] - lo] = 1
        a += 1
    return out


def sweep_range(lo: int, hi: int, backend: str | None = None, buf_len: int = WORD_BUFFER):
    """Per-d expansion structure for lo <= d < hi.

    Returns (ell, a0, center, flags) int64/uint8 arrays.  Callers must redo
    any F_OVERFLOW lane with the exact engine.
    """
    if lo < 1 or hi < lo:
        raise ValueError("want 1 <= lo <= hi")
    if hi > KERNEL_D_LIMIT:
        raise ValueError("range exceeds the sweep kernels' int64 safety gate")
    name = backend or backend_name()
    if name == "numba" and HAVE_NUMBA:
        return _sweep_numba(lo, hi, buf_len)
    return _sweep_numpy(lo, hi, buf_len)


def two_squares_range(lo: int, hi: int, backend: str | None = None) -> np.ndarray:
    """Boolean mask over [lo, hi): d is a sum of two coprime positive squares."""
    if lo < 1 or hi < lo:
        raise ValueError("want 1 <= lo <= hi")
    if hi > KERNEL_D_LIMIT:
        raise ValueError("range exceeds the sweep kernels' int64 safety gate")
    name = backend or backend_name()
    if name == "numba" and HAVE_NUMBA:
        return _two_squares_numba(lo, hi)
    return _two_squares_numpy(lo, hi)


__all__ = [
    "F_SQUARE",
    "F_PAL",
    "F_TERM",
    "F_BOUND",
    "F_OVERFLOW",
    "HAVE_NUMBA",
    "KERNEL_D_LIMIT",
    "backend_name",
    "sweep_range",
    "two_squares_range",
]
