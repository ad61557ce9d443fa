"""Hot loops of the interval sweep.

Two interchangeable backends are provided:

* ``numba`` -- ``@njit`` kernels that walk the endpoint array once, in the
  order the coordinates appear on the line.
* ``numpy`` -- a vectorised fallback that precomputes, for every coordinate,
  the best interval beginning to its left/right and then chases the ``D``
  pointers with a short Python loop.

The active backend is chosen by the ``ETERNALDOM_BACKEND`` environment
variable (``numba`` or ``numpy``); if unset, numba is used when importable.
Every public kernel also accepts an explicit ``backend`` argument.

All kernels work on a canonical model: ``s`` and ``t`` are int64 arrays whose
2n entries are exactly ``1..2n``.  ``owner[c]`` is the interval index whose
endpoint sits at coordinate ``c`` and ``is_end[c]`` tells which endpoint it
is; slot 0 is a sentinel (``owner[0] == -1``).
"""

import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency in CI
    numba = None
    HAVE_NUMBA = False

BACKENDS = ("numba", "numpy")


def default_backend():
    name = os.environ.get("ETERNALDOM_BACKEND", "").strip().lower()
    if not name:
        return "numba" if HAVE_NUMBA else "numpy"
    if name not in BACKENDS:
        raise ValueError(f"ETERNALDOM_BACKEND must be one of {BACKENDS}, got {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("ETERNALDOM_BACKEND=numba but numba is not installed")
    return name


def _resolve(backend):
    if backend is None:
        return default_backend()
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not installed")
    return backend


def endpoint_tables(s, t):
    """Return ``(owner, is_end)`` for a canonical model in O(n)."""
    n = len(s)
    owner = np.full(2 * n + 1, -1, dtype=np.int64)
    is_end = np.zeros(2 * n + 1, dtype=np.bool_)
    idx = np.arange(n, dtype=np.int64)
    owner[s] = idx
    owner[t] = idx
    is_end[t] = True
    return owner, is_end


# ---------------------------------------------------------------------------
# numpy fallback


def _sweep_numpy(s, t, owner, is_end):
    n = len(s)
    empty = np.empty(0, dtype=np.int64)
    if n == 0:
        return empty, empty, empty
    size = 2 * n + 1
    big = size + 1

    # best_right[c]: smallest t among intervals with s > c
    end_at_begin = np.full(size + 1, big, dtype=np.int64)
    end_at_begin[s] = t
    best_right = np.minimum.accumulate(end_at_begin[::-1])[::-1][1:]
    # best_left[c]: largest t among intervals with s < c (0 when none)
    left = np.zeros(size, dtype=np.int64)
    left[s] = t
    best_left = np.empty(size, dtype=np.int64)
    best_left[0] = 0
    np.maximum.accumulate(left[:-1], out=best_left[1:])

    best_right_l = best_right.tolist()
    best_left_l = best_left.tolist()
    owner_l = owner.tolist()

    a_out, b_out, d_out = [], [], []
    td = 0
    while True:
        ta = best_right_l[td] if td < size else big
        if ta >= big:
            break
        tb = best_left_l[td]
        a_out.append(owner_l[ta])
        b_out.append(owner_l[tb] if tb > 0 else -1)
        td = ta if ta > tb else tb
        d_out.append(owner_l[td])
    return (
        np.asarray(a_out, dtype=np.int64),
        np.asarray(b_out, dtype=np.int64),
        np.asarray(d_out, dtype=np.int64),
    )


def _blocks_numpy(is_end, owner, cuts):
    begins = np.flatnonzero(~is_end[1:]) + 1
    order = owner[begins]
    before = np.zeros(len(is_end), dtype=np.int64)
    np.cumsum(~is_end[1:], out=before[1:])
    # cuts are end coordinates, so no begin sits on them
    offsets = before[cuts]
    return order, offsets


# ---------------------------------------------------------------------------
# numba kernels


def _sweep_loop(s, t, owner, is_end):
    n = s.shape[0]
    a_out = np.empty(n, dtype=np.int64)
    b_out = np.empty(n, dtype=np.int64)
    d_out = np.empty(n, dtype=np.int64)
    if n == 0:
        return a_out, b_out, d_out
    last = 2 * n
    k = 0
    td = 0  # t(D_0)
    bpos = 1  # next coordinate not yet folded into the running max
    bmax = -1
    bmax_t = 0
    while True:
        # A_{k+1}: first ending point after td whose interval begins after td
        c = td + 1
        found = -1
        while c <= last:
            if is_end[c]:
                j = owner[c]
                if s[j] > td:
                    found = j
                    break
            c += 1
        if found < 0:
            break
        # B_{k+1}: latest ending among intervals beginning before td
        while bpos < td:
            if not is_end[bpos]:
                j = owner[bpos]
                if t[j] > bmax_t:
                    bmax_t = t[j]
                    bmax = j
            bpos += 1
        a_out[k] = found
        b_out[k] = bmax
        if t[found] > bmax_t:
            d_out[k] = found
        else:
            d_out[k] = bmax
        td = t[d_out[k]]
        k += 1
    return a_out[:k], b_out[:k], d_out[:k]


def _blocks_loop(is_end, owner, cuts):
    size = is_end.shape[0]
    n = (size - 1) // 2
    order = np.empty(n, dtype=np.int64)
    offsets = np.empty(cuts.shape[0], dtype=np.int64)
    ci = 0
    pos = 0
    for c in range(1, size):
        while ci < cuts.shape[0] and cuts[ci] < c:
            offsets[ci] = pos
            ci += 1
        if not is_end[c]:
            order[pos] = owner[c]
            pos += 1
    while ci < cuts.shape[0]:
        offsets[ci] = pos
        ci += 1
    return order, offsets


if HAVE_NUMBA:
    _sweep_numba = numba.njit(cache=True)(_sweep_loop)
    _blocks_numba = numba.njit(cache=True)(_blocks_loop)
else:  # pragma: no cover
    _sweep_numba = _sweep_loop
    _blocks_numba = _blocks_loop


def sweep(s, t, owner, is_end, backend=None):
    """Indices of ``A``, ``B`` (``-1`` where undefined) and ``D``, each of length k."""
    if _resolve(backend) == "numba":
        return _sweep_numba(s, t, owner, is_end)
    return _sweep_numpy(s, t, owner, is_end)


def block_slices(is_end, owner, cuts, backend=None):
    """Intervals in begin order plus the offset of each cut in that order.

    Block ``i`` is ``order[offsets[i]:offsets[i + 1]]``; ``cuts`` must be
    increasing end coordinates (or 0).
    """
    cuts = np.ascontiguousarray(cuts, dtype=np.int64)
    if _resolve(backend) == "numba":
        return _blocks_numba(is_end, owner, cuts)
    return _blocks_numpy(is_end, owner, cuts)


def warmup():
    """Force JIT compilation so timings exclude it."""
    if HAVE_NUMBA:
        s = np.array([1, 2], dtype=np.int64)
        t = np.array([3, 4], dtype=np.int64)
        owner, is_end = endpoint_tables(s, t)
        _sweep_numba(s, t, owner, is_end)
        _blocks_numba(is_end, owner, np.array([0, 3], dtype=np.int64))
