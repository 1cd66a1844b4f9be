"""State-sum loop counting: numba kernel plus a pure-numpy fallback.

Both take the same inputs.  Each crossing k offers two smoothings; smoothing
``a`` adds the edges ``opt_a[k, 0]-opt_a[k, 1]`` and ``opt_a[k, 2]-opt_a[k, 3]``
between arc nodes, smoothing ``b`` likewise with ``opt_b``.  Bit k of a state
selects ``b``.  The result ``hist[na, loops]`` counts states with ``na``
``a``-smoothings whose arc graph has ``loops`` connected components.

Set ``VBRAID_NO_NUMBA=1`` to force the numpy path.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:     # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("VBRAID_NO_NUMBA", "") in ("", "0")


def _histogram_loop(n_arcs, opt_a, opt_b):
    c = opt_a.shape[0]
    hist = np.zeros((c + 1, n_arcs + 1), dtype=np.int64)
    parent = np.empty(n_arcs, dtype=np.int64)
    for s in range(1 << c):
        for x in range(n_arcs):
            parent[x] = x
        comps = n_arcs
        na = 0
        for k in range(c):
            if (s >> k) & 1:
                e = opt_b[k]
            else:
                e = opt_a[k]
                na += 1
            for t in range(0, 4, 2):
                x = e[t]
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                y = e[t + 1]
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x != y:
                    parent[x] = y
                    comps -= 1
        hist[na, comps] += 1
    return hist


if HAVE_NUMBA:
    _histogram_numba = njit(cache=True)(_histogram_loop)


def _histogram_numpy(n_arcs, opt_a, opt_b, chunk=1 << 13):
    c = opt_a.shape[0]
    hist = np.zeros((c + 1, n_arcs + 1), dtype=np.int64)
    total = 1 << c
    shifts = np.arange(c, dtype=np.int64)
    nodes = np.arange(n_arcs, dtype=np.int64)
    for lo in range(0, total, chunk):
        states = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        bits = ((states[:, None] >> shifts[None, :]) & 1).astype(bool)     # (S, c)
        ends = np.where(bits[:, :, None], opt_b[None, :, :], opt_a[None, :, :])  # (S, c, 4)
        u = np.concatenate([ends[:, :, 0], ends[:, :, 2]], axis=1)      # (S, 2c)
        w = np.concatenate([ends[:, :, 1], ends[:, :, 3]], axis=1)
        rows = np.arange(len(states))[:, None]
        label = np.broadcast_to(nodes, (len(states), n_arcs)).copy()
        while True:
            lu = label[rows, u]
            lw = label[rows, w]
            m = np.minimum(lu, lw)
            new = label.copy()
            # hook both endpoints' current labels onto the smaller one
            np.minimum.at(new, (np.broadcast_to(rows, u.shape), lu), m)
            np.minimum.at(new, (np.broadcast_to(rows, w.shape), lw), m)
            new = new[rows, new]
            if np.array_equal(new, label):
                break
            label = new
        # every label now names a root; roots are nodes labelled by themselves
        loops = (label == nodes[None, :]).sum(axis=1)
        na = c - bits.sum(axis=1)
        np.add.at(hist, (na, loops), 1)
    return hist


def state_histogram(n_arcs: int, opt_a: np.ndarray, opt_b: np.ndarray,
                    use_numba: bool | None = None) -> np.ndarray:
    opt_a = np.ascontiguousarray(opt_a, dtype=np.int64).reshape(-1, 4)
    opt_b = np.ascontiguousarray(opt_b, dtype=np.int64).reshape(-1, 4)
    if use_numba is None:
        use_numba = USE_NUMBA
    if use_numba:
        if not HAVE_NUMBA:
            raise RuntimeError("numba is not installed")
        return _histogram_numba(n_arcs, opt_a, opt_b)
    return _histogram_numpy(n_arcs, opt_a, opt_b)
