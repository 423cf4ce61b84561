"""Pure NumPy kernels: segment-pair hit enumeration and bulk coordinate maps.

Same contract as the compiled module in ``ckern.pyx``; selected as a fallback
at import time.  Segment arrays use int64 rows:

* horizontal segments: ``[y, x1, x2, vid]`` with ``x1 < x2``
* vertical segments:   ``[x, y1, y2, vid]`` with ``y1 < y2``
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"

_BLOCK = 256


def hv_hits(hsegs: np.ndarray, vsegs: np.ndarray) -> np.ndarray:
    """All (h, v) index pairs whose closed segments share a point.

    Returns an int64 array of rows ``[hi, vi, x, y, proper]`` where ``proper``
    is 1 for a transversal crossing (interior to both segments).
    """
    out = []
    nh = len(hsegs)
    nv = len(vsegs)
    if nh == 0 or nv == 0:
        return np.empty((0, 5), dtype=np.int64)
    vx = vsegs[:, 0]
    vy1 = vsegs[:, 1]
    vy2 = vsegs[:, 2]
    for lo in range(0, nh, _BLOCK):
        hb = hsegs[lo : lo + _BLOCK]
        y = hb[:, 0][:, None]
        x1 = hb[:, 1][:, None]
        x2 = hb[:, 2][:, None]
        hit = (vx >= x1) & (vx <= x2) & (y >= vy1) & (y <= vy2)
        hi, vi = np.nonzero(hit)
        if len(hi) == 0:
            continue
        hx1 = hb[hi, 1]
        hx2 = hb[hi, 2]
        px = vx[vi]
        py = hb[hi, 0]
        proper = (px > hx1) & (px < hx2) & (py > vy1[vi]) & (py < vy2[vi])
        rows = np.stack(
            [hi + lo, vi, px, py, proper.astype(np.int64)], axis=1
        )
        out.append(rows)
    if not out:
        return np.empty((0, 5), dtype=np.int64)
    return np.concatenate(out, axis=0)


def _parallel_overlaps(segs: np.ndarray) -> np.ndarray:
    """Index pairs (i, j), i < j, of same-line segments with touching ranges."""
    n = len(segs)
    if n < 2:
        return np.empty((0, 2), dtype=np.int64)
    order = np.lexsort((segs[:, 1], segs[:, 0]))
    s = segs[order]
    out = []
    # Same fixed coordinate and [lo, hi] intervals intersecting (closed).
    for i in range(n - 1):
        line, lo_i, hi_i = s[i, 0], s[i, 1], s[i, 2]
        j = i + 1
        while j < n and s[j, 0] == line and s[j, 1] <= hi_i:
            out.append((order[i], order[j]))
            j += 1
    if not out:
        return np.empty((0, 2), dtype=np.int64)
    return np.array(out, dtype=np.int64)


def hh_overlaps(hsegs: np.ndarray) -> np.ndarray:
    return _parallel_overlaps(hsegs)


def vv_overlaps(vsegs: np.ndarray) -> np.ndarray:
    return _parallel_overlaps(vsegs)


def shift_from(arr: np.ndarray, axis: int, threshold: int, amount: int) -> None:
    """In place: add ``amount`` to every coordinate ``>= threshold`` on axis."""
    col = arr[..., axis]
    col[col >= threshold] += amount
