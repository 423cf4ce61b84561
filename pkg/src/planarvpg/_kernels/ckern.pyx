# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: segment-pair hit enumeration and bulk coordinate maps.

Same contract as ``pykern.py``; this version runs the pair loops in C.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "c"


def hv_hits(cnp.int64_t[:, :] hsegs, cnp.int64_t[:, :] vsegs):
    cdef Py_ssize_t nh = hsegs.shape[0]
    cdef Py_ssize_t nv = vsegs.shape[0]
    cdef Py_ssize_t i, j, k
    cdef cnp.int64_t y, x1, x2, vx, vy1, vy2
    cdef Py_ssize_t count = 0
    if nh == 0 or nv == 0:
        return np.empty((0, 5), dtype=np.int64)
    for i in range(nh):
        y = hsegs[i, 0]
        x1 = hsegs[i, 1]
        x2 = hsegs[i, 2]
        for j in range(nv):
            if vsegs[j, 0] >= x1 and vsegs[j, 0] <= x2 and y >= vsegs[j, 1] and y <= vsegs[j, 2]:
                count += 1
    out = np.empty((count, 5), dtype=np.int64)
    cdef cnp.int64_t[:, :] o = out
    k = 0
    for i in range(nh):
        y = hsegs[i, 0]
        x1 = hsegs[i, 1]
        x2 = hsegs[i, 2]
        for j in range(nv):
            vx = vsegs[j, 0]
            vy1 = vsegs[j, 1]
            vy2 = vsegs[j, 2]
            if vx >= x1 and vx <= x2 and y >= vy1 and y <= vy2:
                o[k, 0] = i
                o[k, 1] = j
                o[k, 2] = vx
                o[k, 3] = y
                o[k, 4] = 1 if (vx > x1 and vx < x2 and y > vy1 and y < vy2) else 0
                k += 1
    return out


def _parallel_overlaps(cnp.int64_t[:, :] segs, cnp.int64_t[:] order):
    cdef Py_ssize_t n = segs.shape[0]
    cdef Py_ssize_t i, j
    cdef Py_ssize_t count = 0
    cdef cnp.int64_t line, hi_i
    for i in range(n - 1):
        line = segs[order[i], 0]
        hi_i = segs[order[i], 2]
        j = i + 1
        while j < n and segs[order[j], 0] == line and segs[order[j], 1] <= hi_i:
            count += 1
            j += 1
    out = np.empty((count, 2), dtype=np.int64)
    cdef cnp.int64_t[:, :] o = out
    cdef Py_ssize_t k = 0
    for i in range(n - 1):
        line = segs[order[i], 0]
        hi_i = segs[order[i], 2]
        j = i + 1
        while j < n and segs[order[j], 0] == line and segs[order[j], 1] <= hi_i:
            o[k, 0] = order[i]
            o[k, 1] = order[j]
            k += 1
            j += 1
    return out


def hh_overlaps(hsegs):
    hsegs = np.ascontiguousarray(hsegs, dtype=np.int64)
    if len(hsegs) < 2:
        return np.empty((0, 2), dtype=np.int64)
    order = np.lexsort((hsegs[:, 1], hsegs[:, 0])).astype(np.int64)
    return _parallel_overlaps(hsegs, order)


def vv_overlaps(vsegs):
    return hh_overlaps(vsegs)


def shift_from(arr, int axis, cnp.int64_t threshold, cnp.int64_t amount):
    cdef cnp.int64_t[:, :] a2
    flat = arr.reshape(-1, arr.shape[-1])
    a2 = flat
    cdef Py_ssize_t n = a2.shape[0]
    cdef Py_ssize_t i
    for i in range(n):
        if a2[i, axis] >= threshold:
            a2[i, axis] += amount
