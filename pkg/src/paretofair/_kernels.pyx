# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels. Same contracts as ``_kernels_py``; results are bit-identical."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()


def nondominated_mask(pts):
    cdef double[:, ::1] p = np.ascontiguousarray(pts, dtype=np.float64)
    cdef Py_ssize_t m = p.shape[0], d = p.shape[1]
    cdef Py_ssize_t i, j, k
    cdef bint ge, gt
    out = np.ones(m, dtype=np.uint8)
    cdef cnp.uint8_t[::1] keep = out
    for i in range(m):
        for j in range(m):
            if j == i:
                continue
            ge = True
            gt = False
            for k in range(d):
                if p[j, k] < p[i, k]:
                    ge = False
                    break
                if p[j, k] > p[i, k]:
                    gt = True
            if ge and gt:
                keep[i] = 0
                break
    return out.astype(bool)


cdef inline double _dist(double[:, ::1] p, Py_ssize_t i, Py_ssize_t j) nogil:
    cdef double acc = 0.0, diff
    cdef Py_ssize_t k
    for k in range(p.shape[1]):
        diff = p[i, k] - p[j, k]
        acc += diff * diff
    return sqrt(acc)


def niche_counts(pts, double sigma):
    cdef double[:, ::1] p = np.ascontiguousarray(pts, dtype=np.float64)
    cdef Py_ssize_t m = p.shape[0]
    cdef Py_ssize_t i, j
    out = np.zeros(m, dtype=np.int64)
    cdef cnp.int64_t[::1] nc = out
    with nogil:
        for i in range(m):
            for j in range(m):
                if j != i and _dist(p, i, j) < sigma:
                    nc[i] += 1
    return out


cdef Py_ssize_t _find(Py_ssize_t[::1] parent, Py_ssize_t i) nogil:
    while parent[i] != i:
        parent[i] = parent[parent[i]]
        i = parent[i]
    return i


def eps_components(pts, double eps):
    cdef double[:, ::1] p = np.ascontiguousarray(pts, dtype=np.float64)
    cdef Py_ssize_t m = p.shape[0]
    cdef Py_ssize_t i, j, ri, rj
    parent_arr = np.arange(m, dtype=np.intp)
    cdef Py_ssize_t[::1] parent = parent_arr
    with nogil:
        for i in range(m):
            for j in range(i + 1, m):
                if _dist(p, i, j) <= eps:
                    ri = _find(parent, i)
                    rj = _find(parent, j)
                    if ri < rj:
                        parent[rj] = ri
                    elif rj < ri:
                        parent[ri] = rj
    labels = np.empty(m, dtype=np.int64)
    cdef cnp.int64_t[::1] lab = labels
    cdef dict seen = {}
    for i in range(m):
        ri = _find(parent, i)
        lab[i] = seen.setdefault(ri, len(seen))
    return labels


cdef object _prune(double[:, ::1] p):
    """Drop exact duplicates (keep first) and weakly dominated points; order kept."""
    cdef Py_ssize_t m = p.shape[0], d = p.shape[1]
    cdef Py_ssize_t i, j, k, n_keep = 0
    cdef bint ge, eq
    if m <= 1:
        return np.asarray(p)
    keep_arr = np.ones(m, dtype=np.uint8)
    cdef cnp.uint8_t[::1] keep = keep_arr
    for i in range(m):
        for j in range(m):
            if j == i:
                continue
            ge = True
            eq = True
            for k in range(d):
                if p[j, k] < p[i, k]:
                    ge = False
                    break
                if p[j, k] != p[i, k]:
                    eq = False
            if ge and (not eq or j < i):
                keep[i] = 0
                break
    return np.asarray(p)[keep_arr.astype(bool)]


cdef double _box(double[:, ::1] p, Py_ssize_t i):
    cdef double v = 1.0
    cdef Py_ssize_t k
    for k in range(p.shape[1]):
        v *= p[i, k]
    return v


cdef double _sweep2d(double[:, ::1] p):
    order = np.lexsort((-np.asarray(p[:, 1]), -np.asarray(p[:, 0])))
    cdef Py_ssize_t[::1] idx = order.astype(np.intp)
    cdef double total = 0.0, ymax = 0.0, x, y
    cdef Py_ssize_t t, i
    for t in range(idx.shape[0]):
        i = idx[t]
        x = p[i, 0]
        y = p[i, 1]
        if y > ymax:
            total += x * (y - ymax)
            ymax = y
    return total


cdef double _wfg(double[:, ::1] p):
    cdef Py_ssize_t m = p.shape[0], d = p.shape[1]
    cdef Py_ssize_t i, j, k
    cdef double total = 0.0
    cdef double[:, ::1] s
    cdef double[:, ::1] lim
    if m == 0:
        return 0.0
    if m == 1:
        return _box(p, 0)
    if d == 2:
        return _sweep2d(p)
    arr = np.asarray(p)
    s = np.ascontiguousarray(arr[np.argsort(-arr[:, 0], kind="stable")])
    for i in range(m):
        lim_arr = np.empty((m - i - 1, d), dtype=np.float64)
        lim = lim_arr
        for j in range(i + 1, m):
            for k in range(d):
                lim[j - i - 1, k] = s[j, k] if s[j, k] < s[i, k] else s[i, k]
        total += _box(s, i) - _wfg(np.ascontiguousarray(_prune(lim)))
    return total


def hypervolume(pts):
    arr = np.ascontiguousarray(pts, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] == 0:
        return 0.0
    arr = np.ascontiguousarray(np.maximum(arr, 0.0))
    return float(_wfg(np.ascontiguousarray(_prune(arr))))
