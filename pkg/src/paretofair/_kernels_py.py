"""Pure-Python (numpy) kernels. Fallback for the compiled ``_kernels`` module.

All kernels take a C-contiguous float64 array of shape (M, N) in canonical
(maximize-everything) orientation. Results must match the compiled kernels
bit for bit, so distances are accumulated axis by axis in a fixed order.
"""

from __future__ import annotations

import numpy as np


def _pairwise_distance(pts: np.ndarray) -> np.ndarray:
    diff = pts[:, None, :] - pts[None, :, :]
    d2 = np.zeros(diff.shape[:2])
    for k in range(pts.shape[1]):
        d2 += diff[:, :, k] * diff[:, :, k]
    return np.sqrt(d2)


def nondominated_mask(pts: np.ndarray) -> np.ndarray:
    """True where no other point is >= everywhere and > somewhere."""
    pts = np.ascontiguousarray(pts, dtype=np.float64)
    if pts.shape[0] == 0:
        return np.zeros(0, dtype=bool)
    ge = np.all(pts[:, None, :] >= pts[None, :, :], axis=2)
    gt = np.any(pts[:, None, :] > pts[None, :, :], axis=2)
    # dominated[i] iff some j has ge[j, i] and gt[j, i]
    return ~np.any(ge & gt, axis=0)


def niche_counts(pts: np.ndarray, sigma: float) -> np.ndarray:
    """Number of *other* points strictly closer than ``sigma`` (Euclidean)."""
    pts = np.ascontiguousarray(pts, dtype=np.float64)
    if pts.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    close = _pairwise_distance(pts) < sigma
    return close.sum(axis=1).astype(np.int64) - 1


def eps_components(pts: np.ndarray, eps: float) -> np.ndarray:
    """Connected components of the graph joining points at distance <= eps.

    This is DBSCAN with minPts = 1: every point is a core point, so clusters
    are exactly the density-reachable components. Labels are numbered in
    order of first appearance.
    """
    pts = np.ascontiguousarray(pts, dtype=np.float64)
    m = pts.shape[0]
    parent = list(range(m))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    if m:
        near = _pairwise_distance(pts) <= eps
        for i, j in zip(*np.nonzero(np.triu(near, k=1))):
            ri, rj = find(int(i)), find(int(j))
            if ri != rj:
                if ri < rj:
                    parent[rj] = ri
                else:
                    parent[ri] = rj
    labels = np.empty(m, dtype=np.int64)
    seen: dict[int, int] = {}
    for i in range(m):
        root = find(i)
        labels[i] = seen.setdefault(root, len(seen))
    return labels


def _prune(pts: np.ndarray) -> np.ndarray:
    """Drop exact duplicates (keep first) and weakly dominated points."""
    m = pts.shape[0]
    if m <= 1:
        return pts
    ge = np.all(pts[:, None, :] >= pts[None, :, :], axis=2)
    eq = np.all(pts[:, None, :] == pts[None, :, :], axis=2)
    earlier = np.tril(np.ones((m, m), dtype=bool), k=-1).T  # earlier[j, i] = j < i
    drop = np.any((ge & ~eq) | (eq & earlier), axis=0)
    return pts[~drop]


def _sweep2d(pts: np.ndarray) -> float:
    order = np.lexsort((-pts[:, 1], -pts[:, 0]))
    total = 0.0
    ymax = 0.0
    for i in order:
        x, y = pts[i, 0], pts[i, 1]
        if y > ymax:
            total += x * (y - ymax)
            ymax = y
    return float(total)


def _box(p: np.ndarray) -> float:
    v = 1.0
    for c in p:
        v *= c
    return float(v)


def _wfg(pts: np.ndarray) -> float:
    m, d = pts.shape
    if m == 0:
        return 0.0
    if m == 1:
        return _box(pts[0])
    if d == 2:
        return _sweep2d(pts)
    pts = pts[np.argsort(-pts[:, 0], kind="stable")]
    total = 0.0
    for i in range(m):
        p = pts[i]
        limited = _prune(np.minimum(pts[i + 1:], p))
        total += _box(p) - _wfg(limited)
    return total


def hypervolume(pts: np.ndarray) -> float:
    """Volume dominated by ``pts`` with the origin as reference point.

    Two objectives use a sort-and-sweep; more use the WFG exclusive-volume
    recursion, limiting the remaining points by each point in turn.
    """
    pts = np.ascontiguousarray(pts, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[0] == 0:
        return 0.0
    pts = np.maximum(pts, 0.0)
    return _wfg(_prune(pts))
