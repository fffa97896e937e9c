"""Pure-Python fallback for the compiled graph kernels.

Mirrors `_ckern` operation-for-operation (same traversal and accumulation
order) so results are bit-identical between the two backends.
"""

from __future__ import annotations

import numpy as np


def brandes_betweenness(indptr, indices, n: int) -> np.ndarray:
    """Unnormalized shortest-path betweenness, each unordered pair once.

    Single-source accumulation over all sources with fractional credit
    across equal-length paths; the undirected double count is halved at
    the end.
    """
    indptr = np.asarray(indptr, dtype=np.int64)
    indices = np.asarray(indices, dtype=np.int64)
    bc = np.zeros(n)
    dist = np.empty(n, dtype=np.int64)
    sigma = np.empty(n)
    delta = np.empty(n)
    order = np.empty(n, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    pred_head = np.empty(n, dtype=np.int64)
    # Predecessor lists stored edge-wise: at most one entry per directed edge.
    pred_next = np.empty(len(indices), dtype=np.int64)
    pred_node = np.empty(len(indices), dtype=np.int64)

    for s in range(n):
        dist.fill(-1)
        sigma.fill(0.0)
        pred_head.fill(-1)
        dist[s] = 0
        sigma[s] = 1.0
        queue[0] = s
        head, tail, n_order, n_pred = 0, 1, 0, 0
        while head < tail:
            v = queue[head]
            head += 1
            order[n_order] = v
            n_order += 1
            for e in range(indptr[v], indptr[v + 1]):
                w = indices[e]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue[tail] = w
                    tail += 1
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    pred_node[n_pred] = v
                    pred_next[n_pred] = pred_head[w]
                    pred_head[w] = n_pred
                    n_pred += 1
        delta.fill(0.0)
        for i in range(n_order - 1, -1, -1):
            w = order[i]
            coeff = (1.0 + delta[w]) / sigma[w]
            e = pred_head[w]
            while e >= 0:
                delta[pred_node[e]] += sigma[pred_node[e]] * coeff
                e = pred_next[e]
            if w != s:
                bc[w] += delta[w]
    bc *= 0.5
    return bc


def triangle_counts(indptr, indices, n: int) -> np.ndarray:
    """Triangles through each node; neighbor lists must be sorted."""
    indptr = np.asarray(indptr, dtype=np.int64)
    indices = np.asarray(indices, dtype=np.int64)
    tri = np.zeros(n, dtype=np.int64)
    for v in range(n):
        twice = 0
        for e in range(indptr[v], indptr[v + 1]):
            u = indices[e]
            # Sorted-merge intersection of N(v) and N(u).
            i, j = indptr[v], indptr[u]
            while i < indptr[v + 1] and j < indptr[u + 1]:
                a, b = indices[i], indices[j]
                if a == b:
                    twice += 1
                    i += 1
                    j += 1
                elif a < b:
                    i += 1
                else:
                    j += 1
        tri[v] = twice // 2
    return tri
