# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernels; semantics match `_pykern` exactly."""

import numpy as np

cimport numpy as cnp


def brandes_betweenness(indptr, indices, int n):
    cdef cnp.int64_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef cnp.int64_t[::1] idx = np.ascontiguousarray(indices, dtype=np.int64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] bc_arr = np.zeros(n)
    cdef cnp.float64_t[::1] bc = bc_arr
    cdef cnp.int64_t[::1] dist = np.empty(n, dtype=np.int64)
    cdef cnp.float64_t[::1] sigma = np.empty(n)
    cdef cnp.float64_t[::1] delta = np.empty(n)
    cdef cnp.int64_t[::1] order = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] queue = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] pred_head = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] pred_next = np.empty(max(len(idx), 1), dtype=np.int64)
    cdef cnp.int64_t[::1] pred_node = np.empty(max(len(idx), 1), dtype=np.int64)
    cdef Py_ssize_t s, v, w, e, i, head, tail, n_order, n_pred
    cdef double coeff

    for s in range(n):
        for v in range(n):
            dist[v] = -1
            sigma[v] = 0.0
            pred_head[v] = -1
        dist[s] = 0
        sigma[s] = 1.0
        queue[0] = s
        head = 0
        tail = 1
        n_order = 0
        n_pred = 0
        while head < tail:
            v = queue[head]
            head += 1
            order[n_order] = v
            n_order += 1
            for e in range(ip[v], ip[v + 1]):
                w = idx[e]
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
        for v in range(n):
            delta[v] = 0.0
        for i in range(n_order - 1, -1, -1):
            w = order[i]
            coeff = (1.0 + delta[w]) / sigma[w]
            e = pred_head[w]
            while e >= 0:
                delta[pred_node[e]] += sigma[pred_node[e]] * coeff
                e = pred_next[e]
            if w != s:
                bc[w] += delta[w]
    for v in range(n):
        bc[v] *= 0.5
    return bc_arr


def triangle_counts(indptr, indices, int n):
    cdef cnp.int64_t[::1] ip = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef cnp.int64_t[::1] idx = np.ascontiguousarray(indices, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] tri_arr = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] tri = tri_arr
    cdef Py_ssize_t v, e, u, i, j
    cdef cnp.int64_t twice, a, b

    for v in range(n):
        twice = 0
        for e in range(ip[v], ip[v + 1]):
            u = idx[e]
            i = ip[v]
            j = ip[u]
            while i < ip[v + 1] and j < ip[u + 1]:
                a = idx[i]
                b = idx[j]
                if a == b:
                    twice += 1
                    i += 1
                    j += 1
                elif a < b:
                    i += 1
                else:
                    j += 1
        tri[v] = twice // 2
    return tri_arr
