# cython: language_level=3
"""Cython twin of ``_pure``; same contracts, same bit-level output."""

import numpy as np

cimport cython
from libc.math cimport INFINITY, fabs


cdef inline bint _heap_less(double d1, int v1, double d2, int v2) nogil:
    return d1 < d2 or (d1 == d2 and v1 < v2)


cdef void _heap_push(double[::1] hd, int[::1] hv, Py_ssize_t* size,
                     double d, int v) nogil:
    cdef Py_ssize_t i = size[0]
    cdef Py_ssize_t parent
    hd[i] = d
    hv[i] = v
    size[0] += 1
    while i > 0:
        parent = (i - 1) >> 1
        if _heap_less(hd[i], hv[i], hd[parent], hv[parent]):
            hd[i], hd[parent] = hd[parent], hd[i]
            hv[i], hv[parent] = hv[parent], hv[i]
            i = parent
        else:
            break


cdef void _heap_pop(double[::1] hd, int[::1] hv, Py_ssize_t* size,
                    double* out_d, int* out_v) nogil:
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t child, right, last
    out_d[0] = hd[0]
    out_v[0] = hv[0]
    last = size[0] - 1
    hd[0] = hd[last]
    hv[0] = hv[last]
    size[0] = last
    while True:
        child = 2 * i + 1
        if child >= last:
            break
        right = child + 1
        if right < last and _heap_less(hd[right], hv[right], hd[child], hv[child]):
            child = right
        if _heap_less(hd[child], hv[child], hd[i], hv[i]):
            hd[i], hd[child] = hd[child], hd[i]
            hv[i], hv[child] = hv[child], hv[i]
            i = child
        else:
            break


def dijkstra(int[::1] indptr, int[::1] nbr_vertex, int[::1] nbr_edge,
             double[::1] lengths, unsigned char[::1] mask, int source,
             targets=None, bint want_pred=False):
    """See ``_pure.dijkstra``."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef Py_ssize_t cap = 2 * nbr_edge.shape[0] + 16

    dist_arr = np.full(n, np.inf)
    pred_arr = np.full(n, -1, dtype=np.int32)
    settled_arr = np.zeros(n, dtype=np.uint8)
    order_arr = np.empty(n, dtype=np.int32)
    heap_d_arr = np.empty(cap)
    heap_v_arr = np.empty(cap, dtype=np.int32)

    cdef double[::1] dist = dist_arr
    cdef int[::1] pred = pred_arr
    cdef unsigned char[::1] settled = settled_arr
    cdef int[::1] order = order_arr
    cdef double[::1] hd = heap_d_arr
    cdef int[::1] hv = heap_v_arr

    cdef unsigned char[::1] is_target = None
    cdef long pending = 0
    cdef int[::1] tview
    cdef Py_ssize_t ti
    is_target_arr = None
    if targets is not None and not want_pred:
        is_target_arr = np.zeros(n, dtype=np.uint8)
        is_target = is_target_arr
        tview = np.ascontiguousarray(targets, dtype=np.int32)
        for ti in range(tview.shape[0]):
            if not is_target[tview[ti]]:
                is_target[tview[ti]] = 1
                pending += 1

    cdef Py_ssize_t heap_size = 0
    cdef Py_ssize_t n_order = 0
    cdef double d, nd
    cdef int u, v, e
    cdef Py_ssize_t i

    dist[source] = 0.0
    _heap_push(hd, hv, &heap_size, 0.0, source)

    while heap_size > 0:
        _heap_pop(hd, hv, &heap_size, &d, &u)
        if settled[u] or d > dist[u]:
            continue
        settled[u] = 1
        order[n_order] = u
        n_order += 1
        if is_target is not None and is_target[u]:
            pending -= 1
            if pending == 0:
                break
        for i in range(indptr[u], indptr[u + 1]):
            e = nbr_edge[i]
            if not mask[e]:
                continue
            v = nbr_vertex[i]
            nd = d + lengths[e]
            if nd < dist[v]:
                dist[v] = nd
                pred[v] = e
                _heap_push(hd, hv, &heap_size, nd, v)
            elif nd == dist[v] and not settled[v] and (pred[v] == -1 or e < pred[v]):
                pred[v] = e

    return dist_arr, pred_arr, order_arr[:n_order]


def betweenness_accumulate(int[::1] indptr, int[::1] nbr_vertex,
                           int[::1] nbr_edge, double[::1] lengths,
                           unsigned char[::1] mask, int source,
                           double[::1] sink_weight, double[::1] scores,
                           double rel_tol=1e-12):
    """See ``_pure.betweenness_accumulate``."""
    cdef Py_ssize_t n = indptr.shape[0] - 1

    dist_arr, _pred_arr, order_arr = dijkstra(indptr, nbr_vertex, nbr_edge,
                                              lengths, mask, source, None, True)
    cdef double[::1] dist = dist_arr
    cdef int[::1] order = np.ascontiguousarray(order_arr, dtype=np.int32)

    rank_arr = np.full(n, -1, dtype=np.int64)
    sigma_arr = np.zeros(n)
    delta_arr = np.zeros(n)
    cdef long[::1] rank = rank_arr
    cdef double[::1] sigma = sigma_arr
    cdef double[::1] delta = delta_arr

    cdef Py_ssize_t k, i
    cdef int v, u, e
    cdef double dv, du, tol, acc, s_v, term

    for k in range(order.shape[0]):
        rank[order[k]] = k

    sigma[source] = 1.0
    for k in range(order.shape[0]):
        v = order[k]
        if v == source:
            continue
        dv = dist[v]
        tol = rel_tol * (dv if dv > 1.0 else 1.0)
        acc = 0.0
        for i in range(indptr[v], indptr[v + 1]):
            e = nbr_edge[i]
            if not mask[e]:
                continue
            u = nbr_vertex[i]
            if rank[u] < 0 or rank[u] >= rank[v]:
                continue
            if fabs(dist[u] + lengths[e] - dv) <= tol:
                acc += sigma[u]
        sigma[v] = acc

    for k in range(order.shape[0] - 1, -1, -1):
        v = order[k]
        s_v = sigma[v]
        if s_v == 0.0:
            continue
        acc = 0.0
        for i in range(indptr[v], indptr[v + 1]):
            e = nbr_edge[i]
            if not mask[e]:
                continue
            u = nbr_vertex[i]
            if rank[u] <= rank[v]:
                continue
            du = dist[u]
            tol = rel_tol * (du if du > 1.0 else 1.0)
            if fabs(dist[v] + lengths[e] - du) <= tol and sigma[u] > 0.0:
                term = (s_v / sigma[u]) * (sink_weight[u] + delta[u])
                scores[e] += term
                acc += term
        delta[v] = acc
