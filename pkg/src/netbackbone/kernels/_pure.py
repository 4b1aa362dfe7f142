"""Pure-Python graph kernels.

Reference implementation of the hot inner loops (Dijkstra single-source
passes and the traffic-weighted betweenness accumulation). The Cython
backend in ``_fast.pyx`` mirrors this module operation for operation so
that both produce bit-identical floating-point output.

Determinism contract shared by both backends:

* the priority queue orders entries by ``(distance, vertex-id)``;
* incident edges are relaxed in adjacency order (ascending edge id);
* on equal tentative distance, a not-yet-settled vertex adopts the
  incoming edge as predecessor only if its id is smaller than the current
  predecessor edge id (this realises the smallest-predecessor-edge-id
  tie-break while staying acyclic in the presence of zero-length edges).
"""

import heapq
import math

INF = math.inf


def dijkstra(indptr, nbr_vertex, nbr_edge, lengths, mask, source, targets=None,
             want_pred=False):
    """Single-source shortest paths restricted to edges with ``mask`` set.

    Returns ``(dist, pred_edge, order)`` where ``dist`` and ``pred_edge``
    are per-vertex lists (``inf`` / ``-1`` when unreached) and ``order`` is
    the settle order. With ``targets`` given and ``want_pred`` false the
    search stops once every target is settled; only settled entries are
    final then. ``want_pred`` disables early exit so that predecessor
    chains to any reachable vertex are complete.
    """
    n = len(indptr) - 1
    indptr = indptr.tolist()
    nbr_vertex = nbr_vertex.tolist()
    nbr_edge = nbr_edge.tolist()
    lengths = lengths.tolist()
    mask = mask.tolist()

    dist = [INF] * n
    pred = [-1] * n
    settled = [False] * n
    order = []
    dist[source] = 0.0

    pending = 0
    is_target = None
    if targets is not None and not want_pred:
        is_target = [False] * n
        for t in targets:
            t = int(t)
            if not is_target[t]:
                is_target[t] = True
                pending += 1

    heap = [(0.0, source)]
    while heap:
        d, u = heapq.heappop(heap)
        if settled[u] or d > dist[u]:
            continue
        settled[u] = True
        order.append(u)
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
                heapq.heappush(heap, (nd, v))
            elif nd == dist[v] and not settled[v] and (pred[v] == -1 or e < pred[v]):
                pred[v] = e
    return dist, pred, order


def betweenness_accumulate(indptr, nbr_vertex, nbr_edge, lengths, mask, source,
                           sink_weight, scores, rel_tol=1e-12):
    """Add one source's traffic-weighted betweenness contribution to ``scores``.

    ``sink_weight[v]`` carries the traffic volume terminating at ``v`` for
    this source (zero elsewhere). For every edge the accumulated amount is
    volume times the fraction of minimum-cost source-sink paths crossing
    it. Path ties are detected with relative tolerance ``rel_tol``.
    """
    n = len(indptr) - 1
    indptr_l = indptr.tolist()
    nbr_vertex_l = nbr_vertex.tolist()
    nbr_edge_l = nbr_edge.tolist()
    lengths_l = lengths.tolist()
    mask_l = mask.tolist()
    sink_weight_l = sink_weight.tolist()

    dist, _pred, order = dijkstra(indptr, nbr_vertex, nbr_edge, lengths, mask,
                                  source, None, True)

    rank = [-1] * n
    for i, v in enumerate(order):
        rank[v] = i

    sigma = [0.0] * n
    sigma[source] = 1.0
    for v in order:
        if v == source:
            continue
        dv = dist[v]
        tol = rel_tol * (dv if dv > 1.0 else 1.0)
        acc = 0.0
        for i in range(indptr_l[v], indptr_l[v + 1]):
            e = nbr_edge_l[i]
            if not mask_l[e]:
                continue
            u = nbr_vertex_l[i]
            if rank[u] < 0 or rank[u] >= rank[v]:
                continue
            if abs(dist[u] + lengths_l[e] - dv) <= tol:
                acc += sigma[u]
        sigma[v] = acc

    delta = [0.0] * n
    for v in reversed(order):
        s_v = sigma[v]
        if s_v == 0.0:
            continue
        acc = 0.0
        for i in range(indptr_l[v], indptr_l[v + 1]):
            e = nbr_edge_l[i]
            if not mask_l[e]:
                continue
            u = nbr_vertex_l[i]
            if rank[u] <= rank[v]:
                continue
            du = dist[u]
            tol = rel_tol * (du if du > 1.0 else 1.0)
            if abs(dist[v] + lengths_l[e] - du) <= tol and sigma[u] > 0.0:
                term = (s_v / sigma[u]) * (sink_weight_l[u] + delta[u])
                scores[e] += term
                acc += term
        delta[v] = acc
