"""Hot numeric kernels, JIT-compiled when the numba backend is active.

Backend selection: ``QCLC_BACKEND=numba`` (default when numba imports) or
``QCLC_BACKEND=python`` for the interpreted fallback.  Kernels are written in
nopython style so the same code runs on either backend; the module also
provides a vectorized numpy alternative for the codeword-weight scan, which
the fallback path prefers (see :mod:`qclc.trapping`).

All graph inputs are CSR-style integer arrays; node sets are int32.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba as _numba
except ImportError:  # pragma: no cover - numba is a hard dependency by default
    _numba = None

_choice = os.environ.get("QCLC_BACKEND", "auto").strip().lower()
if _choice in ("python", "numpy"):
    NUMBA_ENABLED = False
elif _choice in ("auto", "", "numba"):
    NUMBA_ENABLED = _numba is not None
else:
    raise ValueError(f"unknown QCLC_BACKEND value: {_choice!r}")


def _jit(fn):
    if NUMBA_ENABLED:
        return _numba.njit(cache=True)(fn)
    return fn


NO_CYCLE = 1 << 30

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_U1 = np.uint64(1)
_U2 = np.uint64(2)
_U4 = np.uint64(4)
_U56 = np.uint64(56)


@_jit
def popcount64(x):
    x = x - ((x >> _U1) & _M1)
    x = (x & _M2) + ((x >> _U2) & _M2)
    x = (x + (x >> _U4)) & _M4
    return (x * _H01) >> _U56


@_jit
def bfs_girth_csr(indptr, indices, n_nodes):
    """Shortest cycle length in an undirected simple graph, BFS from each root.

    Returns NO_CYCLE for forests.  For each root, a non-tree edge seen between
    nodes at distances d(u), d(w) closes a walk of length d(u) + d(w) + 1 that
    contains a cycle at most that long; the minimum over all roots is exact.
    """
    best = NO_CYCLE
    dist = np.empty(n_nodes, np.int32)
    parent = np.empty(n_nodes, np.int32)
    queue = np.empty(n_nodes, np.int32)
    for root in range(n_nodes):
        for i in range(n_nodes):
            dist[i] = -1
        dist[root] = 0
        parent[root] = -1
        queue[0] = root
        head = 0
        tail = 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            if 2 * du + 2 >= best:
                break
            for e in range(indptr[u], indptr[u + 1]):
                w = indices[e]
                if dist[w] < 0:
                    dist[w] = du + 1
                    parent[w] = u
                    queue[tail] = w
                    tail += 1
                elif w != parent[u]:
                    cyc = du + dist[w] + 1
                    if cyc < best:
                        best = cyc
    return best


@_jit
def gray_min_weight(basis):
    """Minimum Hamming weight over all nonzero XOR combinations of basis rows.

    ``basis`` is uint64 of shape (k, words); enumeration is Gray-coded so each
    step XORs a single row.  Exponential in k: callers gate on k.
    """
    k, nw = basis.shape
    cw = np.zeros(nw, np.uint64)
    weight = np.int64(0)
    best = np.int64(1) << 62
    total = np.int64(1) << k
    t = np.int64(1)
    while t < total:
        tt = t
        j = 0
        while tt & 1 == 0:
            tt >>= 1
            j += 1
        weight = np.int64(0)
        for wi in range(nw):
            cw[wi] ^= basis[j, wi]
            weight += np.int64(popcount64(cw[wi]))
        if weight < best:
            best = weight
        t += 1
    return best


_POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint16)


def min_weight_numpy(basis: np.ndarray) -> int:
    """Vectorized alternative to :func:`gray_min_weight` (meet in the middle).

    Splits the basis, tabulates all XORs of each half, and scans one half
    against the other with byte-table popcounts.  Pure numpy; used when the
    numba backend is disabled.
    """
    k, nw = basis.shape
    if k == 0:
        raise ValueError("empty basis")
    k_lo = min(k, 14)

    def table(rows: np.ndarray) -> np.ndarray:
        t = np.zeros((1, nw), dtype=np.uint64)
        for r in rows:
            t = np.concatenate([t, t ^ r[None, :]])
        return t

    lo = table(basis[:k_lo])
    hi = table(basis[k_lo:])
    best = np.int64(1) << 62
    for idx in range(hi.shape[0]):
        x = lo if idx == 0 else lo ^ hi[idx][None, :]
        weights = _POP8[x.view(np.uint8)].sum(axis=1, dtype=np.int64)
        if idx == 0:
            weights = weights[1:]  # skip the all-zero combination
        if weights.size:
            m = weights.min()
            if m < best:
                best = m
    return int(best)


@_jit
def even_subgraph_min(
    vc_ptr,
    vc_idx,
    cv_ptr,
    cv_idx,
    n_v,
    n_c,
    limit,
    max_vdeg,
    max_cdeg,
    best_support,
):
    """Smallest nonempty variable set inducing only even check degrees.

    Explores connected candidate sets of size <= limit: each step adjoins a
    neighbor of the lowest odd-parity check, which every completion must
    cover.  The minimum support found is written to ``best_support`` (int32,
    length >= limit); returns its weight, or 0 when no qualifying set of size
    <= limit exists.
    """
    parity = np.zeros(n_c, np.uint8)
    in_set = np.zeros(n_v, np.uint8)
    odd_list = np.empty((limit + 1) * max_vdeg + 1, np.int32)
    nodes = np.empty(limit + 1, np.int32)
    fresh = np.empty(limit + 1, np.uint8)
    cand_buf = np.empty((limit + 1) * max_cdeg + 1, np.int32)
    cand_pos = np.empty(limit + 1, np.int64)
    cand_end = np.empty(limit + 1, np.int64)
    n_odd = 0
    best = 0

    for seed in range(n_v):
        # add seed at depth 0
        nodes[0] = seed
        in_set[seed] = 1
        n_odd = 0
        for e in range(vc_ptr[seed], vc_ptr[seed + 1]):
            x = vc_idx[e]
            parity[x] = 1
            odd_list[n_odd] = x
            n_odd += 1
        depth = 0
        fresh[0] = 1
        while depth >= 0:
            if fresh[depth] == 1:
                fresh[depth] = 0
                size = depth + 1
                cand_pos[depth] = 0
                cand_end[depth] = 0
                if n_odd == 0:
                    if best == 0 or size < best:
                        best = size
                        for i in range(size):
                            best_support[i] = nodes[i]
                    # supersets are heavier: no children
                elif size < limit and n_odd <= max_vdeg * (limit - size):
                    can = True
                    if best != 0:
                        need = (n_odd + max_vdeg - 1) // max_vdeg
                        if size + need >= best:
                            can = False
                    if can:
                        low = odd_list[0]
                        for i in range(1, n_odd):
                            if odd_list[i] < low:
                                low = odd_list[i]
                        base = depth * max_cdeg
                        cnt = 0
                        for e in range(cv_ptr[low], cv_ptr[low + 1]):
                            v = cv_idx[e]
                            if v > seed and in_set[v] == 0:
                                cand_buf[base + cnt] = v
                                cnt += 1
                        cand_pos[depth] = base
                        cand_end[depth] = base + cnt
            if cand_pos[depth] < cand_end[depth]:
                v = cand_buf[cand_pos[depth]]
                cand_pos[depth] += 1
                in_set[v] = 1
                for e in range(vc_ptr[v], vc_ptr[v + 1]):
                    x = vc_idx[e]
                    parity[x] ^= 1
                    if parity[x] == 1:
                        odd_list[n_odd] = x
                        n_odd += 1
                    else:
                        for i in range(n_odd):
                            if odd_list[i] == x:
                                odd_list[i] = odd_list[n_odd - 1]
                                n_odd -= 1
                                break
                depth += 1
                nodes[depth] = v
                fresh[depth] = 1
            else:
                v = nodes[depth]
                in_set[v] = 0
                for e in range(vc_ptr[v], vc_ptr[v + 1]):
                    x = vc_idx[e]
                    parity[x] ^= 1
                    if parity[x] == 1:
                        odd_list[n_odd] = x
                        n_odd += 1
                    else:
                        for i in range(n_odd):
                            if odd_list[i] == x:
                                odd_list[i] = odd_list[n_odd - 1]
                                n_odd -= 1
                                break
                depth -= 1
    return best


@_jit
def ets_enumerate_kernel(
    vv_ptr,
    vv_idx,
    vc_ptr,
    vc_idx,
    n_v,
    n_c,
    a_max,
    b_allow,
    drop_max,
    out_sets,
    out_b,
    max_out,
):
    """Enumerate connected variable sets whose induced check degrees stay <= 2.

    A set of size a with b odd checks is recorded when b <= b_allow[a]
    (entries < 0 never record).  ``drop_max[t]`` bounds how much b can shrink
    when growing from size t to t+1; subtrees that cannot reach a recordable
    (a, b) are cut.  Connected-subgraph enumeration uses seed = minimum node
    plus include/exclude branching, so each set is visited exactly once.

    Node status: 0 free, 1 on a frontier, 2 excluded in the current subtree,
    3 in the current set.  Returns the number of sets found, or -1 when the
    output arrays overflow.
    """
    status = np.zeros(n_v, np.uint8)
    cdeg = np.zeros(n_c, np.uint8)
    members = np.empty(a_max + 1, np.int32)
    ext_buf = np.empty((a_max + 2) * (n_v + 1), np.int32)
    ext_start = np.empty(a_max + 1, np.int64)
    ext_len = np.empty(a_max + 1, np.int64)
    ext_pos = np.empty(a_max + 1, np.int64)
    new_from = np.empty(a_max + 1, np.int64)
    entered = np.empty(a_max + 1, np.uint8)
    n_found = 0

    for seed in range(n_v):
        b = 0
        for e in range(vc_ptr[seed], vc_ptr[seed + 1]):
            cdeg[vc_idx[e]] = 1
            b += 1
        members[0] = seed
        status[seed] = 3
        cnt = 0
        for e in range(vv_ptr[seed], vv_ptr[seed + 1]):
            w = vv_idx[e]
            if w > seed:
                ext_buf[cnt] = w
                status[w] = 1
                cnt += 1
        ext_start[0] = 0
        ext_len[0] = cnt
        ext_pos[0] = 0
        new_from[0] = 0  # the whole level-0 frontier is fresh
        entered[0] = 1
        depth = 0

        while depth >= 0:
            if entered[depth] == 1:
                entered[depth] = 0
                size = depth + 1
                if b_allow[size] >= 0 and b <= b_allow[size]:
                    if n_found >= max_out:
                        return -1
                    for i in range(size):
                        out_sets[n_found, i] = members[i]
                    for i in range(size, a_max):
                        out_sets[n_found, i] = -1
                    out_b[n_found] = b
                    n_found += 1
                reachable = False
                if size < a_max:
                    run = b
                    for a2 in range(size + 1, a_max + 1):
                        run -= drop_max[a2 - 1]
                        if b_allow[a2] >= 0 and run <= b_allow[a2]:
                            reachable = True
                            break
                if not reachable:
                    ext_pos[depth] = ext_len[depth]  # no branching below

            descended = False
            while ext_pos[depth] < ext_len[depth]:
                u = ext_buf[ext_start[depth] + ext_pos[depth]]
                ext_pos[depth] += 1
                ok = True
                for e in range(vc_ptr[u], vc_ptr[u + 1]):
                    if cdeg[vc_idx[e]] >= 2:
                        ok = False
                        break
                if not ok:
                    status[u] = 2  # a full check never empties: exclude for good
                    continue
                for e in range(vc_ptr[u], vc_ptr[u + 1]):
                    x = vc_idx[e]
                    if cdeg[x] == 0:
                        b += 1
                    else:
                        b -= 1
                    cdeg[x] += 1
                status[u] = 3
                base = ext_start[depth] + ext_len[depth]
                cnt = 0
                for i in range(ext_pos[depth], ext_len[depth]):
                    ext_buf[base + cnt] = ext_buf[ext_start[depth] + i]
                    cnt += 1
                tail = cnt
                for e in range(vv_ptr[u], vv_ptr[u + 1]):
                    w = vv_idx[e]
                    if w > seed and status[w] == 0:
                        ext_buf[base + cnt] = w
                        status[w] = 1
                        cnt += 1
                depth += 1
                members[depth] = u
                ext_start[depth] = base
                ext_len[depth] = cnt
                ext_pos[depth] = 0
                new_from[depth] = tail
                entered[depth] = 1
                descended = True
                break
            if descended:
                continue

            # level exhausted: restore frontier, pop the member
            for i in range(new_from[depth]):
                w = ext_buf[ext_start[depth] + i]
                if status[w] == 2:
                    status[w] = 1  # still on an ancestor frontier
            for i in range(new_from[depth], ext_len[depth]):
                status[ext_buf[ext_start[depth] + i]] = 0
            u = members[depth]
            for e in range(vc_ptr[u], vc_ptr[u + 1]):
                x = vc_idx[e]
                cdeg[x] -= 1
                if cdeg[x] == 0:
                    b -= 1
                else:
                    b += 1
            status[u] = 0 if depth == 0 else 2
            depth -= 1
    return n_found
