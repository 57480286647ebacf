# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; see ``_pykernels`` for the reference semantics."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free
from libc.string cimport memset

YES = 1
NO = 0
UNKNOWN = -1

BACKEND = "cython"


cdef int *_int_array(seq, Py_ssize_t size) except NULL:
    cdef int *buf = <int *> PyMem_Malloc((size if size > 0 else 1) * sizeof(int))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(size):
        buf[i] = seq[i]
    return buf


def greedy_color(int n, indptr, indices, order):
    cdef int *ip = _int_array(indptr, n + 1)
    cdef int *ix = _int_array(indices, len(indices))
    cdef int *col = <int *> PyMem_Malloc((n if n > 0 else 1) * sizeof(int))
    cdef char *mark = <char *> PyMem_Malloc(n + 2)
    cdef int v, i, c, w, t
    try:
        for i in range(n):
            col[i] = -1
        memset(mark, 0, n + 2)
        for t in range(n):
            v = order[t]
            for i in range(ip[v], ip[v + 1]):
                w = col[ix[i]]
                if w >= 0 and w <= n:
                    mark[w] = 1
            c = 0
            while mark[c]:
                c += 1
            col[v] = c
            for i in range(ip[v], ip[v + 1]):
                w = col[ix[i]]
                if w >= 0 and w <= n:
                    mark[w] = 0
        return [col[i] for i in range(n)]
    finally:
        PyMem_Free(ip)
        PyMem_Free(ix)
        PyMem_Free(col)
        PyMem_Free(mark)


def kcolor(int n, indptr, indices, int k, long long budget):
    if n == 0:
        return YES, [], 0
    if k <= 0:
        return NO, [], 0
    cdef int *ip = _int_array(indptr, n + 1)
    cdef int *ix = _int_array(indices, len(indices))
    cdef int *deg = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *color = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *forb = <int *> PyMem_Malloc(n * k * sizeof(int))
    cdef int *sat = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *used = <int *> PyMem_Malloc(k * sizeof(int))
    cdef int *stack_v = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *stack_c = <int *> PyMem_Malloc(n * sizeof(int))
    cdef long long nodes = 0
    cdef int ncolors = 0, depth, v, c, nc, top, i, w, u, best, bs, bd
    cdef int status = NO
    try:
        for i in range(n):
            deg[i] = ip[i + 1] - ip[i]
            color[i] = -1
            sat[i] = 0
        memset(forb, 0, n * k * sizeof(int))
        memset(used, 0, k * sizeof(int))

        # select
        best = -1; bs = -1; bd = -1
        for u in range(n):
            if color[u] < 0 and (sat[u] > bs or (sat[u] == bs and deg[u] > bd)):
                best = u; bs = sat[u]; bd = deg[u]
        depth = 0
        stack_v[0] = best
        stack_c[0] = -1
        while depth >= 0:
            v = stack_v[depth]
            c = stack_c[depth]
            if c >= 0:
                color[v] = -1
                for i in range(ip[v], ip[v + 1]):
                    w = ix[i]
                    forb[w * k + c] -= 1
                    if forb[w * k + c] == 0:
                        sat[w] -= 1
                used[c] -= 1
                if used[c] == 0:
                    ncolors -= 1
            top = ncolors if ncolors < k - 1 else k - 1
            nc = c + 1
            while nc <= top and forb[v * k + nc]:
                nc += 1
            if nc > top:
                depth -= 1
                continue
            if nodes >= budget:
                status = UNKNOWN
                break
            nodes += 1
            color[v] = nc
            for i in range(ip[v], ip[v + 1]):
                w = ix[i]
                if forb[w * k + nc] == 0:
                    sat[w] += 1
                forb[w * k + nc] += 1
            if used[nc] == 0:
                ncolors += 1
            used[nc] += 1
            stack_c[depth] = nc
            if depth == n - 1:
                status = YES
                break
            best = -1; bs = -1; bd = -1
            for u in range(n):
                if color[u] < 0 and (sat[u] > bs or (sat[u] == bs and deg[u] > bd)):
                    best = u; bs = sat[u]; bd = deg[u]
            depth += 1
            stack_v[depth] = best
            stack_c[depth] = -1
        if status == YES:
            return YES, [color[i] for i in range(n)], nodes
        return status, [], nodes
    finally:
        PyMem_Free(ip)
        PyMem_Free(ix)
        PyMem_Free(deg)
        PyMem_Free(color)
        PyMem_Free(forb)
        PyMem_Free(sat)
        PyMem_Free(used)
        PyMem_Free(stack_v)
        PyMem_Free(stack_c)


def cbu_place(int n, int d, order, adj, int gmax, long long budget):
    if n == 0:
        return YES, [], 0
    cdef int ni = gmax * (gmax + 1) // 2
    cdef int total = n * d
    cdef int *il = <int *> PyMem_Malloc(ni * sizeof(int))
    cdef int *ih = <int *> PyMem_Malloc(ni * sizeof(int))
    cdef int *ordr = _int_array(order, n)
    cdef char *A = <char *> PyMem_Malloc(n * n)
    cdef int *lo = <int *> PyMem_Malloc(total * sizeof(int))
    cdef int *hi = <int *> PyMem_Malloc(total * sizeof(int))
    cdef int *cand = <int *> PyMem_Malloc(total * sizeof(int))
    cdef long long nodes = 0
    cdef int p, t, a, v, c, l, h, s, u, ua, ml, mh, b, vb, ub, x, y
    cdef bint ok, sep
    cdef int status = NO
    try:
        c = 0
        for x in range(gmax + 1):
            for y in range(x + 1, gmax + 1):
                il[c] = x
                ih[c] = y
                c += 1
        for x in range(n * n):
            A[x] = 1 if adj[x] else 0
        for x in range(total):
            lo[x] = 0
            hi[x] = 0
            cand[x] = -1
        p = 0
        while p >= 0:
            if p == total:
                status = YES
                break
            a = p // n
            t = p % n
            v = ordr[t]
            c = cand[p] + 1
            while c < ni:
                l = il[c]
                h = ih[c]
                if t == 0 and l + h > gmax:
                    c += 1
                    continue
                ok = True
                for s in range(t):
                    u = ordr[s]
                    ua = u * d + a
                    ml = l if l > lo[ua] else lo[ua]
                    mh = h if h < hi[ua] else hi[ua]
                    if A[u * n + v]:
                        if (a == 0 and ml != mh) or ml > mh:
                            ok = False
                            break
                    elif a == d - 1 and ml <= mh:
                        sep = False
                        for b in range(a):
                            vb = v * d + b
                            ub = u * d + b
                            if (lo[vb] if lo[vb] > lo[ub] else lo[ub]) > (hi[vb] if hi[vb] < hi[ub] else hi[ub]):
                                sep = True
                                break
                        if not sep:
                            ok = False
                            break
                if ok:
                    break
                c += 1
            if c >= ni:
                cand[p] = -1
                p -= 1
                continue
            if nodes >= budget:
                status = UNKNOWN
                break
            nodes += 1
            cand[p] = c
            lo[v * d + a] = il[c]
            hi[v * d + a] = ih[c]
            p += 1
        if status == YES:
            coords = []
            for x in range(total):
                coords.append(lo[x])
                coords.append(hi[x])
            return YES, coords, nodes
        return status, [], nodes
    finally:
        PyMem_Free(il)
        PyMem_Free(ih)
        PyMem_Free(ordr)
        PyMem_Free(A)
        PyMem_Free(lo)
        PyMem_Free(hi)
        PyMem_Free(cand)
