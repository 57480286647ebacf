"""Pure-Python search kernels.

Reference twin of ``_kernels.pyx``: both modules expose the same functions
with the same arguments, visit the same search tree in the same order and
report identical node counts.  Graphs arrive in CSR form
(``indptr``/``indices``) so neither kernel touches Graph objects.
"""

YES = 1
NO = 0
UNKNOWN = -1

BACKEND = "python"


def greedy_color(n, indptr, indices, order):
    colors = [-1] * n
    for v in order:
        taken = {colors[indices[i]] for i in range(indptr[v], indptr[v + 1])}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return colors


def kcolor(n, indptr, indices, k, budget):
    """Saturation-first backtracking k-colouring.

    Returns ``(status, colors, nodes)``; ``colors`` is only meaningful for YES.
    One node is one colour assignment.  Colours are introduced in increasing
    order, which breaks the colour-permutation symmetry.
    """
    if n == 0:
        return YES, [], 0
    if k <= 0:
        return NO, [], 0
    degree = [indptr[v + 1] - indptr[v] for v in range(n)]
    color = [-1] * n
    forb = [[0] * k for _ in range(n)]
    sat = [0] * n
    used = [0] * k
    ncolors = 0
    nodes = 0

    def select():
        best = -1
        bs = bd = -1
        for u in range(n):
            if color[u] < 0:
                s = sat[u]
                if s > bs or (s == bs and degree[u] > bd):
                    best, bs, bd = u, s, degree[u]
        return best

    def assign(v, c):
        color[v] = c
        for i in range(indptr[v], indptr[v + 1]):
            w = indices[i]
            row = forb[w]
            if row[c] == 0:
                sat[w] += 1
            row[c] += 1

    def unassign(v, c):
        color[v] = -1
        for i in range(indptr[v], indptr[v + 1]):
            w = indices[i]
            row = forb[w]
            row[c] -= 1
            if row[c] == 0:
                sat[w] -= 1

    stack_v = [select()]
    stack_c = [-1]
    while stack_v:
        v = stack_v[-1]
        c = stack_c[-1]
        if c >= 0:
            unassign(v, c)
            used[c] -= 1
            if used[c] == 0:
                ncolors -= 1
        top = min(k - 1, ncolors)
        nc = c + 1
        row = forb[v]
        while nc <= top and row[nc]:
            nc += 1
        if nc > top:
            stack_v.pop()
            stack_c.pop()
            continue
        if nodes >= budget:
            return UNKNOWN, [], nodes
        nodes += 1
        assign(v, nc)
        if used[nc] == 0:
            ncolors += 1
        used[nc] += 1
        stack_c[-1] = nc
        if len(stack_v) == n:
            return YES, list(color), nodes
        stack_v.append(select())
        stack_c.append(-1)
    return NO, [], nodes


def cbu_place(n, d, order, adj, gmax, budget):
    """Place boxes on the integer grid ``0..gmax`` so that the contact rules hold.

    ``adj`` is a flat row-major n*n 0/1 sequence.  Axis 0 is filled for every
    box (in ``order``) before axis 1 is started, and so on.  Axis 0 intervals
    of adjacent boxes must meet in a single point, adjacent boxes must meet on
    every other axis and non-adjacent boxes must be disjoint on some axis.
    The first box in ``order`` is restricted to the lower half of each axis
    (reflection symmetry).

    Returns ``(status, coords, nodes)`` with ``coords[(v*d + a)*2 + {0,1}]``.
    """
    ivl = [(lo, hi) for lo in range(gmax + 1) for hi in range(lo + 1, gmax + 1)]
    ni = len(ivl)
    total = n * d
    lo = [0] * total
    hi = [0] * total
    cand = [-1] * total
    nodes = 0
    if n == 0:
        return YES, [], 0
    p = 0
    while p >= 0:
        if p == total:
            coords = []
            for i in range(total):
                coords.append(lo[i])
                coords.append(hi[i])
            return YES, coords, nodes
        a, t = divmod(p, n)
        v = order[t]
        c = cand[p] + 1
        while c < ni:
            l, h = ivl[c]
            if t == 0 and l + h > gmax:
                c += 1
                continue
            ok = True
            for s in range(t):
                u = order[s]
                ua = u * d + a
                ml = l if l > lo[ua] else lo[ua]
                mh = h if h < hi[ua] else hi[ua]
                if adj[u * n + v]:
                    if (a == 0 and ml != mh) or ml > mh:
                        ok = False
                        break
                elif a == d - 1 and ml <= mh:
                    sep = False
                    for b in range(a):
                        vb = v * d + b
                        ub = u * d + b
                        if max(lo[vb], lo[ub]) > min(hi[vb], hi[ub]):
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
            return UNKNOWN, [], nodes
        nodes += 1
        cand[p] = c
        lo[v * d + a], hi[v * d + a] = ivl[c]
        p += 1
    return NO, [], nodes
