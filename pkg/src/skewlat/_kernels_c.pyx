# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; keep in lockstep with `_kernels_py`."""

from itertools import permutations

DEF MAXN = 8
DEF MAXNN = 64


cdef inline bint partial_assoc_ok(int *t, int n) noexcept:
    cdef int x, y, z, a, b, lhs, rhs
    for x in range(n):
        for y in range(n):
            a = t[x * n + y]
            if a < 0:
                continue
            for z in range(n):
                b = t[y * n + z]
                if b < 0:
                    continue
                lhs = t[a * n + z]
                rhs = t[x * n + b]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
    return True


cdef inline bint is_regular(int *t, int n) noexcept:
    cdef int x, y, z, xy, xyx
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            xyx = t[xy * n + x]
            for z in range(n):
                if t[t[xyx * n + z] * n + x] != t[t[xy * n + z] * n + x]:
                    return False
    return True


def assoc_witness(flat, int n):
    cdef int t[MAXNN]
    cdef int i, x, y, z, a
    for i in range(n * n):
        t[i] = flat[i]
    for x in range(n):
        for y in range(n):
            a = t[x * n + y]
            for z in range(n):
                if t[a * n + z] != t[x * n + t[y * n + z]]:
                    return (x, y, z)
    return None


cdef void fill_meet(int *t, int (*cells)[2], int ncells, int k, int n, list out):
    cdef int i, j, pos, v
    if k == ncells:
        if is_regular(t, n):
            out.append(tuple([t[i] for i in range(n * n)]))
        return
    i = cells[k][0]
    j = cells[k][1]
    pos = i * n + j
    for v in range(n):
        t[pos] = v
        if partial_assoc_ok(t, n):
            fill_meet(t, cells, ncells, k + 1, n, out)
    t[pos] = -1


def meet_tables(int n, prefix=None):
    cdef int t[MAXNN]
    cdef int cells[MAXNN][2]
    cdef int i, j, k, ncells, start
    if n > MAXN:
        raise ValueError("n exceeds compiled kernel cap")
    ncells = 0
    for i in range(n):
        for j in range(n):
            if i != j:
                cells[ncells][0] = i
                cells[ncells][1] = j
                ncells += 1
    for i in range(n * n):
        t[i] = -1
    for i in range(n):
        t[i * n + i] = i
    start = 0
    if prefix is not None:
        for k in range(len(prefix)):
            i = cells[k][0]
            j = cells[k][1]
            t[i * n + j] = prefix[k]
        if not partial_assoc_ok(t, n):
            return []
        start = len(prefix)
    out = []
    fill_meet(t, cells, ncells, start, n, out)
    return out


cdef void fill_join(int *jt, int *free_pos, int nfree,
                    int *cand, int *ncand, int k, int n, list out):
    cdef int pos, c, v, i
    if k == nfree:
        out.append(tuple([jt[i] for i in range(n * n)]))
        return
    pos = free_pos[k]
    for c in range(ncand[pos]):
        v = cand[pos * MAXN + c]
        jt[pos] = v
        if partial_assoc_ok(jt, n):
            fill_join(jt, free_pos, nfree, cand, ncand, k + 1, n, out)
    jt[pos] = -1


def join_completions(meet, int n):
    cdef int mt[MAXNN]
    cdef int jt[MAXNN]
    cdef int cand[MAXNN * MAXN]
    cdef int ncand[MAXNN]
    cdef int free_pos[MAXNN]
    cdef int i, a, b, pos, val, x, y, z, nfree
    if n > MAXN:
        raise ValueError("n exceeds compiled kernel cap")
    for i in range(n * n):
        mt[i] = meet[i]
        jt[i] = -1
    for i in range(n):
        jt[i * n + i] = i
    for a in range(n):
        for b in range(n):
            pos = a * n + mt[a * n + b]
            if jt[pos] >= 0 and jt[pos] != a:
                return []
            jt[pos] = a
            pos = mt[b * n + a] * n + a
            if jt[pos] >= 0 and jt[pos] != a:
                return []
            jt[pos] = a
    if not partial_assoc_ok(jt, n):
        return []
    nfree = 0
    for x in range(n):
        for y in range(n):
            pos = x * n + y
            if jt[pos] >= 0:
                if mt[x * n + jt[pos]] != x or mt[jt[pos] * n + y] != y:
                    return []
                continue
            ncand[pos] = 0
            for z in range(n):
                if mt[x * n + z] == x and mt[z * n + y] == y:
                    cand[pos * MAXN + ncand[pos]] = z
                    ncand[pos] += 1
            if ncand[pos] == 0:
                return []
            free_pos[nfree] = pos
            nfree += 1
    out = []
    fill_join(jt, free_pos, nfree, cand, ncand, 0, n, out)
    return out


def relabel(flat, int n, perm):
    cdef int t[MAXNN]
    cdef int p[MAXN]
    cdef int out[MAXNN]
    cdef int i, j
    for i in range(n * n):
        t[i] = flat[i]
    for i in range(n):
        p[i] = perm[i]
    for i in range(n):
        for j in range(n):
            out[p[i] * n + p[j]] = p[t[i * n + j]]
    return tuple([out[i] for i in range(n * n)])


def canonical_pair(meet, join, int n):
    cdef int mt[MAXNN]
    cdef int jt[MAXNN]
    cdef int best[2 * MAXNN]
    cdef int cur[2 * MAXNN]
    cdef int p[MAXN]
    cdef int i, j, nn, cmp_res
    cdef bint have_best = False
    nn = n * n
    for i in range(nn):
        mt[i] = meet[i]
        jt[i] = join[i]
    best_perm = None
    for perm in permutations(range(n)):
        for i in range(n):
            p[i] = perm[i]
        for i in range(n):
            for j in range(n):
                cur[p[i] * n + p[j]] = p[mt[i * n + j]]
                cur[nn + p[i] * n + p[j]] = p[jt[i * n + j]]
        if not have_best:
            cmp_res = -1
        else:
            cmp_res = 0
            for i in range(2 * nn):
                if cur[i] != best[i]:
                    cmp_res = -1 if cur[i] < best[i] else 1
                    break
        if cmp_res < 0:
            for i in range(2 * nn):
                best[i] = cur[i]
            best_perm = perm
            have_best = True
    return (
        tuple([best[i] for i in range(nn)]),
        tuple([best[nn + i] for i in range(nn)]),
        best_perm,
    )
