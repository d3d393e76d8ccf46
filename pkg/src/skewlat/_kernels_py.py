"""Pure-Python kernels for the hot loops.

Same API as the compiled extension `_kernels_c`; `skewlat.kernels` picks
whichever is available at import time.  Tables are flat tuples of length
n*n, row-major.

The search strategy mirrors the one in the compiled twin exactly: fill the
meet table cell-by-cell with incremental associativity checking, then
complete the join table from the absorption pins, filtering candidates by
the two meet-absorption laws.
"""

from itertools import permutations


def assoc_witness(flat, n):
    """First (x, y, z) violating associativity, or None."""
    for x in range(n):
        row_x = x * n
        for y in range(n):
            a = flat[row_x + y]
            for z in range(n):
                if flat[a * n + z] != flat[row_x + flat[y * n + z]]:
                    return (x, y, z)
    return None


def _partial_assoc_ok(t, n):
    # t uses -1 for unknown; skip any triple touching an unknown entry.
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


def _is_regular(t, n):
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            xyx = t[xy * n + x]
            for z in range(n):
                if t[t[xyx * n + z] * n + x] != t[t[xy * n + z] * n + x]:
                    return False
    return True


def meet_tables(n, prefix=None):
    """All idempotent, associative, regular n-tables, as flat tuples.

    `prefix`, when given, fixes the off-diagonal cells of row 0 (a tuple of
    n-1 values); used to split the search across workers.
    """
    cells = [(i, j) for i in range(n) for j in range(n) if i != j]
    t = [-1] * (n * n)
    for i in range(n):
        t[i * n + i] = i
    start = 0
    if prefix is not None:
        for k, v in enumerate(prefix):
            i, j = cells[k]
            t[i * n + j] = v
        if not _partial_assoc_ok(t, n):
            return []
        start = len(prefix)
    out = []

    def fill(k):
        if k == len(cells):
            if _is_regular(t, n):
                out.append(tuple(t))
            return
        i, j = cells[k]
        pos = i * n + j
        for v in range(n):
            t[pos] = v
            if _partial_assoc_ok(t, n):
                fill(k + 1)
        t[pos] = -1

    fill(start)
    return out


def join_completions(meet, n):
    """All join tables turning the given meet band into a skew lattice."""
    jt = [-1] * (n * n)
    for i in range(n):
        jt[i * n + i] = i
    # Absorption pins every cell of the form (a, a^b) and (b^a, a).
    for a in range(n):
        for b in range(n):
            for pos, val in (
                ((a * n + meet[a * n + b]), a),
                ((meet[b * n + a] * n + a), a),
            ):
                if jt[pos] >= 0 and jt[pos] != val:
                    return []
                jt[pos] = val
    if not _partial_assoc_ok(jt, n):
        return []
    # x^(xvy)=x and (xvy)^y=y restrict the remaining cells.
    cand = {}
    for x in range(n):
        for y in range(n):
            pos = x * n + y
            if jt[pos] >= 0:
                if meet[x * n + jt[pos]] != x or meet[jt[pos] * n + y] != y:
                    return []
                continue
            cs = [
                z
                for z in range(n)
                if meet[x * n + z] == x and meet[z * n + y] == y
            ]
            if not cs:
                return []
            cand[pos] = cs
    free = sorted(cand)
    out = []

    def fill(k):
        if k == len(free):
            out.append(tuple(jt))
            return
        pos = free[k]
        for v in cand[pos]:
            jt[pos] = v
            if _partial_assoc_ok(jt, n):
                fill(k + 1)
        jt[pos] = -1

    fill(0)
    return out


def relabel(flat, n, perm):
    """Apply a relabeling: out[p(i)][p(j)] = p(flat[i][j])."""
    out = [0] * (n * n)
    for i in range(n):
        for j in range(n):
            out[perm[i] * n + perm[j]] = perm[flat[i * n + j]]
    return tuple(out)


def canonical_pair(meet, join, n):
    """Minimum of (meet, join) over all relabelings.

    Returns (canon_meet, canon_join, perm) where perm is the first
    lexicographic permutation achieving the minimum.
    """
    best = None
    best_perm = None
    for perm in permutations(range(n)):
        key = relabel(meet, n, perm) + relabel(join, n, perm)
        if best is None or key < best:
            best = key
            best_perm = perm
    return best[: n * n], best[n * n:], best_perm
