# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: crossing-count table and the incremental factorization
loop.  This is a line-for-line twin of pure.py on the same position
encoding; keep the two in sync."""

from libc.stdlib cimport calloc, free, malloc

from brauer.errors import InternalError, NoViableMerge


cdef inline bint _cross(int a, int b, int c, int d) nogil:
    return ((a < c) & (c < b)) != ((a < d) & (d < b))


cdef void _counts_into(int n, int* mate, int* out) nogil:
    cdef int m = 2 * n
    cdef int p, q, b, d
    for p in range(m):
        out[p] = 0
    for p in range(m):
        b = mate[p]
        if b <= p:
            continue
        for q in range(p + 1, b):
            d = mate[q]
            if d > b:
                out[p] += 1
                out[q] += 1
    for p in range(m):
        if mate[p] > p:
            out[mate[p]] = out[p]


def crossing_counts(int n, pairing):
    """Per-position crossing counts: out[p] = crossings of the edge at p."""
    cdef int m = 2 * n
    if m == 0:
        return []
    cdef int* mate = <int*> malloc(m * sizeof(int))
    cdef int* cnt = <int*> malloc(m * sizeof(int))
    cdef int p
    if mate == NULL or cnt == NULL:
        free(mate); free(cnt)
        raise MemoryError()
    try:
        for p in range(m):
            mate[p] = pairing[p]
        _counts_into(n, mate, cnt)
        return [cnt[p] for p in range(m)]
    finally:
        free(mate)
        free(cnt)


cdef inline int _col(int n, int p) nogil:
    return p + 1 if p < n else 2 * n - p


cdef inline int _iabs(int v) nogil:
    return -v if v < 0 else v


cdef bint _merge_targets(int n, int hi, int hj, int p, int q,
                         int* a1, int* b1, int* a2, int* b2) nogil:
    cdef int i = hi + 1
    cdef int x, y
    if q < n:  # upper hook (p+1, q+1)
        if p < hi and q > hj:
            a1[0] = p; b1[0] = hi; a2[0] = hj; b2[0] = q
            return True
    elif p >= n:  # lower hook with indices (2n-q, 2n-p)
        if q >= 2 * n - i and p <= 2 * n - i - 1:
            a1[0] = hi; b1[0] = q; a2[0] = hj; b2[0] = p
            return True
    else:  # transversal with top index p+1, bottom index 2n-q
        x = p + 1
        y = 2 * n - q
        if x < y:
            if x < i and y >= i + 1:
                a1[0] = p; b1[0] = hi; a2[0] = hj; b2[0] = q
                return True
        elif x > y:
            if x > i + 1 and y <= i:
                a1[0] = hi; b1[0] = q; a2[0] = hj; b2[0] = p
                return True
    return False


def factorize_core(int n, pairing, indices, bint min_t=False, bint debug=False):
    """Run the incremental factorization loop; returns signed factor codes
    (+i for T_i, -i for U_i)."""
    cdef int m = 2 * n
    if m == 0:
        return []
    cdef int* mate = <int*> malloc(m * sizeof(int))
    cdef int* tc = <int*> malloc(m * sizeof(int))
    cdef int* sz = <int*> malloc(m * sizeof(int))
    cdef int* ranked = <int*> malloc(m * sizeof(int))
    cdef int* fresh = <int*> malloc(m * sizeof(int))
    if mate == NULL or tc == NULL or sz == NULL or ranked == NULL or fresh == NULL:
        free(mate); free(tc); free(sz); free(ranked); free(fresh)
        raise MemoryError()

    cdef int p, q, r, s, i, hi, hj, a, b, ca, cb
    cdef int nrank, ri, step
    cdef int a1, b1, a2, b2, s1, s2, c1, c2, t_new, szr, delta
    cdef long l2, l2p, tot, best_tot
    cdef int ch_p, ch_q, ch_a1, ch_b1, ch_a2, ch_b2
    cdef bint have_choice, viable
    out = []
    try:
        for p in range(m):
            mate[p] = pairing[p]
        _counts_into(n, mate, tc)
        for p in range(m):
            sz[p] = _iabs(_col(n, p) - _col(n, mate[p]))

        for step in range(len(indices)):
            i = indices[step]
            hi = i - 1
            hj = i
            if mate[hi] == hj:
                l2 = 0
                for p in range(m):
                    if mate[p] > p:
                        l2 += tc[p] if tc[p] > sz[p] else sz[p]

                # Candidate edges in canonical order: top-anchored edges by
                # left index, then lower hooks by smaller index.
                nrank = 0
                for p in range(n):
                    if mate[p] > p:
                        ranked[nrank] = p
                        nrank += 1
                for p in range(1, n + 1):
                    q = 2 * n - p
                    if mate[q] >= n and mate[q] < q:
                        ranked[nrank] = mate[q]
                        nrank += 1

                have_choice = False
                best_tot = -1
                ch_p = ch_q = ch_a1 = ch_b1 = ch_a2 = ch_b2 = 0
                for ri in range(nrank):
                    p = ranked[ri]
                    q = mate[p]
                    if p == hi or tc[p] >= sz[p]:
                        continue
                    if not _merge_targets(n, hi, hj, p, q, &a1, &b1, &a2, &b2):
                        continue
                    s1 = _iabs(_col(n, a1) - _col(n, b1))
                    s2 = _iabs(_col(n, a2) - _col(n, b2))
                    c1 = 0; c2 = 0
                    l2p = 0; tot = 0
                    for r in range(m):
                        s = mate[r]
                        if s < r or r == hi or r == p:
                            continue
                        t_new = tc[r]
                        if _cross(r, s, p, q):
                            t_new -= 1
                        if _cross(r, s, a1, b1):
                            t_new += 1
                            c1 += 1
                        if _cross(r, s, a2, b2):
                            t_new += 1
                            c2 += 1
                        szr = sz[r]
                        l2p += t_new if t_new > szr else szr
                        tot += t_new
                    l2p += (c1 if c1 > s1 else s1) + (c2 if c2 > s2 else s2)
                    if l2p != l2 - 2:
                        continue
                    tot += c1 + c2
                    if not min_t:
                        have_choice = True
                        ch_p = p; ch_q = q
                        ch_a1 = a1; ch_b1 = b1; ch_a2 = a2; ch_b2 = b2
                        break
                    if (not have_choice) or tot < best_tot:
                        have_choice = True
                        best_tot = tot
                        ch_p = p; ch_q = q
                        ch_a1 = a1; ch_b1 = b1; ch_a2 = a2; ch_b2 = b2
                if not have_choice:
                    snapshot = tuple(mate[p] for p in range(m))
                    counts = tuple(tc[p] for p in range(m))
                    raise NoViableMerge(
                        f"no merge candidate reduces the length at index {i} "
                        f"(step {step}, pairing {snapshot}, counts {counts})"
                    )

                p = ch_p; q = ch_q
                a1 = ch_a1; b1 = ch_b1; a2 = ch_a2; b2 = ch_b2
                c1 = 0; c2 = 0
                for r in range(m):
                    s = mate[r]
                    if s < r or r == hi or r == p:
                        continue
                    delta = 0
                    if _cross(r, s, p, q):
                        delta -= 1
                    if _cross(r, s, a1, b1):
                        delta += 1
                        c1 += 1
                    if _cross(r, s, a2, b2):
                        delta += 1
                        c2 += 1
                    tc[r] += delta
                    tc[s] += delta
                mate[a1] = b1; mate[b1] = a1
                mate[a2] = b2; mate[b2] = a2
                tc[a1] = c1; tc[b1] = c1
                tc[a2] = c2; tc[b2] = c2
                s1 = _iabs(_col(n, a1) - _col(n, b1))
                s2 = _iabs(_col(n, a2) - _col(n, b2))
                sz[a1] = s1; sz[b1] = s1
                sz[a2] = s2; sz[b2] = s2
                out.append(-i)
            else:
                a = mate[hi]
                b = mate[hj]
                ca = tc[hi]
                cb = tc[hj]
                mate[hj] = a; mate[a] = hj
                mate[hi] = b; mate[b] = hi
                tc[hj] = ca - 1; tc[a] = ca - 1
                tc[hi] = cb - 1; tc[b] = cb - 1
                s1 = _iabs(_col(n, hj) - _col(n, a))
                sz[hj] = s1; sz[a] = s1
                s2 = _iabs(_col(n, hi) - _col(n, b))
                sz[hi] = s2; sz[b] = s2
                out.append(i)

            if debug:
                _counts_into(n, mate, fresh)
                for p in range(m):
                    if fresh[p] != tc[p]:
                        raise InternalError(
                            f"crossing table drifted after step {step} (index {i}): "
                            f"position {p} has {tc[p]}, recomputed {fresh[p]}"
                        )
                for p in range(m):
                    if sz[p] != _iabs(_col(n, p) - _col(n, mate[p])):
                        raise InternalError(f"size table drifted at position {p}")

        if debug:
            for p in range(m):
                if mate[p] != m - 1 - p:
                    raise InternalError("factor indices exhausted before reaching the identity")
        return out
    finally:
        free(mate)
        free(tc)
        free(sz)
        free(ranked)
        free(fresh)
