# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of quiddity._kernel: same rings, same search, same output.

Element pairs and the running eta-product live in C int64 arrays.  Entry
norms stay below (n+1)^2 <= 81 and continuants over at most m-1 positions
stay far below 2^62, so no overflow checks are needed at desk scale.
"""

from libc.stdint cimport int64_t

KERNEL_KIND = "compiled"

MAX_DEPTH = 16

DEF MAXM = 20


cdef inline void cmul(int ring_id, int64_t a1, int64_t b1,
                      int64_t a2, int64_t b2, int64_t *ra, int64_t *rb):
    if ring_id == 0:
        ra[0] = a1 * a2
        rb[0] = 0
    elif ring_id == 1:
        ra[0] = a1 * a2 - b1 * b2
        rb[0] = a1 * b2 + b1 * a2
    else:
        ra[0] = a1 * a2 - b1 * b2
        rb[0] = a1 * b2 + b1 * a2 + b1 * b2


cdef inline int64_t cnorm(int ring_id, int64_t a, int64_t b):
    if ring_id == 0:
        return a * a
    if ring_id == 1:
        return a * a + b * b
    return a * a + a * b + b * b


cdef inline bint cdiv(int ring_id, int64_t a1, int64_t b1,
                      int64_t a2, int64_t b2, int64_t *ra, int64_t *rb):
    cdef int64_t n, ca, cb, na, nb
    if ring_id == 0:
        if a2 == 0 or a1 % a2 != 0:
            return 0
        ra[0] = a1 // a2
        rb[0] = 0
        return 1
    n = cnorm(ring_id, a2, b2)
    if n == 0:
        return 0
    if ring_id == 1:
        ca = a2
        cb = -b2
    else:
        ca = a2 + b2
        cb = -b2
    cmul(ring_id, a1, b1, ca, cb, &na, &nb)
    if na % n != 0 or nb % n != 0:
        return 0
    ra[0] = na // n
    rb[0] = nb // n
    return 1


cdef bint windows_nonzero(int ring_id, int64_t *ea, int64_t *eb, int m):
    cdef int start, step, idx
    cdef int64_t ka, kb, pa, pb, ta, tb, ca, cb
    for start in range(m):
        ka = ea[start]
        kb = eb[start]
        pa = 1
        pb = 0
        if ka == 0 and kb == 0:
            return 0
        for step in range(1, m - 3):
            idx = start + step
            if idx >= m:
                idx -= m
            ca = ea[idx]
            cb = eb[idx]
            cmul(ring_id, ka, kb, ca, cb, &ta, &tb)
            ta = ta - pa
            tb = tb - pb
            pa = ka
            pb = kb
            ka = ta
            kb = tb
            if ka == 0 and kb == 0:
                return 0
    return 1


cdef class _Search:
    cdef int ring_id, m, free, ncand
    cdef int64_t limit
    cdef int64_t[128] ca_
    cdef int64_t[128] cb_
    cdef int64_t[MAXM] ea
    cdef int64_t[MAXM] eb
    cdef list results

    def __init__(self, int ring_id, int n, candidates, int64_t limit):
        cdef int i
        if len(candidates) > 128:
            raise ValueError("too many candidates for the compiled kernel")
        self.ring_id = ring_id
        self.m = n + 3
        self.free = n
        self.limit = limit
        self.ncand = len(candidates)
        for i in range(self.ncand):
            self.ca_[i] = candidates[i][0]
            self.cb_[i] = candidates[i][1]
        self.results = []

    cdef void solve_tail(self, int64_t p11a, int64_t p11b, int64_t p12a,
                         int64_t p12b, int64_t p21a, int64_t p21b):
        cdef int64_t ua, ub, aa, ab, ba, bb, ta, tb
        cdef int rid = self.ring_id
        cdef int i
        ua = p11a
        ub = p11b
        if cnorm(rid, ua, ub) > self.limit:
            return
        if not cdiv(rid, 1 - p12a, -p12b, ua, ub, &aa, &ab):
            return
        if (aa == 0 and ab == 0) or cnorm(rid, aa, ab) > self.limit:
            return
        if not cdiv(rid, 1 + p21a, p21b, ua, ub, &ba, &bb):
            return
        if (ba == 0 and bb == 0) or cnorm(rid, ba, bb) > self.limit:
            return
        cmul(rid, self.ea[self.free - 1], self.eb[self.free - 1], aa, ab, &ta, &tb)
        if ta == 1 and tb == 0:
            return
        cmul(rid, aa, ab, ua, ub, &ta, &tb)
        if ta == 1 and tb == 0:
            return
        cmul(rid, ua, ub, ba, bb, &ta, &tb)
        if ta == 1 and tb == 0:
            return
        cmul(rid, ba, bb, self.ea[0], self.eb[0], &ta, &tb)
        if ta == 1 and tb == 0:
            return
        self.ea[self.free] = aa
        self.eb[self.free] = ab
        self.ea[self.free + 1] = ua
        self.eb[self.free + 1] = ub
        self.ea[self.free + 2] = ba
        self.eb[self.free + 2] = bb
        if not windows_nonzero(rid, self.ea, self.eb, self.m):
            return
        self.results.append(tuple((self.ea[i], self.eb[i]) for i in range(self.m)))

    cdef void extend(self, int depth, int64_t p11a, int64_t p11b,
                     int64_t p12a, int64_t p12b, int64_t p21a, int64_t p21b,
                     int64_t p22a, int64_t p22b):
        cdef int i
        cdef int rid = self.ring_id
        cdef int64_t ca, cb, ta, tb, q11a, q11b, q21a, q21b, preva, prevb
        if depth == self.free:
            self.solve_tail(p11a, p11b, p12a, p12b, p21a, p21b)
            return
        preva = self.ea[depth - 1]
        prevb = self.eb[depth - 1]
        for i in range(self.ncand):
            ca = self.ca_[i]
            cb = self.cb_[i]
            cmul(rid, preva, prevb, ca, cb, &ta, &tb)
            if ta == 1 and tb == 0:
                continue
            cmul(rid, p11a, p11b, ca, cb, &ta, &tb)
            q11a = ta + p12a
            q11b = tb + p12b
            if q11a == 0 and q11b == 0:
                continue
            cmul(rid, p21a, p21b, ca, cb, &ta, &tb)
            q21a = ta + p22a
            q21b = tb + p22b
            self.ea[depth] = ca
            self.eb[depth] = cb
            self.extend(depth + 1, q11a, q11b, -p11a, -p11b,
                        q21a, q21b, -p21a, -p21b)


def search_from_prefix(int ring_id, int n, prefix, candidates, limit):
    """All cycles completing `prefix`, as tuples of element pairs.

    Same contract and output as the pure kernel's search_from_prefix.
    """
    cdef int m = n + 3
    cdef int free = m - 3
    cdef int depth = 0
    cdef int64_t p11a = 1, p11b = 0, p12a = 0, p12b = 0
    cdef int64_t p21a = 0, p21b = 0, p22a = 1, p22b = 0
    cdef int64_t ca, cb, ta, tb, q11a, q11b, q21a, q21b
    cdef int64_t lim = limit
    if not (1 <= len(prefix) <= free <= MAX_DEPTH):
        raise ValueError("bad prefix length or height")
    search = _Search(ring_id, n, candidates, lim)
    for pair in prefix:
        ca = pair[0]
        cb = pair[1]
        if (ca == 0 and cb == 0) or cnorm(ring_id, ca, cb) > lim:
            return []
        if depth > 0:
            cmul(ring_id, search.ea[depth - 1], search.eb[depth - 1],
                 ca, cb, &ta, &tb)
            if ta == 1 and tb == 0:
                return []
        cmul(ring_id, p11a, p11b, ca, cb, &ta, &tb)
        q11a = ta + p12a
        q11b = tb + p12b
        if q11a == 0 and q11b == 0:
            return []
        cmul(ring_id, p21a, p21b, ca, cb, &ta, &tb)
        q21a = ta + p22a
        q21b = tb + p22b
        p12a = -p11a
        p12b = -p11b
        p22a = -p21a
        p22b = -p21b
        p11a = q11a
        p11b = q11b
        p21a = q21a
        p21b = q21b
        search.ea[depth] = ca
        search.eb[depth] = cb
        depth += 1
    search.extend(depth, p11a, p11b, p12a, p12b, p21a, p21b, p22a, p22b)
    return search.results
