# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled homology kernel.

Same algorithm as ``_pykernels.multidegree_betti`` with int64 arithmetic.
Every multiply/subtract is overflow-checked; on overflow (or when the
complex has too many vertices for the dense face index) the kernel returns
None and the caller falls back to arbitrary-precision Python.
"""

from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport uint64_t, int32_t, uint8_t, INT64_MIN

cdef extern from *:
    """
    static inline int ml_mul_ovf(long long a, long long b, long long *r) { return __builtin_mul_overflow(a, b, r); }
    static inline int ml_sub_ovf(long long a, long long b, long long *r) { return __builtin_sub_overflow(a, b, r); }
    static inline int ml_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int ml_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int ml_mul_ovf(long long a, long long b, long long *r) nogil
    int ml_sub_ovf(long long a, long long b, long long *r) nogil
    int ml_popcount(unsigned long long x) nogil
    int ml_ctz(unsigned long long x) nogil

cdef enum:
    MAX_VERTICES = 22

ctypedef struct Row:
    int n
    int32_t *cols
    long long *vals


cdef inline long long _gcd(long long a, long long b) noexcept nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef inline void _free_row(Row *r) noexcept nogil:
    if r != NULL:
        free(r.cols)
        free(r.vals)
        free(r)


cdef Row *_new_row(int cap) noexcept nogil:
    cdef Row *r = <Row *> malloc(sizeof(Row))
    if r == NULL:
        return NULL
    r.n = 0
    r.cols = <int32_t *> malloc((cap if cap > 0 else 1) * sizeof(int32_t))
    r.vals = <long long *> malloc((cap if cap > 0 else 1) * sizeof(long long))
    if r.cols == NULL or r.vals == NULL:
        _free_row(r)
        return NULL
    return r


cdef int _combine(Row *r, Row *s, Row *out) noexcept nogil:
    """out = p*r - a*s where p, a are the leading entries of s and r.
    Returns 0 on success, -1 on overflow."""
    cdef long long a = r.vals[0]
    cdef long long p = s.vals[0]
    cdef long long x, y, v
    cdef int i = 0, j = 0, k = 0
    cdef int unit = (p == 1 or p == -1)
    cdef long long f = 0
    if unit:
        # r - (a*p)*s, since p*p == 1
        if ml_mul_ovf(a, p, &f):
            return -1
    while i < r.n or j < s.n:
        if j >= s.n or (i < r.n and r.cols[i] < s.cols[j]):
            if unit:
                v = r.vals[i]
            elif ml_mul_ovf(p, r.vals[i], &v):
                return -1
            out.cols[k] = r.cols[i]
            out.vals[k] = v
            k += 1
            i += 1
        elif i >= r.n or s.cols[j] < r.cols[i]:
            if ml_mul_ovf(f if unit else a, s.vals[j], &y):
                return -1
            if y == INT64_MIN:
                return -1
            out.cols[k] = s.cols[j]
            out.vals[k] = -y
            k += 1
            j += 1
        else:
            if unit:
                x = r.vals[i]
                if ml_mul_ovf(f, s.vals[j], &y):
                    return -1
            else:
                if ml_mul_ovf(p, r.vals[i], &x):
                    return -1
                if ml_mul_ovf(a, s.vals[j], &y):
                    return -1
            if ml_sub_ovf(x, y, &v):
                return -1
            if v != 0:
                out.cols[k] = r.cols[i]
                out.vals[k] = v
                k += 1
            i += 1
            j += 1
    out.n = k
    if k == 0:
        return 0
    cdef long long g = 0
    for i in range(k):
        if out.vals[i] == INT64_MIN:
            return -1
        g = _gcd(g, out.vals[i])
        if g == 1:
            break
    if g > 1:
        for i in range(k):
            out.vals[i] = out.vals[i] // g
    return 0


cdef int _rank(int nrows, Row **rows, int ncols) noexcept nogil:
    """Rank over Q of the given rows; consumes the rows. -1 on overflow."""
    cdef Row **piv = <Row **> calloc(ncols if ncols > 0 else 1, sizeof(Row *))
    cdef int rank = 0, status = 0, t, c
    cdef Row *r
    cdef Row *out
    if piv == NULL:
        return -1
    for t in range(nrows):
        r = rows[t]
        rows[t] = NULL
        if status != 0:
            _free_row(r)
            continue
        while True:
            if r.n == 0:
                _free_row(r)
                break
            c = r.cols[0]
            if piv[c] == NULL:
                piv[c] = r
                rank += 1
                break
            out = _new_row(r.n + piv[c].n)
            if out == NULL or _combine(r, piv[c], out) != 0:
                _free_row(out)
                _free_row(r)
                status = -1
                break
            _free_row(r)
            r = out
    for c in range(ncols):
        _free_row(piv[c])
    free(piv)
    return -1 if status != 0 else rank


def multidegree_betti(b, gens):
    """``beta_{i,b}`` for ``i = 0, 1, ...``, or None if the int64 path cannot
    handle the instance."""
    cdef int nv = len(b)
    cdef int t
    if nv > 64:
        return None
    cdef uint64_t mask, union_ = 0, common
    cdef list facets = []
    for g in gens:
        mask = 0
        for v in range(nv):
            if g[v] < b[v]:
                mask |= (<uint64_t> 1) << v
        facets.append(mask)
    # keep maximal facets only
    facets = sorted(set(facets), key=lambda f: -ml_popcount(f))
    cdef list maxi = []
    cdef uint64_t F, G
    for F in facets:
        keep = True
        for G in maxi:
            if F & G == F:
                keep = False
                break
        if keep:
            maxi.append(F)
    if len(maxi) == 1 and maxi[0] == 0:
        return [1]
    common = ~(<uint64_t> 0)
    for F in maxi:
        common &= F
        union_ |= F
    if common:
        return []

    # compress the vertex set to the union of the facets
    cdef int pos[64]
    cdef int k = 0, v2
    for v2 in range(64):
        if (union_ >> v2) & 1:
            pos[v2] = k
            k += 1
    if k > MAX_VERTICES:
        return None
    cdef int nf = len(maxi)
    cdef uint64_t *cf = <uint64_t *> malloc(nf * sizeof(uint64_t))
    cdef uint64_t x
    for t in range(nf):
        x = maxi[t]
        mask = 0
        while x:
            v2 = ml_ctz(x)
            mask |= (<uint64_t> 1) << pos[v2]
            x &= x - 1
        cf[t] = mask
    result = _homology(k, nf, cf)
    free(cf)
    return result


cdef object _homology(int k, int nf, uint64_t *cf):
    cdef uint64_t size = (<uint64_t> 1) << k
    cdef uint8_t *mark = <uint8_t *> calloc(size, sizeof(uint8_t))
    cdef int32_t *idx = <int32_t *> malloc(size * sizeof(int32_t))
    cdef int counts[MAX_VERTICES + 2]
    cdef int ranks[MAX_VERTICES + 3]
    cdef uint64_t F, sub, f, low, m2
    cdef int t, s, top = 0, pc, nrows, j, r, v2
    cdef Row **rows
    cdef Row *row
    if mark == NULL or idx == NULL:
        free(mark)
        free(idx)
        raise MemoryError()
    for t in range(MAX_VERTICES + 2):
        counts[t] = 0
    for t in range(MAX_VERTICES + 3):
        ranks[t] = 0
    for t in range(nf):
        F = cf[t]
        sub = F
        while True:
            mark[sub] = 1
            if sub == 0:
                break
            sub = (sub - 1) & F
    for f in range(size):
        if mark[f]:
            pc = ml_popcount(f)
            idx[f] = counts[pc]
            counts[pc] += 1
            if pc > top:
                top = pc
    status = 0
    for s in range(1, top + 1):
        nrows = counts[s]
        rows = <Row **> calloc(nrows if nrows > 0 else 1, sizeof(Row *))
        j = 0
        for f in range(size):
            if mark[f] and ml_popcount(f) == s:
                row = _new_row(s)
                # removing higher bits gives smaller masks, so walk bits from
                # the top to emit columns in increasing order
                m2 = f
                pc = s - 1
                while m2:
                    v2 = 63 - __builtin_clz_wrap(m2)
                    low = (<uint64_t> 1) << v2
                    row.cols[s - 1 - pc] = idx[f ^ low]
                    row.vals[s - 1 - pc] = 1 if (pc % 2 == 0) else -1
                    pc -= 1
                    m2 ^= low
                row.n = s
                rows[j] = row
                j += 1
        r = _rank(nrows, rows, counts[s - 1])
        free(rows)
        if r < 0:
            status = -1
            break
        ranks[s] = r
    free(mark)
    free(idx)
    if status != 0:
        return None
    return [counts[s] - ranks[s] - ranks[s + 1] for s in range(top + 1)]


cdef extern from *:
    """
    static inline int __builtin_clz_wrap(unsigned long long x) { return __builtin_clzll(x); }
    """
    int __builtin_clz_wrap(unsigned long long x) nogil
