# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled closure kernel.

Mirrors mcgtorsion._kernels_py exactly: same BFS visit order, same key
encodings, same cap semantics.  The p = 2 path packs a matrix into one
64-bit word (bit n*i + j) and walks an open-addressing table of raw
words; a zero word is the empty slot, which is safe because the zero
matrix is singular and can never appear in a group closure.
"""

from libc.stdlib cimport calloc, free, malloc, realloc
from libc.string cimport memcpy

ctypedef unsigned long long u64


cdef inline u64 _mix(u64 x) nogil:
    # splitmix64 finalizer
    x += <u64>0x9E3779B97F4A7C15
    x = (x ^ (x >> 30)) * <u64>0xBF58476D1CE4E5B9
    x = (x ^ (x >> 27)) * <u64>0x94D049BB133111EB
    return x ^ (x >> 31)


cdef struct U64Set:
    u64 *slots
    u64 mask
    u64 count


cdef int _set_init(U64Set *s, u64 capacity) except -1:
    cdef u64 size = 1024
    while size < capacity * 2:
        size <<= 1
    s.slots = <u64 *>calloc(size, sizeof(u64))
    if s.slots == NULL:
        raise MemoryError()
    s.mask = size - 1
    s.count = 0
    return 0


cdef int _set_grow(U64Set *s) except -1:
    cdef u64 old_size = s.mask + 1
    cdef u64 *old = s.slots
    cdef u64 i, k, h
    s.slots = <u64 *>calloc(old_size * 2, sizeof(u64))
    if s.slots == NULL:
        s.slots = old
        raise MemoryError()
    s.mask = old_size * 2 - 1
    for i in range(old_size):
        k = old[i]
        if k != 0:
            h = _mix(k) & s.mask
            while s.slots[h] != 0:
                h = (h + 1) & s.mask
            s.slots[h] = k
    free(old)
    return 0


cdef int _set_add(U64Set *s, u64 key) except -1:
    """Insert; returns 1 if new, 0 if already present."""
    cdef u64 h = _mix(key) & s.mask
    while True:
        if s.slots[h] == key:
            return 0
        if s.slots[h] == 0:
            s.slots[h] = key
            s.count += 1
            if s.count * 2 > s.mask:
                _set_grow(s)
            return 1
        h = (h + 1) & s.mask


cdef bint _set_contains(U64Set *s, u64 key) nogil:
    cdef u64 h = _mix(key) & s.mask
    while True:
        if s.slots[h] == key:
            return True
        if s.slots[h] == 0:
            return False
        h = (h + 1) & s.mask


def closure_p2_small(list gen_keys, int n, long cap, bint with_parents):
    """BFS closure for p = 2, n*n <= 64.  Returns (keys, exceeded, parents)."""
    cdef int m = len(gen_keys)
    cdef int i, j, gi
    cdef u64 key, new_key, row
    cdef u64 row_mask = (<u64>1 << n) - 1
    if n * n > 64 or m == 0:
        raise ValueError("closure_p2_small needs generators with n*n <= 64")

    # per-generator row tables: tab[gi*(1<<n) + r] = r * gen over F2
    cdef int tab_size = 1 << n
    cdef u64 *grows = <u64 *>malloc(m * n * sizeof(u64))
    cdef u64 *tab = <u64 *>malloc(<size_t>m * tab_size * sizeof(u64))
    if grows == NULL or tab == NULL:
        free(grows); free(tab)
        raise MemoryError()
    cdef long r, low
    for gi in range(m):
        key = <u64>gen_keys[gi]
        for i in range(n):
            grows[gi * n + i] = (key >> (n * i)) & row_mask
        tab[gi * tab_size] = 0
        for r in range(1, tab_size):
            low = r & (-r)
            j = 0
            while (low >> j) > 1:
                j += 1
            tab[gi * tab_size + r] = tab[gi * tab_size + (r ^ low)] ^ grows[gi * n + j]

    cdef U64Set seen
    _set_init(&seen, 4096)
    cdef u64 frontier_cap = 4096
    cdef u64 *frontier = <u64 *>malloc(frontier_cap * sizeof(u64))
    if frontier == NULL:
        free(grows); free(tab); free(seen.slots)
        raise MemoryError()

    cdef u64 ident = 0
    for i in range(n):
        ident |= (<u64>1 << (n * i + i))
    _set_add(&seen, ident)
    frontier[0] = ident
    cdef u64 head = 0, tail = 1
    parents = {ident: None} if with_parents else None

    cdef bint exceeded = False
    cdef u64 cur
    while head < tail and not exceeded:
        cur = frontier[head]
        head += 1
        for gi in range(m):
            new_key = 0
            for i in range(n):
                row = (cur >> (n * i)) & row_mask
                new_key |= tab[gi * tab_size + row] << (n * i)
            if _set_contains(&seen, new_key):
                continue
            if <long>seen.count >= cap:
                exceeded = True
                break
            _set_add(&seen, new_key)
            if with_parents:
                parents[new_key] = (cur, gi)
            if tail == frontier_cap:
                frontier_cap *= 2
                frontier = <u64 *>realloc(frontier, frontier_cap * sizeof(u64))
                if frontier == NULL:
                    free(grows); free(tab); free(seen.slots)
                    raise MemoryError()
            frontier[tail] = new_key
            tail += 1

    keys = set()
    cdef u64 s
    for s in range(seen.mask + 1):
        if seen.slots[s] != 0:
            keys.add(seen.slots[s])
    free(grows); free(tab); free(frontier); free(seen.slots)
    return keys, exceeded, parents


def closure_bytes(list gens, int p, int n, long cap, bint with_parents):
    """BFS closure with bytes keys (row-major entries); any small prime."""
    cdef int m = len(gens)
    cdef int nn = n * n
    cdef int i, j, k, gi, acc
    if m == 0:
        raise ValueError("need at least one generator")
    cdef unsigned char *gbuf = <unsigned char *>malloc(m * nn)
    cdef unsigned char *cur = <unsigned char *>malloc(nn)
    cdef unsigned char *out = <unsigned char *>malloc(nn)
    if gbuf == NULL or cur == NULL or out == NULL:
        free(gbuf); free(cur); free(out)
        raise MemoryError()
    cdef bytes gb
    for gi in range(m):
        gb = gens[gi]
        if len(gb) != nn:
            free(gbuf); free(cur); free(out)
            raise ValueError("generator byte length mismatch")
        memcpy(gbuf + gi * nn, <unsigned char *>gb, nn)

    ibuf = bytearray(nn)
    for i in range(n):
        ibuf[i * n + i] = 1
    ident = bytes(ibuf)
    seen = {ident}
    parents = {ident: None} if with_parents else None
    frontier = [ident]
    cdef bint exceeded = False
    cdef bytes cb, nb
    cdef unsigned char *g
    while frontier and not exceeded:
        nxt = []
        for cb in frontier:
            memcpy(cur, <unsigned char *>cb, nn)
            for gi in range(m):
                g = gbuf + gi * nn
                for i in range(n):
                    for j in range(n):
                        acc = 0
                        for k in range(n):
                            acc += cur[i * n + k] * g[k * n + j]
                        out[i * n + j] = <unsigned char>(acc % p)
                nb = (<unsigned char *>out)[:nn]
                if nb in seen:
                    continue
                if len(seen) >= cap:
                    exceeded = True
                    break
                seen.add(nb)
                if with_parents:
                    parents[nb] = (cb, gi)
                nxt.append(nb)
            if exceeded:
                break
        frontier = nxt
    free(gbuf); free(cur); free(out)
    return seen, exceeded, parents
