# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as ``_kernels_py``.

Entries live in int64 buffers. Products of two residues stay below 2**62
because the modulus is capped at 2**31.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

ctypedef int64_t i64


cdef inline i64 _inv(i64 a, i64 p):
    cdef i64 result = 1, base = a % p, e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def echelon_pivots(rows, Py_ssize_t ncols, i64 p):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0 or ncols == 0:
        return []
    cdef i64* a = <i64*> malloc(nrows * ncols * sizeof(i64))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, c, top = 0, found
    cdef i64 f, inv, t
    pivots = []
    try:
        for i in range(nrows):
            r = rows[i]
            for j in range(ncols):
                a[i * ncols + j] = r[j]
        for c in range(ncols):
            if top == nrows:
                break
            found = -1
            for i in range(top, nrows):
                if a[i * ncols + c] != 0:
                    found = i
                    break
            if found < 0:
                continue
            if found != top:
                for j in range(c, ncols):
                    t = a[top * ncols + j]
                    a[top * ncols + j] = a[found * ncols + j]
                    a[found * ncols + j] = t
            inv = _inv(a[top * ncols + c], p)
            if inv != 1:
                for j in range(c, ncols):
                    a[top * ncols + j] = (a[top * ncols + j] * inv) % p
            for i in range(top + 1, nrows):
                f = a[i * ncols + c]
                if f == 0:
                    continue
                f = p - f
                for j in range(c, ncols):
                    a[i * ncols + j] = (a[i * ncols + j] + f * a[top * ncols + j]) % p
            pivots.append(c)
            top += 1
    finally:
        free(a)
    return pivots


cdef list _masks_of_size(int n, int k):
    cdef list out = []
    cdef long long m, low, ripple, limit
    if k == 0:
        return [0]
    m = (1LL << k) - 1
    limit = 1LL << n
    while m < limit:
        out.append(m)
        low = m & -m
        ripple = m + low
        m = (((ripple ^ m) >> 2) // low) | ripple
    return out


def compound_levels(phi, int dmax, i64 p):
    cdef int n = len(phi)
    cdef int k, pos, last, b, nr
    cdef Py_ssize_t ri, ci, cnt, pcnt, idx
    cdef long long rmask, cmask
    cdef i64 acc, term, av
    cdef i64* mat = <i64*> malloc(n * n * sizeof(i64))
    cdef i64* prev
    cdef i64* cur
    cdef Py_ssize_t* sub
    cdef int* rbits
    cdef Py_ssize_t* last_col
    cdef int* last_bit
    if mat == NULL:
        raise MemoryError()
    for ri in range(n):
        for ci in range(n):
            mat[ri * n + ci] = phi[ri][ci] % p
    levels = [[[1]]]
    prev = <i64*> malloc(sizeof(i64))
    prev[0] = 1
    pcnt = 1
    prev_masks = [0]
    sub = <Py_ssize_t*> malloc((n + 1) * sizeof(Py_ssize_t))
    rbits = <int*> malloc((n + 1) * sizeof(int))
    try:
        for k in range(1, dmax + 1):
            masks = _masks_of_size(n, k)
            cnt = len(masks)
            prev_index = {m: i for i, m in enumerate(prev_masks)}
            cur = <i64*> malloc(cnt * cnt * sizeof(i64))
            last_col = <Py_ssize_t*> malloc(cnt * sizeof(Py_ssize_t))
            last_bit = <int*> malloc(cnt * sizeof(int))
            try:
                for ci in range(cnt):
                    cmask = masks[ci]
                    last = 0
                    while (cmask >> (last + 1)) != 0:
                        last += 1
                    last_bit[ci] = last
                    last_col[ci] = prev_index[cmask & ~(1LL << last)]
                level = []
                for ri in range(cnt):
                    rmask = masks[ri]
                    nr = 0
                    for b in range(n):
                        if (rmask >> b) & 1:
                            rbits[nr] = b
                            sub[nr] = prev_index[rmask & ~(1LL << b)]
                            nr += 1
                    for ci in range(cnt):
                        acc = 0
                        last = last_bit[ci]
                        idx = last_col[ci]
                        # Laplace expansion along the last selected column
                        for pos in range(nr):
                            av = mat[rbits[pos] * n + last]
                            if av == 0:
                                continue
                            term = (av * prev[sub[pos] * pcnt + idx]) % p
                            if (pos + k - 1) & 1:
                                acc -= term
                            else:
                                acc += term
                        acc %= p
                        if acc < 0:
                            acc += p
                        cur[ri * cnt + ci] = acc
                    level.append([cur[ri * cnt + ci] for ci in range(cnt)])
                levels.append(level)
            finally:
                free(last_col)
                free(last_bit)
            free(prev)
            prev = cur
            pcnt = cnt
            prev_masks = masks
    finally:
        free(prev)
        free(mat)
        free(sub)
        free(rbits)
    return levels
