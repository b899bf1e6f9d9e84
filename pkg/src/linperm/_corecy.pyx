# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled arithmetic kernels; semantics match ``_corepy`` exactly.

Accumulators stay below 2^62 between lazy reductions, so with p < 2^31 no
intermediate ever overflows a signed 64-bit word.  Subtractions are folded
into additions of ``c * (p - mod[j])`` to keep every value nonnegative.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport free, malloc

BACKEND = "cython"

cdef int64_t ACC_GUARD = (<int64_t> 1) << 62


cdef int64_t* _alloc(Py_ssize_t length) except NULL:
    cdef int64_t* buf = <int64_t*> malloc(length * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    return buf


cdef int64_t* _copy_seq(object seq, Py_ssize_t length) except NULL:
    cdef int64_t* buf = _alloc(length)
    cdef Py_ssize_t i
    for i in range(length):
        buf[i] = seq[i]
    return buf


cdef void _mul_into(int64_t* a, int64_t* b, int64_t* mod, int64_t p,
                    Py_ssize_t m, int64_t* scratch, int64_t* out) noexcept:
    # scratch has room for 2m-1 entries; out for m
    cdef Py_ssize_t i, j, k, off
    cdef int64_t ai, c, acc, mj
    for k in range(2 * m - 1):
        scratch[k] = 0
    for i in range(m):
        ai = a[i]
        if ai != 0:
            for j in range(m):
                acc = scratch[i + j] + ai * b[j]
                if acc >= ACC_GUARD:
                    acc = acc % p
                scratch[i + j] = acc
    for k in range(2 * m - 2, m - 1, -1):
        c = scratch[k] % p
        scratch[k] = 0
        if c != 0:
            off = k - m
            for j in range(m):
                mj = mod[j]
                if mj != 0:
                    acc = scratch[off + j] + c * (p - mj)
                    if acc >= ACC_GUARD:
                        acc = acc % p
                    scratch[off + j] = acc
    for k in range(m):
        out[k] = scratch[k] % p


cdef void _matvec_into(int64_t* mat, int64_t* v, int64_t p, Py_ssize_t m,
                       int64_t* out) noexcept:
    cdef Py_ssize_t i, j
    cdef int64_t acc
    for i in range(m):
        acc = 0
        for j in range(m):
            acc += mat[i * m + j] * v[j]
            if acc >= ACC_GUARD:
                acc = acc % p
        out[i] = acc % p


def addmod(a, b, p):
    cdef int64_t pp = p
    return [(<int64_t> x + <int64_t> y) % pp for x, y in zip(a, b)]


def submod(a, b, p):
    cdef int64_t pp = p
    return [(<int64_t> x - <int64_t> y + pp) % pp for x, y in zip(a, b)]


def negmod(a, p):
    cdef int64_t pp = p
    return [(pp - <int64_t> x) % pp for x in a]


def mulmod(a, b, mod, p):
    cdef Py_ssize_t m = len(mod) - 1
    cdef int64_t pp = p
    if m == 1:
        return [<int64_t> a[0] * <int64_t> b[0] % pp]
    cdef int64_t* av = _copy_seq(a, m)
    cdef int64_t* bv = _copy_seq(b, m)
    cdef int64_t* mv = _copy_seq(mod, m + 1)
    cdef int64_t* scratch = _alloc(2 * m - 1)
    cdef int64_t* out = _alloc(m)
    try:
        _mul_into(av, bv, mv, pp, m, scratch, out)
        return [out[k] for k in range(m)]
    finally:
        free(av)
        free(bv)
        free(mv)
        free(scratch)
        free(out)


def matvec(mat, v, p):
    cdef Py_ssize_t m = len(v)
    cdef int64_t pp = p
    cdef int64_t* mv = _copy_seq(mat, m * m)
    cdef int64_t* vv = _copy_seq(v, m)
    cdef int64_t* out = _alloc(m)
    try:
        _matvec_into(mv, vv, pp, m, out)
        return [out[k] for k in range(m)]
    finally:
        free(mv)
        free(vv)
        free(out)


def eval_all(coeff_rows, frob_mats, mod, p):
    """See ``_corepy.eval_all``; identical contract."""
    cdef Py_ssize_t m = len(mod) - 1
    cdef Py_ssize_t terms = len(coeff_rows)
    cdef int64_t pp = p
    cdef Py_ssize_t order = 1
    cdef Py_ssize_t i, j, t, idx
    cdef int64_t s, enc
    for i in range(m):
        order *= p

    cdef int64_t* rows = _alloc(max(terms * m, 1))
    cdef int64_t* mats = _alloc(max(terms * m * m, 1))
    cdef int64_t* mv = _copy_seq(mod, m + 1)
    cdef int64_t* x = _alloc(m)
    cdef int64_t* y = _alloc(m)
    cdef int64_t* tv = _alloc(m)
    cdef int64_t* acc = _alloc(m)
    cdef int64_t* scratch = _alloc(2 * m - 1 if m > 1 else 1)
    out = [0] * order
    try:
        for t in range(terms):
            row = coeff_rows[t]
            mat = frob_mats[t]
            for i in range(m):
                rows[t * m + i] = row[i]
            for i in range(m * m):
                mats[t * m * m + i] = mat[i]
        for i in range(m):
            x[i] = 0
        for idx in range(order):
            for i in range(m):
                acc[i] = 0
            for t in range(terms):
                _matvec_into(mats + t * m * m, x, pp, m, y)
                if m == 1:
                    tv[0] = rows[t * m] * y[0] % pp
                else:
                    _mul_into(rows + t * m, y, mv, pp, m, scratch, tv)
                for i in range(m):
                    s = acc[i] + tv[i]
                    acc[i] = s - pp if s >= pp else s
            enc = 0
            for i in range(m - 1, -1, -1):
                enc = enc * pp + acc[i]
            out[idx] = enc
            for i in range(m):
                s = x[i] + 1
                if s == pp:
                    x[i] = 0
                else:
                    x[i] = s
                    break
        return out
    finally:
        free(rows)
        free(mats)
        free(mv)
        free(x)
        free(y)
        free(tv)
        free(acc)
        free(scratch)
