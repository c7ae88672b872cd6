# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer kernels.

Same contract as ``_kernels_py``.  Each kernel first tries a C ``int64``
path with overflow detection; on any overflow it reruns on Python ints,
so results are always exact.
"""
from libc.stdlib cimport malloc, free
from libc.string cimport memset

from . import _kernels_py

NAME = "cython"

cdef extern from *:
    """
    #include <limits.h>
    /* LLONG_MIN counts as overflow so negation and gcd stay defined. */
    static inline int sl2bi_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r) || *r == LLONG_MIN;
    }
    static inline int sl2bi_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r) || *r == LLONG_MIN;
    }
    static inline int sl2bi_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r) || *r == LLONG_MIN;
    }
    """
    bint sl2bi_mul_ovf(long long a, long long b, long long *r) nogil
    bint sl2bi_add_ovf(long long a, long long b, long long *r) nogil
    bint sl2bi_sub_ovf(long long a, long long b, long long *r) nogil

_LIMIT = 2 ** 62


cdef inline long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef long long* _load(list rows, Py_ssize_t nrows, Py_ssize_t ncols) except? NULL:
    """Copy rows into a C buffer; returns NULL if an entry does not fit."""
    cdef long long* buf = <long long*> malloc(max(nrows * ncols, 1) * sizeof(long long))
    cdef Py_ssize_t i, j
    cdef object x
    if buf == NULL:
        raise MemoryError()
    for i in range(nrows):
        row = rows[i]
        for j in range(ncols):
            x = row[j]
            if x >= _LIMIT or x <= -_LIMIT:
                free(buf)
                return NULL
            buf[i * ncols + j] = x
    return buf


cdef list _dump(long long* buf, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef Py_ssize_t i, j
    cdef list out = []
    for i in range(nrows):
        out.append([buf[i * ncols + j] for j in range(ncols)])
    return out


def matmul(list a, list b, Py_ssize_t ncols):
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t inner = len(b)
    cdef long long *A
    cdef long long *B
    cdef long long *C
    cdef long long x, y, p
    cdef Py_ssize_t i, j, k
    cdef bint ovf = False
    if n == 0 or ncols == 0:
        return [[0] * ncols for _ in range(n)]
    if inner == 0:
        return [[0] * ncols for _ in range(n)]
    A = _load(a, n, inner)
    if A == NULL:
        return _kernels_py.matmul(a, b, ncols)
    B = _load(b, inner, ncols)
    if B == NULL:
        free(A)
        return _kernels_py.matmul(a, b, ncols)
    C = <long long*> malloc(n * ncols * sizeof(long long))
    memset(C, 0, n * ncols * sizeof(long long))
    with nogil:
        for i in range(n):
            for k in range(inner):
                x = A[i * inner + k]
                if x == 0:
                    continue
                for j in range(ncols):
                    y = B[k * ncols + j]
                    if y == 0:
                        continue
                    if sl2bi_mul_ovf(x, y, &p) or sl2bi_add_ovf(C[i * ncols + j], p, &C[i * ncols + j]):
                        ovf = True
                        break
                if ovf:
                    break
            if ovf:
                break
    free(A)
    free(B)
    if ovf:
        free(C)
        return _kernels_py.matmul(a, b, ncols)
    out = _dump(C, n, ncols)
    free(C)
    return out


cdef bint _primitive_row(long long* row, Py_ssize_t ncols) nogil:
    cdef long long g = 0
    cdef Py_ssize_t j
    for j in range(ncols):
        if row[j]:
            g = _gcd(g, row[j])
            if g == 1:
                return True
    if g > 1:
        for j in range(ncols):
            row[j] = row[j] // g
    return True


def echelon(list rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef long long* M
    cdef long long* tmp
    cdef Py_ssize_t r = 0, c, p, i, j
    cdef long long pv, f, g, s, t, u, w
    cdef bint ovf = False
    cdef list pivots = []
    if nrows == 0 or ncols == 0:
        return _kernels_py.echelon(rows, ncols)
    M = _load(rows, nrows, ncols)
    if M == NULL:
        return _kernels_py.echelon(rows, ncols)
    tmp = <long long*> malloc(ncols * sizeof(long long))
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and M[p * ncols + c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            for j in range(ncols):
                tmp[j] = M[p * ncols + j]
                M[p * ncols + j] = M[r * ncols + j]
                M[r * ncols + j] = tmp[j]
        if M[r * ncols + c] < 0:
            for j in range(ncols):
                M[r * ncols + j] = -M[r * ncols + j]
        _primitive_row(&M[r * ncols], ncols)
        pv = M[r * ncols + c]
        with nogil:
            for i in range(nrows):
                if i == r:
                    continue
                f = M[i * ncols + c]
                if f == 0:
                    continue
                g = _gcd(pv, f)
                s = pv // g
                t = f // g
                for j in range(ncols):
                    if sl2bi_mul_ovf(s, M[i * ncols + j], &u) or sl2bi_mul_ovf(t, M[r * ncols + j], &w) \
                            or sl2bi_sub_ovf(u, w, &M[i * ncols + j]):
                        ovf = True
                        break
                if ovf:
                    break
                _primitive_row(&M[i * ncols], ncols)
        if ovf:
            break
        pivots.append(c)
        r += 1
    free(tmp)
    if ovf:
        free(M)
        return _kernels_py.echelon(rows, ncols)
    out = _dump(M, r, ncols)
    free(M)
    return out, pivots


cdef bint _load_row(object row, long long* buf, Py_ssize_t n):
    """Copy one row into ``buf``; False if an entry does not fit."""
    cdef Py_ssize_t j
    cdef object x
    for j in range(n):
        x = row[j]
        if x >= _LIMIT or x <= -_LIMIT:
            return False
        buf[j] = x
    return True


def reduce_vector(v, list basis, list pivots):
    cdef Py_ssize_t n = len(v)
    cdef Py_ssize_t nb = len(basis)
    cdef long long* V
    cdef long long* B
    cdef Py_ssize_t k, j, c
    cdef long long pv, f, g, s, t, u, w
    cdef bint fallback = False
    cdef list vl = list(v)
    if n == 0:
        return vl
    V = <long long*> malloc(2 * n * sizeof(long long))
    if V == NULL:
        raise MemoryError()
    B = V + n
    if not _load_row(vl, V, n):
        free(V)
        return _kernels_py.reduce_vector(vl, basis, pivots)
    # basis rows are copied only when their pivot entry in V is nonzero
    for k in range(nb):
        c = pivots[k]
        f = V[c]
        if f == 0:
            continue
        if not _load_row(basis[k], B, n):
            fallback = True
            break
        pv = B[c]
        g = _gcd(pv, f)
        s = pv // g
        t = f // g
        for j in range(n):
            if sl2bi_mul_ovf(s, V[j], &u) or sl2bi_mul_ovf(t, B[j], &w) or sl2bi_sub_ovf(u, w, &V[j]):
                fallback = True
                break
        if fallback:
            break
        _primitive_row(V, n)
    if fallback:
        free(V)
        return _kernels_py.reduce_vector(vl, basis, pivots)
    _primitive_row(V, n)
    out = [V[j] for j in range(n)]
    free(V)
    return out
