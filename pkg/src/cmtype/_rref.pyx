# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled prime-field row-reduction kernels.

Same contracts as cmtype._rref_py (the pure-Python fallback).  Entries are
ints in [0, p) with p < 2**16, so every intermediate product fits in an
int64 without overflow.
"""

from libc.stdlib cimport free, malloc

IMPLEMENTATION = "cython"


cdef long long _inv_mod(long long a, long long p):
    # Fermat: a^(p-2) mod p.
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e > 0:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def rref_fp(rows, long long p):
    """Reduced row echelon form over F_p: (reduced_rows, pivot_cols)."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0]) if nrows else 0
    if nrows == 0 or ncols == 0:
        return [list(r) for r in rows][:0], []

    cdef long long *m = <long long *> malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, c, col, pivot_row, rank
    cdef long long f, inv, tmp
    try:
        for i in range(nrows):
            row_obj = rows[i]
            for c in range(ncols):
                m[i * ncols + c] = row_obj[c] % p

        pivots = []
        rank = 0
        for col in range(ncols):
            pivot_row = -1
            for i in range(rank, nrows):
                if m[i * ncols + col]:
                    pivot_row = i
                    break
            if pivot_row < 0:
                continue
            if pivot_row != rank:
                for c in range(col, ncols):
                    tmp = m[rank * ncols + c]
                    m[rank * ncols + c] = m[pivot_row * ncols + c]
                    m[pivot_row * ncols + c] = tmp
            inv = _inv_mod(m[rank * ncols + col], p)
            for c in range(col, ncols):
                m[rank * ncols + c] = m[rank * ncols + c] * inv % p
            for i in range(nrows):
                if i == rank:
                    continue
                f = m[i * ncols + col]
                if f:
                    for c in range(col, ncols):
                        m[i * ncols + c] = (m[i * ncols + c] - f * m[rank * ncols + c]) % p
                        if m[i * ncols + c] < 0:
                            m[i * ncols + c] += p
            pivots.append(col)
            rank += 1
            if rank == nrows:
                break

        out = [[m[i * ncols + c] for c in range(ncols)] for i in range(rank)]
        return out, pivots
    finally:
        free(m)


def reduce_rows_fp(vecs, basis, pivots, long long p):
    """Reduce each vector modulo the span of an RREF basis."""
    cdef Py_ssize_t nb = len(basis)
    cdef Py_ssize_t nv = len(vecs)
    cdef Py_ssize_t ncols
    if nb:
        ncols = len(basis[0])
    elif nv:
        ncols = len(vecs[0])
    else:
        return []
    if nb == 0:
        return [list(v) for v in vecs]

    cdef long long *b = <long long *> malloc(nb * ncols * sizeof(long long))
    cdef long long *r = <long long *> malloc(ncols * sizeof(long long))
    cdef Py_ssize_t *piv = <Py_ssize_t *> malloc(nb * sizeof(Py_ssize_t))
    if b == NULL or r == NULL or piv == NULL:
        free(b)
        free(r)
        free(piv)
        raise MemoryError()
    cdef Py_ssize_t i, c, k, col
    cdef long long f
    try:
        for i in range(nb):
            row_obj = basis[i]
            piv[i] = pivots[i]
            for c in range(ncols):
                b[i * ncols + c] = row_obj[c] % p
        out = []
        for k in range(nv):
            v = vecs[k]
            for c in range(ncols):
                r[c] = v[c] % p
            for i in range(nb):
                col = piv[i]
                f = r[col]
                if f:
                    for c in range(col, ncols):
                        r[c] = (r[c] - f * b[i * ncols + c]) % p
                        if r[c] < 0:
                            r[c] += p
            out.append([r[c] for c in range(ncols)])
        return out
    finally:
        free(b)
        free(r)
        free(piv)
