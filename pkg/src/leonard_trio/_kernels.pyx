# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``.

Field elements stay Python objects (mpq, Fraction, mpf); the gain comes from
C-level loops, list indexing and fewer temporary tuples.
"""


cpdef object pochhammer(object a, object q, Py_ssize_t k):
    cdef object r = q**0
    cdef object t = a
    cdef Py_ssize_t j
    for j in range(k):
        r = r * (1 - t)
        t = t * q
    return r


cpdef list pochhammer_ladder(object a, object q, Py_ssize_t k):
    cdef object r = q**0
    cdef list out = [r]
    cdef object t = a
    cdef Py_ssize_t j
    for j in range(k):
        r = r * (1 - t)
        out.append(r)
        t = t * q
    return out


cpdef object first_vanishing(object bases, object q, Py_ssize_t n):
    cdef list powers = list(bases)
    cdef Py_ssize_t i, j, m = len(powers)
    for j in range(n):
        for i in range(m):
            if powers[i] == 1:
                return (i, j)
        for i in range(m):
            powers[i] = powers[i] * q
    return None


cpdef object series_sum(object upper, object lower, object q, object z, Py_ssize_t n, object vwp=None):
    cdef list ut = list(upper)
    cdef list lt = list(lower)
    cdef Py_ssize_t nu = len(ut), nl = len(lt)
    cdef Py_ssize_t j, k
    cdef object term = q**0
    cdef object total = term
    cdef object num, den, t
    cdef object a2 = None, base = None, q2 = None
    cdef bint well_poised = vwp is not None
    if well_poised:
        a2 = vwp
        base = 1 - vwp
        q2 = q * q
    for k in range(n):
        num = z
        for j in range(nu):
            t = ut[j]
            num = num * (1 - t)
            ut[j] = t * q
        if num == 0:
            break
        den = 1
        for j in range(nl):
            t = lt[j]
            den = den * (1 - t)
            lt[j] = t * q
        term = term * num / den
        if well_poised:
            a2 = a2 * q2
            total = total + term * (1 - a2) / base
        else:
            total = total + term
    return total


cpdef list matmul(list A, list B):
    cdef Py_ssize_t n = len(A)
    cdef Py_ssize_t m = len(B[0]) if B else 0
    cdef Py_ssize_t i, j, k
    cdef list out = []
    cdef list row, arow, bk
    cdef object a, b
    for i in range(n):
        row = [0] * m
        arow = A[i]
        for k in range(len(arow)):
            a = arow[k]
            if a == 0:
                continue
            bk = B[k]
            for j in range(m):
                b = bk[j]
                if b != 0:
                    row[j] = row[j] + a * b
        out.append(row)
    return out
