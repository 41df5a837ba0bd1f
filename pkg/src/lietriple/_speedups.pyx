# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled witness-search kernel.

Observationally identical to ``_witness_py.stage_search`` but over int64
with all loops in C.  The driver guarantees the pre-scaled inputs are small
enough that no intermediate product can overflow (see the bound check in
``witness._stage_fits_int64``); anything larger is routed to the pure
Python twin instead.
"""

from libc.stdlib cimport free, malloc


cdef long long _det(long long* t, int n) noexcept:
    cdef long long d
    cdef long long m[25]
    cdef int i, j, k, piv
    cdef long long a, prev
    if n == 1:
        return t[0]
    if n == 2:
        return t[0] * t[3] - t[1] * t[2]
    if n == 3:
        return (t[0] * (t[4] * t[8] - t[5] * t[7])
                - t[1] * (t[3] * t[8] - t[5] * t[6])
                + t[2] * (t[3] * t[7] - t[4] * t[6]))
    # Bareiss fraction-free elimination for n <= 5
    for i in range(n * n):
        m[i] = t[i]
    d = 1
    prev = 1
    for k in range(n - 1):
        if m[k * n + k] == 0:
            piv = -1
            for i in range(k + 1, n):
                if m[i * n + k] != 0:
                    piv = i
                    break
            if piv < 0:
                return 0
            for j in range(n):
                a = m[k * n + j]
                m[k * n + j] = m[piv * n + j]
                m[piv * n + j] = a
            d = -d
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) // prev
            m[i * n + k] = 0
        prev = m[k * n + k]
    return d * m[n * n - 1]


def stage_search(int n, a_entries, b_flat, vals, int new_start, long long budget,
                 long long m_lhs, long long m_rhs):
    """Same contract as _witness_py.stage_search; see there."""
    cdef int nvals = len(vals)
    cdef int size = n * n
    cdef int nent = len(a_entries)
    cdef long long tested = 0
    cdef int pos, r, c, i, j, k, l, d, ei
    cdef bint has_new, ok
    cdef long long w, rhs, bv

    cdef int nent_alloc = nent if nent > 0 else 1  # malloc(0) may return NULL
    cdef long long* val_arr = <long long*> malloc(nvals * sizeof(long long))
    cdef long long* bf = <long long*> malloc(size * size * sizeof(long long))
    cdef int* ea = <int*> malloc(nent_alloc * sizeof(int))
    cdef int* eb = <int*> malloc(nent_alloc * sizeof(int))
    cdef int* ec = <int*> malloc(nent_alloc * sizeof(int))
    cdef int* el = <int*> malloc(nent_alloc * sizeof(int))
    cdef long long* ev = <long long*> malloc(nent_alloc * sizeof(long long))
    cdef int* digits = <int*> malloc(size * sizeof(int))
    cdef long long T[25]
    cdef long long lhs[5]
    if val_arr == NULL or bf == NULL or ea == NULL or eb == NULL or ec == NULL \
            or el == NULL or ev == NULL or digits == NULL:
        raise MemoryError()
    try:
        for i in range(nvals):
            val_arr[i] = vals[i]
        for i in range(size * size):
            bf[i] = b_flat[i]
        for i in range(nent):
            ea[i], eb[i], ec[i], el[i], ev[i] = a_entries[i]
        for i in range(size):
            digits[i] = 0
        while True:
            has_new = True
            if new_start > 0:
                has_new = False
                for i in range(size):
                    if digits[i] >= new_start:
                        has_new = True
                        break
            if has_new:
                for i in range(size):
                    T[i] = val_arr[digits[i]]
                if _det(T, n) != 0:
                    tested += 1
                    ok = True
                    for i in range(n):
                        if not ok:
                            break
                        for j in range(i + 1, n):
                            if not ok:
                                break
                            for k in range(n):
                                for l in range(n):
                                    lhs[l] = 0
                                for ei in range(nent):
                                    w = (T[i * n + ea[ei]] * T[j * n + eb[ei]]
                                         - T[i * n + eb[ei]] * T[j * n + ea[ei]])
                                    if w != 0:
                                        w = w * T[k * n + ec[ei]] * ev[ei]
                                        lhs[el[ei]] += w
                                for l in range(n):
                                    rhs = 0
                                    for d in range(n):
                                        bv = bf[((i * n + j) * n + k) * n + d]
                                        if bv != 0:
                                            rhs += bv * T[d * n + l]
                                    if lhs[l] * m_lhs != rhs * m_rhs:
                                        ok = False
                                        break
                                if not ok:
                                    break
                    if ok:
                        return tested, tuple(digits[i] for i in range(size))
                    if tested >= budget:
                        return tested, None
            pos = size - 1
            while pos >= 0:
                digits[pos] += 1
                if digits[pos] < nvals:
                    break
                digits[pos] = 0
                pos -= 1
            if pos < 0:
                return tested, None
    finally:
        free(val_arr)
        free(bf)
        free(ea)
        free(eb)
        free(ec)
        free(el)
        free(ev)
        free(digits)
