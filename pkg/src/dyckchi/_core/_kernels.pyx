# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word-enumeration kernel; same contract as ``_kernels_py``."""

from libc.stdlib cimport malloc, calloc, free


cdef bint _next_permutation(int* w, int n) noexcept nogil:
    cdef int i = n - 2, j, tmp, lo, hi
    while i >= 0 and w[i] >= w[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while w[j] <= w[i]:
        j -= 1
    tmp = w[i]; w[i] = w[j]; w[j] = tmp
    lo = i + 1
    hi = n - 1
    while lo < hi:
        tmp = w[lo]; w[lo] = w[hi]; w[hi] = tmp
        lo += 1
        hi -= 1
    return True


def word_histogram(int n, qpairs, tpairs, content):
    if sum(content) != n:
        raise ValueError("content does not sum to the word length")
    cdef int nq = len(qpairs), nt = len(tpairs)
    cdef int* w = <int*> malloc(max(n, 1) * sizeof(int))
    cdef int* qa = <int*> malloc(max(nq, 1) * sizeof(int))
    cdef int* qb = <int*> malloc(max(nq, 1) * sizeof(int))
    cdef int* ta = <int*> malloc(max(nt, 1) * sizeof(int))
    cdef int* tb = <int*> malloc(max(nt, 1) * sizeof(int))
    cdef long long* hist = <long long*> calloc((nq + 1) * (nt + 1), sizeof(long long))
    cdef int k, m, pos = 0, inv, tc
    try:
        for k, m in enumerate(content):
            for _ in range(m):
                w[pos] = k + 1
                pos += 1
        for k, (a, b) in enumerate(qpairs):
            qa[k] = a
            qb[k] = b
        for k, (a, b) in enumerate(tpairs):
            ta[k] = a
            tb[k] = b
        with nogil:
            while True:
                inv = 0
                for k in range(nq):
                    if w[qa[k]] > w[qb[k]]:
                        inv += 1
                tc = 0
                for k in range(nt):
                    if w[ta[k]] <= w[tb[k]]:
                        tc += 1
                hist[inv * (nt + 1) + tc] += 1
                if not _next_permutation(w, n):
                    break
        out = {}
        for inv in range(nq + 1):
            for tc in range(nt + 1):
                if hist[inv * (nt + 1) + tc]:
                    out[(inv, tc)] = hist[inv * (nt + 1) + tc]
        return out
    finally:
        free(w); free(qa); free(qb); free(ta); free(tb); free(hist)
