# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: prefix deviation, sliding-window balance, morphism application."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free


cdef long long* _to_buf(w, Py_ssize_t n) except NULL:
    cdef long long* buf = <long long*> PyMem_Malloc((n + 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t k
    for k in range(n):
        buf[k] = w[k]
    return buf


def apply_images(images, w):
    out = []
    ext = out.extend
    for a in w:
        ext(images[a - 1])
    return tuple(out)


def max_deviation(w, nums, denom, shift=0):
    cdef Py_ssize_t n = len(w), d = len(nums), l, i
    cdef long long D = denom, t, dev, best = 0, sh = shift
    cdef long long* word = _to_buf(w, n)
    cdef long long* num = <long long*> PyMem_Malloc(d * sizeof(long long))
    cdef long long* counts = <long long*> PyMem_Malloc(d * sizeof(long long))
    try:
        for i in range(d):
            num[i] = nums[i]
            counts[i] = 0
        for l in range(n):
            counts[word[l] - 1] += 1
            t = l + 1 - sh
            for i in range(d):
                dev = num[i] * t - D * counts[i]
                if dev < 0:
                    dev = -dev
                if dev > best:
                    best = dev
        return best
    finally:
        PyMem_Free(word)
        PyMem_Free(num)
        PyMem_Free(counts)


def balance(w, int d):
    cdef Py_ssize_t n = len(w), k, s, length
    cdef long long c, x, lo, hi, best = 0
    cdef int i
    cdef long long* word = _to_buf(w, n)
    cdef long long* prefix = <long long*> PyMem_Malloc((n + 1) * sizeof(long long))
    try:
        for i in range(1, d + 1):
            c = 0
            prefix[0] = 0
            for k in range(n):
                if word[k] == i:
                    c += 1
                prefix[k + 1] = c
            if c == 0 or c == n:
                continue
            for length in range(1, n):
                lo = prefix[length]
                hi = lo
                for s in range(1, n - length + 1):
                    x = prefix[s + length] - prefix[s]
                    if x < lo:
                        lo = x
                    elif x > hi:
                        hi = x
                if hi - lo > best:
                    best = hi - lo
        return best
    finally:
        PyMem_Free(word)
        PyMem_Free(prefix)
