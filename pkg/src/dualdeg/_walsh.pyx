# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Walsh-Hadamard kernel.

Same contract as dualdeg._walsh_py.fwht_inplace; the arithmetic stays on
Python objects (arbitrary-precision ints or Fractions), the win comes from
removing interpreter overhead in the butterfly loop.
"""


def fwht_inplace(list vec):
    cdef Py_ssize_t n = len(vec)
    cdef Py_ssize_t h, step, start, j
    cdef object a, b
    if n & (n - 1):
        raise ValueError(f"length must be a power of two, got {n}")
    h = 1
    while h < n:
        step = h << 1
        start = 0
        while start < n:
            for j in range(start, start + h):
                a = vec[j]
                b = vec[j + h]
                vec[j] = a + b
                vec[j + h] = a - b
            start += step
        h = step
