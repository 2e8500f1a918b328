"""Pure-Python Walsh-Hadamard kernel (fallback for the compiled extension)."""

from __future__ import annotations


def fwht_inplace(vec: list) -> None:
    """In-place unnormalized Walsh-Hadamard butterfly over a length-2^k list.

    Works on any values with exact +/- (ints, Fractions).  Applying it twice
    multiplies every entry by len(vec).
    """
    n = len(vec)
    if n & (n - 1):
        raise ValueError(f"length must be a power of two, got {n}")
    h = 1
    while h < n:
        step = h << 1
        for start in range(0, n, step):
            for j in range(start, start + h):
                a = vec[j]
                b = vec[j + h]
                vec[j] = a + b
                vec[j + h] = a - b
        h = step
