"""Calculus of symmetric Boolean functions and single-variate polynomials.

A symmetric function/polynomial on the +-1 cube is handled through its value
table on Hamming weights 0..n.  The binomial-weighted inner product and
l1-norm on tables equal the corresponding sums over the cube, so everything
here stays O(n)-sized; a brute-force multilinear Fourier expansion over all
2^n inputs is kept as an independent oracle for small n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from dualdeg.kernels import fwht_inplace
from dualdeg.rational import ZERO, binomial

#: Cap on cube enumeration (2^n points with exact rationals).
DEFAULT_BRUTE_LIMIT = 14


@dataclass(frozen=True)
class SymBoolFn:
    """A symmetric Boolean function as its weight table F(0..n), entries +-1."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one bit, got n={self.n}")
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != self.n + 1:
            raise ValueError(f"table needs {self.n + 1} entries, got {len(self.values)}")
        if any(v not in (1, -1) for v in self.values):
            raise ValueError("table entries must be +1 or -1")

    def as_poly(self) -> SinglePoly:
        return SinglePoly(self.n, tuple(Fraction(v) for v in self.values))


def or_function(n: int) -> SymBoolFn:
    """OR on n bits: +1 at weight 0, -1 at every positive weight."""
    return SymBoolFn(n, (1,) + (-1,) * n)


def parity_function(n: int) -> SymBoolFn:
    return SymBoolFn(n, tuple((-1) ** k for k in range(n + 1)))


def constant_function(n: int, value: int = 1) -> SymBoolFn:
    return SymBoolFn(n, (value,) * (n + 1))


def threshold_function(n: int, t: int) -> SymBoolFn:
    """THR_t: +1 below weight t, -1 from weight t on.  THR_1 is OR."""
    if not 0 <= t <= n + 1:
        raise ValueError(f"threshold out of range: t={t}, n={n}")
    return SymBoolFn(n, tuple(1 if k < t else -1 for k in range(n + 1)))


@dataclass(frozen=True)
class SinglePoly:
    """A real symmetric polynomial as its exact value table on {0..n}."""

    n: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one bit, got n={self.n}")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if len(self.values) != self.n + 1:
            raise ValueError(f"table needs {self.n + 1} entries, got {len(self.values)}")

    def is_zero(self) -> bool:
        return not any(self.values)

    def scale(self, c) -> SinglePoly:
        c = Fraction(c)
        return SinglePoly(self.n, tuple(c * v for v in self.values))


def from_newton_coefficients(n: int, coeffs: Iterable[Fraction]) -> SinglePoly:
    """Materialize V(k) = sum_j c_j * C(k, j) from binomial-basis coefficients."""
    cs = [Fraction(c) for c in coeffs]
    if len(cs) > n + 1:
        raise ValueError(f"{len(cs)} coefficients exceed degree bound n={n}")
    values = [sum((c * binomial(k, j) for j, c in enumerate(cs)), ZERO)
              for k in range(n + 1)]
    return SinglePoly(n, tuple(values))


def newton_coefficients(poly: SinglePoly) -> tuple[Fraction, ...]:
    """Forward-difference coefficients at node 0 (full triangle, exact)."""
    row = list(poly.values)
    out = [row[0]]
    for _ in range(poly.n):
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        out.append(row[0])
    return tuple(out)


def interpolate_degree(poly: SinglePoly) -> int:
    """Degree of the interpolating polynomial of the value table.

    Equals the largest j with a nonzero j-th forward difference at 0; -1
    marks the all-zero table.  Scans from j = n downward and skips zero
    table entries, so sparse tables stay cheap even for large n.
    """
    nonzero = [(k, v) for k, v in enumerate(poly.values) if v]
    if not nonzero:
        return -1
    for j in range(poly.n, -1, -1):
        acc = ZERO
        for k, v in nonzero:
            if k > j:
                break
            term = binomial(j, k) * v
            acc = acc + term if (j - k) % 2 == 0 else acc - term
        if acc:
            return j
    raise AssertionError("nonzero table with all forward differences zero")


def parity_multiply(poly: SinglePoly) -> SinglePoly:
    """Pointwise sign flip V(k) -> (-1)^k V(k); an involution."""
    return SinglePoly(poly.n, tuple(v if k % 2 == 0 else -v
                                    for k, v in enumerate(poly.values)))


def pure_high_degree(poly: SinglePoly) -> int:
    """Minimum Fourier level of the corresponding multilinear polynomial.

    Computed as n - deg(parity * P).  This is not the lowest power of k
    appearing in the closed form of P(k); the two notions differ.
    """
    if poly.is_zero():
        raise ValueError("pure high degree is undefined for the zero polynomial")
    return poly.n - interpolate_degree(parity_multiply(poly))


def moments_vanish(poly: SinglePoly, d: int) -> bool:
    """True iff sum_i C(n,i) V(i) i^j == 0 for every j < d."""
    if not 0 <= d <= poly.n + 1:
        raise ValueError(f"moment order out of range: d={d}, n={poly.n}")
    weighted = [(i, binomial(poly.n, i) * v) for i, v in enumerate(poly.values) if v]
    powers = {i: 1 for i, _ in weighted}
    for _ in range(d):
        if sum((w * powers[i] for i, w in weighted), ZERO):
            return False
        for i, _ in weighted:
            powers[i] *= i
    return True


def vanishing_moments(poly: SinglePoly) -> int:
    """Largest d with moments_vanish(poly, d); the moment view of pure high degree."""
    if poly.is_zero():
        raise ValueError("all moments of the zero polynomial vanish")
    weighted = [(i, binomial(poly.n, i) * v) for i, v in enumerate(poly.values) if v]
    powers = {i: 1 for i, _ in weighted}
    for d in range(poly.n + 1):
        if sum((w * powers[i] for i, w in weighted), ZERO):
            return d
        for i, _ in weighted:
            powers[i] *= i
    raise AssertionError("nonzero table with all moments up to n vanishing")


def inner_product(p: SinglePoly, q: SinglePoly) -> Fraction:
    """Binomial-weighted scalar product sum_i C(n,i) P(i) Q(i)."""
    if p.n != q.n:
        raise ValueError(f"mismatched dimensions: {p.n} vs {q.n}")
    return sum((binomial(p.n, i) * a * b
                for i, (a, b) in enumerate(zip(p.values, q.values)) if a and b),
               ZERO)


def l1_norm(p: SinglePoly) -> Fraction:
    """Binomial-weighted l1-norm sum_i C(n,i) |P(i)|."""
    return sum((binomial(p.n, i) * abs(v) for i, v in enumerate(p.values) if v),
               ZERO)


@dataclass(frozen=True)
class MultilinearPoly:
    """Multilinear polynomial in the +-1 Fourier basis, nonzero coefficients only.

    Coefficient keys are bit masks: bit i-1 set means variable i belongs to
    the monomial.  Input points use the same encoding: bit i-1 set means
    x_i = -1, so the Hamming weight of a point is the popcount of its mask.
    """

    n: int
    coeffs: Mapping[int, Fraction]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one variable, got n={self.n}")
        clean = {}
        for mask, c in dict(self.coeffs).items():
            if not 0 <= mask < (1 << self.n):
                raise ValueError(f"mask {mask} out of range for n={self.n}")
            c = Fraction(c)
            if c:
                clean[int(mask)] = c
        object.__setattr__(self, "coeffs", clean)

    def coefficient(self, mask: int) -> Fraction:
        return self.coeffs.get(mask, ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def evaluate(self, point_mask: int) -> Fraction:
        acc = ZERO
        for mask, c in self.coeffs.items():
            acc = acc - c if (mask & point_mask).bit_count() % 2 else acc + c
        return acc

    def __add__(self, other: MultilinearPoly) -> MultilinearPoly:
        if self.n != other.n:
            raise ValueError(f"mismatched dimensions: {self.n} vs {other.n}")
        merged = dict(self.coeffs)
        for mask, c in other.coeffs.items():
            merged[mask] = merged.get(mask, ZERO) + c
        return MultilinearPoly(self.n, merged)

    def __rmul__(self, c) -> MultilinearPoly:
        c = Fraction(c)
        return MultilinearPoly(self.n, {m: c * v for m, v in self.coeffs.items()})


def _scaled_int_vector(values: list[Fraction]) -> tuple[list[int], int]:
    """Clear denominators: returns (integer vector, common multiplier)."""
    lcm = math.lcm(*(v.denominator for v in values)) if values else 1
    return [int(v * lcm) for v in values], lcm


def expand_multilinear(poly: SinglePoly, limit: int = DEFAULT_BRUTE_LIMIT) -> MultilinearPoly:
    """Exact Fourier expansion by brute force over all 2^n cube points."""
    n = poly.n
    if n > limit:
        raise ValueError(f"n={n} exceeds brute-force limit {limit}")
    scaled, lcm = _scaled_int_vector(list(poly.values))
    vec = [scaled[x.bit_count()] for x in range(1 << n)]
    fwht_inplace(vec)
    denom = lcm << n
    return MultilinearPoly(n, {mask: Fraction(g, denom)
                               for mask, g in enumerate(vec) if g})


def evaluate_on_cube(p: MultilinearPoly) -> list[Fraction]:
    """Values of p at all 2^n points, indexed by point mask."""
    full = [ZERO] * (1 << p.n)
    for mask, c in p.coeffs.items():
        full[mask] = c
    vec, lcm = _scaled_int_vector(full)
    fwht_inplace(vec)
    return [Fraction(g, lcm) for g in vec]


def fourier_level_range(p: MultilinearPoly) -> tuple[int, int]:
    """(min, max) monomial size over nonzero coefficients."""
    if p.is_zero():
        raise ValueError("level range is undefined for the zero polynomial")
    levels = [mask.bit_count() for mask in p.coeffs]
    return min(levels), max(levels)


def symmetrize(p: MultilinearPoly, limit: int = DEFAULT_BRUTE_LIMIT) -> MultilinearPoly:
    """Average over all input permutations, i.e. over each Fourier level.

    The result takes the mean coefficient on every level, which equals the
    permutation average; pointwise error against any symmetric function can
    only shrink.
    """
    n = p.n
    if n > limit:
        raise ValueError(f"n={n} exceeds brute-force limit {limit}")
    level_sum: dict[int, Fraction] = {}
    for mask, c in p.coeffs.items():
        lvl = mask.bit_count()
        level_sum[lvl] = level_sum.get(lvl, ZERO) + c
    level_avg = {lvl: s / binomial(n, lvl) for lvl, s in level_sum.items() if s}
    out = {}
    for mask in range(1 << n):
        avg = level_avg.get(mask.bit_count())
        if avg:
            out[mask] = avg
    return MultilinearPoly(n, out)


def restrict_symmetric(p: MultilinearPoly) -> SinglePoly:
    """Value table k -> p(representative point of weight k); inverse of
    expand_multilinear on symmetric input."""
    return SinglePoly(p.n, tuple(p.evaluate((1 << k) - 1) for k in range(p.n + 1)))
