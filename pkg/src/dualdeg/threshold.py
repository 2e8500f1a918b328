"""Candidate dual polynomials for threshold functions: measured, not asserted.

The candidate support is the set of differences of squares k^2 - l^2 with k
up to sqrt(n-t) and l up to sqrt(t), shifted to sit at weights t + i.  The
construction mirrors the OR certificate but comes with no proven bound;
everything reported here is a measurement and the ratio may be undefined
when the witness fails to correlate with the threshold function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from dualdeg.rational import rat_to_str
from dualdeg.sympoly import (
    SinglePoly,
    inner_product,
    l1_norm,
    parity_multiply,
    pure_high_degree,
    threshold_function,
)


@dataclass(frozen=True)
class ThresholdReport:
    n: int
    t: int
    t_raw: tuple[int, ...]
    t_clipped: tuple[int, ...]
    p: SinglePoly
    q: SinglePoly
    phd: int
    ratio_best: Fraction | None
    certifying_sign: int | None
    squares_only: bool
    verdict: str


def _difference_sets(n: int, t: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if not 0 <= t <= n:
        raise ValueError(f"threshold out of range: t={t}, n={n}")
    raw = sorted({k * k - l * l
                  for k in range(isqrt(n - t) + 1)
                  for l in range(isqrt(t) + 1)})
    clipped = tuple(v for v in raw if 0 <= v <= n)
    return tuple(raw), clipped


def build_T(n: int, t: int) -> tuple[int, ...]:
    """Difference-of-squares support, clipped to {0..n} (ascending).

    The raw set may stick out of {0..n}; only the clipped part affects the
    construction, so that is what the index set subtracts.
    """
    return _difference_sets(n, t)[1]


def build_candidate(n: int, t: int) -> ThresholdReport:
    """Construct the candidate and measure its ratio against THR_t.

    No normalization is applied (the ratio is scale-invariant) and no bound
    is asserted; the better of the two orientations +-q is reported, or an
    undefined ratio when neither correlates positively.
    """
    raw, clipped = _difference_sets(n, t)
    in_t = set(clipped)
    roots = [t + i for i in range(n + 1) if i not in in_t]
    values = []
    for k in range(n + 1):
        prod = 1
        for r in roots:
            prod *= k - r
        values.append(Fraction(prod))
    p = SinglePoly(n, tuple(values))
    q = parity_multiply(p)
    phd = pure_high_degree(q)
    corr = inner_product(q, threshold_function(n, t).as_poly())
    if corr:
        sign = 1 if corr > 0 else -1
        ratio = l1_norm(q) / abs(corr)
        verdict = (f"measured ratio {rat_to_str(ratio)} with orientation "
                   f"{sign:+d}; nothing is asserted (open problem)")
    else:
        sign = None
        ratio = None
        verdict = "correlation with the threshold function is zero; ratio undefined"
    if t == 0:
        verdict += "; support is the plain squares (no extra point 2)"
    return ThresholdReport(n=n, t=t, t_raw=raw, t_clipped=clipped, p=p, q=q,
                           phd=phd, ratio_best=ratio, certifying_sign=sign,
                           squares_only=(t == 0), verdict=verdict)


def sweep_table(max_n: int) -> str:
    """Tab-delimited sweep over all 0 <= t <= n <= max_n (header included)."""
    if max_n < 1:
        raise ValueError(f"sweep needs max_n >= 1, got {max_n}")
    lines = ["n\tt\tT_size\tphd\tratio_best"]
    for n in range(1, max_n + 1):
        for t in range(n + 1):
            rep = build_candidate(n, t)
            ratio = rat_to_str(rep.ratio_best) if rep.ratio_best is not None else "undef"
            lines.append(f"{n}\t{t}\t{len(rep.t_clipped)}\t{rep.phd}\t{ratio}")
    return "\n".join(lines) + "\n"


def report_text(rep: ThresholdReport) -> str:
    ratio = rat_to_str(rep.ratio_best) if rep.ratio_best is not None else "undef"
    lines = [
        f"n: {rep.n}",
        f"t: {rep.t}",
        f"T_raw: {' '.join(str(v) for v in rep.t_raw)}",
        f"T_clipped: {' '.join(str(v) for v in rep.t_clipped)}",
        f"deg_p: {rep.n + 1 - len(rep.t_clipped)}",
        f"phd: {rep.phd}",
        f"ratio_best: {ratio}",
        f"verdict: {rep.verdict}",
    ]
    return "\n".join(lines) + "\n"
