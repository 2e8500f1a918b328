"""Explicit dual certificate family for OR, verified in exact arithmetic.

For n >= 2 the support is the set of perfect squares up to n plus the point
2.  The certified polynomial takes value 1 at 0, vanishes off the support,
and has degree n - m - 1 (m = floor(sqrt(n))), so its parity twin has pure
high degree m + 1 > sqrt(n).  Every quantitative claim (per-point bounds,
norm < 27, ratio < 14) is recomputed exactly and recorded in a
machine-checkable certificate document.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Mapping, NamedTuple

from dualdeg import docio, lp_degree
from dualdeg.rational import (
    ZERO,
    binomial,
    factorial,
    rat_from_str,
    rat_to_str,
)
from dualdeg.sympoly import (
    SinglePoly,
    inner_product,
    interpolate_degree,
    or_function,
    parity_multiply,
    pure_high_degree,
)

CERT_FORMAT = "or-dual-certificate/1"
EPSILON_CERTIFIED = Fraction(1, 14)

NORM_BOUND = Fraction(27)
RATIO_BOUND = Fraction(14)
POINT_TWO_BOUND = Fraction(12)


class CertificateError(Exception):
    """A named certificate inequality failed (not expected for any n)."""


class CheckRecord(NamedTuple):
    name: str
    lhs: Fraction
    ok: bool


@dataclass(frozen=True)
class OrCertificate:
    n: int
    m: int
    support: tuple[int, ...]
    p_values: Mapping[int, Fraction]
    q: SinglePoly
    phd: int
    norm: Fraction
    ratio: Fraction
    epsilon_certified: Fraction
    degree_bound: int
    checks: tuple[CheckRecord, ...]

    def __post_init__(self):
        object.__setattr__(self, "p_values",
                           {int(i): Fraction(v) for i, v in dict(self.p_values).items()})
        object.__setattr__(self, "checks", tuple(self.checks))

    def p_table(self) -> SinglePoly:
        values = [ZERO] * (self.n + 1)
        for i, v in self.p_values.items():
            values[i] = v
        return SinglePoly(self.n, tuple(values))


def squares_plus_two(n: int) -> tuple[int, ...]:
    """Support set: {i^2 : 0 <= i <= isqrt(n)} together with 2, ascending."""
    if n < 2:
        raise ValueError(f"support needs n >= 2, got {n}")
    squares = {i * i for i in range(isqrt(n) + 1)}
    return tuple(sorted(squares | {2}))


def construct_P(n: int) -> SinglePoly:
    """Value table of the certified polynomial on {0..n}.

    P(x) = 2 (-1)^(n-m-1) (m!^2 / n!) * prod over the non-support points j
    of (x - j); the scale makes P(0) = 1 and the roots zero P off support.
    Each support value is accumulated as one big-integer product.
    """
    if n < 2:
        raise ValueError(f"construction needs n >= 2, got {n}")
    m = isqrt(n)
    support = squares_plus_two(n)
    in_support = set(support)
    roots = [j for j in range(n + 1) if j not in in_support]
    scale = Fraction(2 * (-1) ** (n - m - 1) * factorial(m) ** 2, factorial(n))
    values = [ZERO] * (n + 1)
    for i in support:
        prod = 1
        for j in roots:
            prod *= i - j
        values[i] = scale * prod
    return SinglePoly(n, tuple(values))


def construct_Q(n: int) -> SinglePoly:
    """The certified polynomial with parity multiplied in: Q(k) = (-1)^k P(k)."""
    return parity_multiply(construct_P(n))


def binom_ratio(m: int, k: int) -> Fraction:
    """m!^2 / ((m+k)! (m-k)!); at most 1 for 0 <= k <= m."""
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got k={k}, m={m}")
    return Fraction(factorial(m) ** 2, factorial(m + k) * factorial(m - k))


def _sparse_norm(p: SinglePoly, support: tuple[int, ...]) -> Fraction:
    return sum((binomial(p.n, i) * abs(p.values[i]) for i in support), ZERO)


def check_point_bounds(n: int, p: SinglePoly | None = None) -> list[CheckRecord]:
    """Exact per-point mass bounds: C(n,2)|P(2)| <= 12 and
    C(n,k^2)|P(k^2)| <= 8/k^2 for k = 1..m."""
    if p is None:
        p = construct_P(n)
    m = isqrt(n)
    records = [CheckRecord("point_bound_two",
                           binomial(n, 2) * abs(p.values[2]),
                           binomial(n, 2) * abs(p.values[2]) <= POINT_TWO_BOUND)]
    for k in range(1, m + 1):
        lhs = binomial(n, k * k) * abs(p.values[k * k])
        records.append(CheckRecord(f"point_bound_square_{k}",
                                   lhs, lhs <= Fraction(8, k * k)))
    return records


def check_norm(n: int, p: SinglePoly | None = None) -> Fraction:
    """Exact l1-norm, summed over the support only; asserts norm < 27."""
    if p is None:
        p = construct_P(n)
    norm = _sparse_norm(p, squares_plus_two(n))
    if not norm < NORM_BOUND:
        raise CertificateError(f"norm_lt_27 failed: {norm}")
    return norm


def make_certificate(n: int) -> OrCertificate:
    """Construct and fully verify the dual certificate for OR on n bits.

    Raises CertificateError naming the first failed inequality; the returned
    certificate records every check with its exact left-hand side.
    """
    p = construct_P(n)
    q = parity_multiply(p)
    m = isqrt(n)
    support = squares_plus_two(n)
    checks: list[CheckRecord] = []

    def require(name: str, lhs, ok: bool) -> None:
        checks.append(CheckRecord(name, Fraction(lhs), ok))
        if not ok:
            raise CertificateError(f"{name} failed: lhs = {lhs}")

    require("p0_equals_1", p.values[0], p.values[0] == 1)
    deg = interpolate_degree(p)
    require("degree_equals_n_minus_m_minus_1", deg, deg == n - m - 1)
    phd = pure_high_degree(q)
    require("phd_equals_m_plus_1", phd, phd == m + 1)
    require("phd_squared_gt_n", phd * phd, phd * phd > n)
    for rec in check_point_bounds(n, p):
        require(rec.name, rec.lhs, rec.ok)
    norm = _sparse_norm(p, support)
    require("norm_lt_27", norm, norm < NORM_BOUND)
    q_dot_or = inner_product(q, or_function(n).as_poly())
    require("q_dot_or_equals_2", q_dot_or, q_dot_or == 2)
    ratio = norm / q_dot_or
    require("ratio_lt_14", ratio, ratio < RATIO_BOUND)

    return OrCertificate(
        n=n, m=m, support=support,
        p_values={i: p.values[i] for i in support},
        q=q, phd=phd, norm=norm, ratio=ratio,
        epsilon_certified=EPSILON_CERTIFIED, degree_bound=phd,
        checks=tuple(checks),
    )


def no_two_variant_norm(n: int) -> Fraction:
    """Norm of the squares-only variant (support without the point 2).

    Diagnostic only: this variant certifies nothing here, it just shows how
    much mass the extra support point removes.  Normalized to value 1 at 0.
    """
    if n < 2:
        raise ValueError(f"construction needs n >= 2, got {n}")
    squares = tuple(sorted({i * i for i in range(isqrt(n) + 1)}))
    in_support = set(squares)
    roots = [j for j in range(n + 1) if j not in in_support]
    prod0 = 1
    for j in roots:
        prod0 *= -j
    norm = ZERO
    for i in squares:
        prod = 1
        for j in roots:
            prod *= i - j
        norm += binomial(n, i) * abs(Fraction(prod, prod0))
    return norm


def certificate_document(cert: OrCertificate) -> str:
    pairs = [
        ("format", CERT_FORMAT),
        ("n", str(cert.n)),
        ("m", str(cert.m)),
        ("S", " ".join(str(i) for i in cert.support)),
    ]
    pairs += [(f"P[{i}]", rat_to_str(cert.p_values[i])) for i in cert.support]
    pairs += [
        ("phd", str(cert.phd)),
        ("norm", rat_to_str(cert.norm)),
        ("ratio", rat_to_str(cert.ratio)),
        ("epsilon_certified", rat_to_str(cert.epsilon_certified)),
        ("degree_bound", str(cert.degree_bound)),
    ]
    pairs += [("check", f"{rec.name} = {rat_to_str(rec.lhs)}") for rec in cert.checks]
    return docio.emit_document(pairs)


def parse_certificate_document(text: str) -> OrCertificate:
    """Parse without trusting: only framing is validated here, all
    mathematical content is re-derived by verify_document."""
    pairs = docio.parse_document(text)
    check_lines = [v for k, v in pairs if k == "check"]
    fields = dict((k, v) for k, v in pairs if k != "check")
    if len(fields) != len(pairs) - len(check_lines):
        raise docio.DocumentError("duplicate field")
    if docio.take_field(fields, "format") != CERT_FORMAT:
        raise docio.DocumentError("not an or-dual-certificate document")
    try:
        n = int(docio.take_field(fields, "n"))
        m = int(docio.take_field(fields, "m"))
        support = tuple(int(s) for s in docio.take_field(fields, "S").split())
        p_values = {i: rat_from_str(docio.take_field(fields, f"P[{i}]"))
                    for i in support}
        phd = int(docio.take_field(fields, "phd"))
        norm = rat_from_str(docio.take_field(fields, "norm"))
        ratio = rat_from_str(docio.take_field(fields, "ratio"))
        epsilon = rat_from_str(docio.take_field(fields, "epsilon_certified"))
        degree_bound = int(docio.take_field(fields, "degree_bound"))
    except (ValueError, docio.DocumentError) as exc:
        raise docio.DocumentError(f"bad certificate document: {exc}") from exc
    if fields:
        raise docio.DocumentError(f"unexpected fields: {sorted(fields)}")
    if n < 2:
        raise docio.DocumentError(f"certificate needs n >= 2, got {n}")
    if list(support) != sorted(set(support)) or not support:
        raise docio.DocumentError("support must be strictly ascending")
    if support[-1] > n or support[0] < 0:
        raise docio.DocumentError("support outside {0..n}")
    checks = []
    for line in check_lines:
        name, sep, lhs = line.partition(" = ")
        if not sep or not name or " " in name:
            raise docio.DocumentError(f"bad check line: {line!r}")
        try:
            checks.append(CheckRecord(name, rat_from_str(lhs), True))
        except ValueError as exc:
            raise docio.DocumentError(f"bad check line: {line!r}") from exc
    values = [ZERO] * (n + 1)
    for i, v in p_values.items():
        values[i] = v
    q = parity_multiply(SinglePoly(n, tuple(values)))
    return OrCertificate(n=n, m=m, support=support, p_values=p_values, q=q,
                         phd=phd, norm=norm, ratio=ratio,
                         epsilon_certified=epsilon, degree_bound=degree_bound,
                         checks=tuple(checks))


def verify_document(text: str, eps: Fraction = EPSILON_CERTIFIED) -> list[str]:
    """Re-derive every claim of a certificate document from its P values.

    Returns the list of failure messages; empty means the certificate is
    accepted at target eps.  Malformed documents raise DocumentError
    instead: rejection means the mathematics failed, not the framing.
    """
    cert = parse_certificate_document(text)
    n = cert.n
    failures = []

    def demand(ok: bool, message: str) -> None:
        if not ok:
            failures.append(message)

    demand(cert.m == isqrt(n), f"m != isqrt(n): {cert.m} vs {isqrt(n)}")
    expected_support = squares_plus_two(n)
    demand(cert.support == expected_support,
           f"support mismatch: {cert.support} vs {expected_support}")
    p = cert.p_table()
    demand(p.values[0] == 1, f"P(0) != 1: {p.values[0]}")
    demand(all(cert.p_values.get(i) for i in cert.support),
           "zero value on the support")
    deg = interpolate_degree(p)
    demand(deg == n - cert.m - 1,
           f"degree != n-m-1: {deg} vs {n - cert.m - 1}")
    q = parity_multiply(p)
    if not q.is_zero():
        phd = pure_high_degree(q)
        demand(phd == cert.m + 1, f"pure high degree != m+1: {phd}")
        demand(phd == cert.phd, f"stated phd mismatch: {cert.phd} vs {phd}")
        demand(phd * phd > n, f"phd^2 <= n: {phd * phd} vs {n}")
    else:
        demand(False, "zero polynomial")
    for rec in check_point_bounds(n, p):
        demand(rec.ok, f"{rec.name} violated: lhs = {rec.lhs}")
    norm = _sparse_norm(p, cert.support)
    demand(norm == cert.norm, f"stated norm mismatch: {cert.norm} vs {norm}")
    demand(norm < NORM_BOUND, f"norm >= 27: {norm}")
    q_dot_or = inner_product(q, or_function(n).as_poly())
    demand(q_dot_or == 2, f"Q.OR != 2: {q_dot_or}")
    if q_dot_or:
        ratio = norm / q_dot_or
        demand(ratio == cert.ratio, f"stated ratio mismatch: {cert.ratio} vs {ratio}")
        demand(ratio < RATIO_BOUND, f"ratio >= 14: {ratio}")
    demand(cert.degree_bound == cert.m + 1,
           f"degree bound != m+1: {cert.degree_bound}")
    demand(cert.epsilon_certified == EPSILON_CERTIFIED,
           f"certified eps must be 1/14, got {cert.epsilon_certified}")
    try:
        expected_checks = make_certificate(n).checks
    except CertificateError as exc:
        expected_checks = ()
        demand(False, f"reconstruction failed: {exc}")
    if expected_checks:
        demand(cert.checks == expected_checks, "check list mismatch")
    if not q.is_zero():
        verdict = lp_degree.verify_certificate(or_function(n), q, eps,
                                               cert.degree_bound)
        demand(verdict.accepted,
               f"witness check rejected at eps = {eps} (ratio {verdict.ratio})")
    return failures
