"""Epsilon-approximate degree of symmetric functions via exact LPs.

The best uniform approximation of a weight table F by a polynomial of degree
at most d is a small exact LP over Newton coefficients (integral constraint
matrix).  Its dual optimum is a witness polynomial whose vanishing moments
give pure high degree d+1 and whose norm-to-correlation ratio certifies a
degree lower bound; both directions are solved and cross-checked here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from dualdeg import docio
from dualdeg.rational import ONE, ZERO, binomial, rat_from_str, rat_to_str
from dualdeg.simplex import EQUAL, LESS_EQ, LpProblem, LpRow, exact_simplex
from dualdeg.sympoly import (
    SinglePoly,
    SymBoolFn,
    from_newton_coefficients,
    inner_product,
    l1_norm,
    moments_vanish,
    pure_high_degree,
)

WITNESS_FORMAT = "dual-witness/1"


@dataclass(frozen=True)
class DualWitness:
    """Witness B with vanishing moments below claimed_phd and B.F > 0.

    `eps` is the certification threshold: the witness proves that every
    approximation by polynomials of degree < claimed_phd errs by at least
    eps somewhere, i.e. it certifies any target epsilon strictly below eps.
    """

    b: SinglePoly
    claimed_phd: int
    eps: Fraction
    ratio: Fraction


class WitnessCheck(NamedTuple):
    accepted: bool
    ratio: Fraction | None
    phd: int


def approximation_problem(func: SymBoolFn, d: int) -> LpProblem:
    """Primal LP: minimize eps subject to |P(k) - F(k)| <= eps on 0..n.

    Variables are the d+1 Newton coefficients of P (free) plus eps (free);
    rows come in two families of n+1, the "+" family P(k) - eps <= F(k)
    first, then the "-" family -P(k) - eps <= -F(k).
    """
    n = func.n
    rows = []
    for sign in (1, -1):
        for k in range(n + 1):
            coeffs = [Fraction(sign * binomial(k, j)) for j in range(d + 1)]
            coeffs.append(Fraction(-1))
            rows.append(LpRow(tuple(coeffs), LESS_EQ, Fraction(sign * func.values[k])))
    objective = tuple([ZERO] * (d + 1) + [ONE])
    return LpProblem("min", objective, tuple(rows), (False,) * (d + 2))


def dual_bound_problem(func: SymBoolFn, d: int) -> LpProblem:
    """Mirror LP: maximize the correlation of a unit-norm witness.

    Variables are the positive/negative parts u_k, v_k of the weighted
    witness table; constraints kill its moments through degree d and fix
    u + v to total mass one.
    """
    n = func.n
    objective = tuple([Fraction(-f) for f in func.values]
                      + [Fraction(f) for f in func.values])
    rows = []
    for j in range(d + 1):
        line = [Fraction(binomial(k, j)) for k in range(n + 1)]
        rows.append(LpRow(tuple(line + [-c for c in line]), EQUAL, ZERO))
    rows.append(LpRow((ONE,) * (2 * (n + 1)), EQUAL, ONE))
    return LpProblem("max", objective, tuple(rows), (True,) * (2 * (n + 1)))


def _witness_from_weights(func: SymBoolFn, d: int, eps_star: Fraction,
                          weights: list[Fraction]) -> DualWitness:
    """Build and sanity-check B(k) = w_k / C(n,k) from dual weights."""
    n = func.n
    b = SinglePoly(n, tuple(w / binomial(n, k) for k, w in enumerate(weights)))
    norm = l1_norm(b)
    corr = inner_product(b, func.as_poly())
    if norm != ONE or corr != eps_star or not moments_vanish(b, d + 1):
        raise RuntimeError("extracted witness fails its exact invariants")
    return DualWitness(b, d + 1, eps_star, norm / corr)


def min_eps_for_degree(func: SymBoolFn, d: int
                       ) -> tuple[Fraction, SinglePoly, DualWitness | None]:
    """Least uniform error of a degree-<=d approximant, with both optimizers.

    Returns (eps_star, best approximant, witness).  The witness comes from
    the exact dual solution of the same solve: it has unit norm, correlation
    exactly eps_star, and pure high degree at least d+1.  When eps_star is 0
    no direction is certified and the witness slot is None.
    """
    n = func.n
    if not 0 <= d <= n:
        raise ValueError(f"degree out of range: d={d}, n={n}")
    outcome = exact_simplex(approximation_problem(func, d))
    if outcome.status != "optimal":
        raise RuntimeError(f"approximation LP is {outcome.status}, expected optimal")
    eps_star = outcome.value
    approximant = from_newton_coefficients(n, outcome.primal[: d + 1])
    if eps_star == 0:
        return eps_star, approximant, None
    lam_plus = outcome.dual[: n + 1]
    lam_minus = outcome.dual[n + 1:]
    weights = [lp - lm for lp, lm in zip(lam_plus, lam_minus)]
    return eps_star, approximant, _witness_from_weights(func, d, eps_star, weights)


def solve_dual_bound(func: SymBoolFn, d: int
                     ) -> tuple[Fraction, DualWitness | None]:
    """Solve the mirror LP directly; used to cross-check strong duality."""
    n = func.n
    if not 0 <= d <= n:
        raise ValueError(f"degree out of range: d={d}, n={n}")
    outcome = exact_simplex(dual_bound_problem(func, d))
    if outcome.status != "optimal":
        raise RuntimeError(f"witness LP is {outcome.status}, expected optimal")
    if outcome.value == 0:
        return outcome.value, None
    u = outcome.primal[: n + 1]
    v = outcome.primal[n + 1:]
    weights = [vi - ui for ui, vi in zip(u, v)]
    return outcome.value, _witness_from_weights(func, d, outcome.value, weights)


def approx_degree(func: SymBoolFn, eps: Fraction) -> int:
    """Smallest degree whose best approximant gets within eps everywhere."""
    eps = Fraction(eps)
    if not 0 <= eps < 1:
        raise ValueError(f"eps must lie in [0, 1), got {eps}")
    for d in range(func.n + 1):
        eps_star, _, _ = min_eps_for_degree(func, d)
        if eps_star <= eps:
            return d
    raise AssertionError("interpolation at d = n always achieves eps = 0")


def verify_certificate(func: SymBoolFn, b: SinglePoly, eps: Fraction,
                       d: int) -> WitnessCheck:
    """Accept iff phd(B) >= d, B.F > 0 and norm/correlation < 1/eps.

    Acceptance proves that the eps-approximate degree of F is at least d.
    The exact ratio is reported whenever the correlation is nonzero.
    """
    eps = Fraction(eps)
    if b.is_zero():
        raise ValueError("the zero polynomial certifies nothing")
    if not 0 < eps < 1:
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    if func.n != b.n:
        raise ValueError(f"mismatched dimensions: {func.n} vs {b.n}")
    phd = pure_high_degree(b)
    corr = inner_product(b, func.as_poly())
    norm = l1_norm(b)
    ratio = norm / corr if corr else None
    accepted = phd >= d and corr > 0 and norm * eps < corr
    return WitnessCheck(accepted, ratio, phd)


def witness_document(func: SymBoolFn, witness: DualWitness,
                     target_eps: Fraction, check: WitnessCheck) -> str:
    pairs = [
        ("format", WITNESS_FORMAT),
        ("n", str(func.n)),
        ("function", " ".join(str(v) for v in func.values)),
        ("d", str(witness.claimed_phd)),
        ("eps", rat_to_str(Fraction(target_eps))),
    ]
    pairs += [(f"B[{k}]", rat_to_str(v)) for k, v in enumerate(witness.b.values)]
    pairs.append(("ratio", rat_to_str(witness.ratio)))
    pairs.append(("verdict", "accepted" if check.accepted else "rejected"))
    return docio.emit_document(pairs)


def parse_witness_document(text: str) -> dict:
    pairs = docio.parse_document(text)
    fields = dict(pairs)
    if len(fields) != len(pairs):
        raise docio.DocumentError("duplicate field")
    if docio.take_field(fields, "format") != WITNESS_FORMAT:
        raise docio.DocumentError("not a dual-witness document")
    try:
        n = int(docio.take_field(fields, "n"))
        func = SymBoolFn(n, tuple(int(v) for v in
                                  docio.take_field(fields, "function").split()))
        d = int(docio.take_field(fields, "d"))
        eps = rat_from_str(docio.take_field(fields, "eps"))
        b = SinglePoly(n, tuple(rat_from_str(docio.take_field(fields, f"B[{k}]"))
                                for k in range(n + 1)))
        ratio = rat_from_str(docio.take_field(fields, "ratio"))
        verdict = docio.take_field(fields, "verdict")
    except (ValueError, docio.DocumentError) as exc:
        raise docio.DocumentError(f"bad witness document: {exc}") from exc
    if verdict not in ("accepted", "rejected"):
        raise docio.DocumentError(f"unknown verdict {verdict!r}")
    if fields:
        raise docio.DocumentError(f"unexpected fields: {sorted(fields)}")
    return {"function": func, "d": d, "eps": eps, "b": b,
            "ratio": ratio, "verdict": verdict}
