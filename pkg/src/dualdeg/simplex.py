"""Exact two-phase simplex over rationals with Bland's anti-cycling rule.

Everything is a Fraction: pivots, ratio tests, and optimality checks are
exact comparisons, so termination follows from Bland's rule alone and the
reported optimum is the true rational optimum.  Both the primal and the dual
solution are extracted from the final tableau.

Dual sign conventions for the returned multipliers, per objective direction:

  minimize:  >=-rows have dual >= 0, <=-rows dual <= 0, =-rows free;
             sum_i dual_i * a_ij <= c_j for x_j >= 0 (equality for free x_j).
  maximize:  <=-rows have dual >= 0, >=-rows dual <= 0, =-rows free;
             sum_i dual_i * a_ij >= c_j for x_j >= 0 (equality for free x_j).

In both cases sum_i dual_i * rhs_i equals the optimal value.  For an
infeasible problem the dual slot carries a Farkas certificate instead:
multipliers with the minimize-form sign pattern, sum_i dual_i * a_ij <= 0
on nonnegative variables (= 0 on free ones) and sum_i dual_i * rhs_i > 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from dualdeg.rational import ONE, ZERO

LESS_EQ = "<="
EQUAL = "="
GREATER_EQ = ">="

_RELATIONS = (LESS_EQ, EQUAL, GREATER_EQ)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpRow:
    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction

    def __post_init__(self):
        if self.relation not in _RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "rhs", Fraction(self.rhs))


@dataclass(frozen=True)
class LpProblem:
    """direction 'min' or 'max'; nonneg[j] False marks variable j as free."""

    direction: str
    objective: tuple[Fraction, ...]
    rows: tuple[LpRow, ...]
    nonneg: tuple[bool, ...]

    def __post_init__(self):
        if self.direction not in ("min", "max"):
            raise ValueError(f"direction must be 'min' or 'max', got {self.direction!r}")
        object.__setattr__(self, "objective", tuple(Fraction(c) for c in self.objective))
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "nonneg", tuple(bool(b) for b in self.nonneg))
        nv = len(self.objective)
        if len(self.nonneg) != nv:
            raise ValueError("nonneg flags and objective length differ")
        for row in self.rows:
            if len(row.coeffs) != nv:
                raise ValueError("constraint row length differs from objective")


@dataclass(frozen=True)
class LpOutcome:
    status: str
    value: Fraction | None
    primal: tuple[Fraction, ...] | None
    dual: tuple[Fraction, ...] | None


def _pivot(tableau, cost_rows, basis, pr, pc):
    inv = tableau[pr][pc]
    prow = [v / inv for v in tableau[pr]]
    tableau[pr] = prow
    for i, row in enumerate(tableau):
        if i != pr and row[pc]:
            f = row[pc]
            tableau[i] = [a - f * b for a, b in zip(row, prow)]
    for r in cost_rows:
        if r[pc]:
            f = r[pc]
            r[:] = [a - f * b for a, b in zip(r, prow)]
    basis[pr] = pc


def _bland_run(tableau, cost_rows, basis, reduced, eligible, iteration_cap):
    """Pivot until `reduced` has no negative entry on eligible columns.

    Returns 'optimal' or 'unbounded'.  Entering: smallest eligible index with
    negative reduced cost; leaving: smallest ratio, ties broken by smallest
    basic variable index (Bland, exact comparisons).
    """
    m = len(tableau)
    for _ in range(iteration_cap):
        enter = next((j for j in eligible if reduced[j] < 0), None)
        if enter is None:
            return OPTIMAL
        leave = None
        best = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][-1] / a
                if (best is None or ratio < best
                        or (ratio == best and basis[i] < basis[leave])):
                    best = ratio
                    leave = i
        if leave is None:
            return UNBOUNDED
        _pivot(tableau, cost_rows, basis, leave, enter)
    raise RuntimeError("pivot cap exceeded; Bland's rule should terminate")


def exact_simplex(problem: LpProblem) -> LpOutcome:
    """Solve exactly; statuses are optimal / infeasible / unbounded."""
    nv = len(problem.objective)
    minimize = problem.direction == "min"
    cost = [c if minimize else -c for c in problem.objective]

    # Standard form: split free variables, one slack per inequality row.
    col_of_var: list[list[tuple[int, int]]] = []
    std_cost: list[Fraction] = []
    for j in range(nv):
        if problem.nonneg[j]:
            col_of_var.append([(len(std_cost), 1)])
            std_cost.append(cost[j])
        else:
            col_of_var.append([(len(std_cost), 1), (len(std_cost) + 1, -1)])
            std_cost.append(cost[j])
            std_cost.append(-cost[j])
    n_var_cols = len(std_cost)
    n_slack = sum(1 for row in problem.rows if row.relation != EQUAL)
    m = len(problem.rows)
    n_real = n_var_cols + n_slack
    width = n_real + m + 1  # + artificials + rhs

    tableau: list[list[Fraction]] = []
    row_sign: list[int] = []
    slack_at = 0
    for i, row in enumerate(problem.rows):
        line = [ZERO] * width
        for j, c in enumerate(row.coeffs):
            for col, sgn in col_of_var[j]:
                line[col] = sgn * c
        if row.relation != EQUAL:
            line[n_var_cols + slack_at] = ONE if row.relation == LESS_EQ else -ONE
            slack_at += 1
        line[-1] = row.rhs
        if line[-1] < 0:
            line = [-v for v in line]
            row_sign.append(-1)
        else:
            row_sign.append(1)
        line[n_real + i] = ONE
        tableau.append(line)

    basis = [n_real + i for i in range(m)]

    # Price out both cost rows against the all-artificial starting basis.
    phase1 = [ZERO] * n_real + [ONE] * m + [ZERO]
    phase2 = std_cost + [ZERO] * (width - n_var_cols)
    for i, b in enumerate(basis):
        if phase1[b]:
            f = phase1[b]
            phase1 = [a - f * t for a, t in zip(phase1, tableau[i])]
        if phase2[b]:
            f = phase2[b]
            phase2 = [a - f * t for a, t in zip(phase2, tableau[i])]

    cap = 2000 + 200 * width * (m + 1)
    status = _bland_run(tableau, [phase1, phase2], basis, phase1,
                        range(width - 1), cap)
    if status != OPTIMAL:
        raise AssertionError("phase 1 is bounded below by zero")
    if -phase1[-1] > 0:
        # Farkas witness from the phase-1 duals on the artificial columns.
        farkas = tuple(row_sign[i] * (ONE - phase1[n_real + i]) for i in range(m))
        return LpOutcome(INFEASIBLE, None, None, farkas)

    # Drive leftover artificials out of the basis where possible; rows that
    # offer no real pivot are redundant and stay frozen at zero.
    for i in range(m):
        if basis[i] >= n_real:
            pc = next((j for j in range(n_real) if tableau[i][j]), None)
            if pc is not None:
                _pivot(tableau, [phase1, phase2], basis, i, pc)

    status = _bland_run(tableau, [phase1, phase2], basis, phase2,
                        range(n_real), cap)
    if status == UNBOUNDED:
        return LpOutcome(UNBOUNDED, None, None, None)

    x_std = [ZERO] * n_real
    for i, b in enumerate(basis):
        if b < n_real:
            x_std[b] = tableau[i][-1]
    primal = tuple(
        sum((Fraction(sgn) * x_std[col] for col, sgn in col_of_var[j]), ZERO)
        for j in range(nv))
    value_min = -phase2[-1]
    lam = [row_sign[i] * -phase2[n_real + i] for i in range(m)]
    if minimize:
        return LpOutcome(OPTIMAL, value_min, primal, tuple(lam))
    return LpOutcome(OPTIMAL, -value_min, primal, tuple(-y for y in lam))
