"""Two-phase primal simplex over exact rationals with Bland's rule.

Small dense tableaus only; every entry is a fractions.Fraction, so results
are exact and deterministic.  Dual values are recovered from the final
reduced costs on each row's seed column (its slack or artificial), which
makes optimal dual solutions available to certificate extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

LE, GE, EQ = "<=", ">=", "=="


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    rel: str
    rhs: Fraction


@dataclass(frozen=True)
class LinearProgram:
    """maximize (or minimize) c.x subject to constraints, x >= 0."""

    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...]
    maximize: bool = True


@dataclass
class SimplexResult:
    status: str  # "optimal" | "unbounded" | "infeasible"
    objective: Fraction | None = None
    x: tuple[Fraction, ...] | None = None
    duals: tuple[Fraction, ...] | None = None
    ray: tuple[Fraction, ...] | None = None  # certifies unboundedness


def make_lp(objective, rows, maximize=True) -> LinearProgram:
    """rows: iterable of (coeffs, rel, rhs); everything coerced to Fraction."""
    cons = tuple(
        Constraint(tuple(Fraction(c) for c in coeffs), rel, Fraction(rhs))
        for coeffs, rel, rhs in rows
    )
    return LinearProgram(
        objective=tuple(Fraction(c) for c in objective),
        constraints=cons,
        maximize=maximize,
    )


class _Tableau:
    def __init__(self, lp: LinearProgram):
        self.nvars = len(lp.objective)
        m = len(lp.constraints)
        for con in lp.constraints:
            if len(con.coeffs) != self.nvars:
                raise ValueError("constraint arity mismatch")
        self.flip = []  # row sign flips applied to reach rhs >= 0
        rows = []
        rels = []
        for con in lp.constraints:
            coeffs, rel, rhs = list(con.coeffs), con.rel, con.rhs
            if rhs < 0:
                coeffs = [-c for c in coeffs]
                rhs = -rhs
                rel = {LE: GE, GE: LE, EQ: EQ}[rel]
                self.flip.append(-1)
            else:
                self.flip.append(1)
            rows.append((coeffs, rhs))
            rels.append(rel)

        # column layout: structural | slack/surplus | artificial
        self.ncols = self.nvars
        self.seed_col = [None] * m  # +e_i column used for dual readout
        self.artificial = set()
        extra_cols = []  # (row, value) single-entry columns
        for i, rel in enumerate(rels):
            if rel == LE:
                extra_cols.append((i, Fraction(1)))
                self.seed_col[i] = self.ncols
                self.ncols += 1
            elif rel == GE:
                extra_cols.append((i, Fraction(-1)))
                self.ncols += 1
        for i, rel in enumerate(rels):
            if rel in (GE, EQ):
                extra_cols.append((i, Fraction(1)))
                self.artificial.add(self.ncols)
                self.seed_col[i] = self.ncols
                self.ncols += 1

        self.T = [
            [Fraction(0)] * self.ncols + [rows[i][1]] for i in range(m)
        ]
        for i in range(m):
            for j in range(self.nvars):
                self.T[i][j] = rows[i][0][j]
        col = self.nvars
        for i, val in extra_cols:
            self.T[i][col] = val
            col += 1
        self.basis = [self.seed_col[i] for i in range(m)]
        self.m = m
        self.active = [True] * m

    def pivot(self, row: int, col: int) -> None:
        T = self.T
        piv = T[row][col]
        T[row] = [v / piv for v in T[row]]
        for i in range(self.m):
            if i != row and T[i][col] != 0:
                factor = T[i][col]
                T[i] = [a - factor * b for a, b in zip(T[i], T[row])]
        self.basis[row] = col

    def reduced_costs(self, c: list[Fraction]) -> list[Fraction]:
        """r_j = c_j - c_B . T[:, j] for the current basis."""
        cb = [c[self.basis[i]] if self.active[i] else Fraction(0) for i in range(self.m)]
        out = []
        for j in range(self.ncols):
            z = sum(cb[i] * self.T[i][j] for i in range(self.m) if self.active[i])
            out.append(c[j] - z)
        return out

    def run(self, c: list[Fraction], forbid: set[int]):
        """Maximize c.x from the current basis; Bland's rule; returns
        ("optimal", None) or ("unbounded", entering_col)."""
        while True:
            r = self.reduced_costs(c)
            enter = None
            for j in range(self.ncols):
                if j in forbid or j in self.basis:
                    continue
                if r[j] > 0:
                    enter = j
                    break
            if enter is None:
                return "optimal", None
            leave_row = None
            best_ratio = None
            for i in range(self.m):
                if not self.active[i]:
                    continue
                t = self.T[i][enter]
                if t > 0:
                    ratio = self.T[i][-1] / t
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and self.basis[i] < self.basis[leave_row])
                    ):
                        best_ratio = ratio
                        leave_row = i
            if leave_row is None:
                return "unbounded", enter
            self.pivot(leave_row, enter)

    def objective_value(self, c: list[Fraction]) -> Fraction:
        return sum(
            c[self.basis[i]] * self.T[i][-1] for i in range(self.m) if self.active[i]
        )

    def solution(self) -> list[Fraction]:
        x = [Fraction(0)] * self.nvars
        for i in range(self.m):
            if self.active[i] and self.basis[i] < self.nvars:
                x[self.basis[i]] = self.T[i][-1]
        return x


def simplex_solve(lp: LinearProgram) -> SimplexResult:
    sign = 1 if lp.maximize else -1
    c_struct = [sign * c for c in lp.objective]
    tab = _Tableau(lp)

    # phase 1: maximize minus the artificial sum
    if tab.artificial:
        c1 = [Fraction(0)] * tab.ncols
        for j in tab.artificial:
            c1[j] = Fraction(-1)
        status, _ = tab.run(c1, forbid=set())
        assert status == "optimal"  # phase 1 is always bounded
        if tab.objective_value(c1) != 0:
            return SimplexResult(status="infeasible")
        # drive artificials out of the basis (all sit at value zero here)
        for i in range(tab.m):
            if tab.basis[i] in tab.artificial:
                pivot_col = next(
                    (
                        j
                        for j in range(tab.ncols)
                        if j not in tab.artificial and tab.T[i][j] != 0
                    ),
                    None,
                )
                if pivot_col is None:
                    tab.active[i] = False  # redundant constraint
                else:
                    tab.pivot(i, pivot_col)

    c2 = c_struct + [Fraction(0)] * (tab.ncols - tab.nvars)
    status, enter = tab.run(c2, forbid=tab.artificial)
    if status == "unbounded":
        ray = [Fraction(0)] * tab.nvars
        if enter < tab.nvars:
            ray[enter] = Fraction(1)
        for i in range(tab.m):
            if tab.active[i] and tab.basis[i] < tab.nvars:
                ray[tab.basis[i]] = -tab.T[i][enter]
        return SimplexResult(status="unbounded", ray=tuple(ray))

    x = tab.solution()
    value = sum(ci * xi for ci, xi in zip(c_struct, x))
    r = tab.reduced_costs(c2)
    duals = []
    for i in range(tab.m):
        if not tab.active[i]:
            duals.append(Fraction(0))
            continue
        y_internal = -r[tab.seed_col[i]]  # seed column is +e_i, cost zero
        duals.append(sign * tab.flip[i] * y_internal)
    return SimplexResult(
        status="optimal",
        objective=sign * value,
        x=tuple(x),
        duals=tuple(duals),
    )
