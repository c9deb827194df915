"""Exact rational satisfiability for the linear dominance condition.

Conjunctions of ``coeffs . n >= 1`` rows are decided by Fourier-Motzkin
elimination over :class:`fractions.Fraction`, with a model recovered by
back-substitution.  The CNF is decided by chronological depth-first
selection of one literal per clause, pruning any partial selection whose
conjunction is already infeasible.  Everything is deterministic: clauses
and literals are visited in stored order and the first model found is
returned.

Feasibility over the rationals and over the reals coincide for these
conditions, so a rational "no" is a real "no".  Integer solutions come
from clearing denominators, never from integer programming: multiplying a
model by any positive integer preserves every ``coeffs . n >= delta >= 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .condition import LinearCondition
from .core import ExponentSolution, SubtropError


class SolverDefect(SubtropError):
    """Internal soundness check failed; indicates a bug, never a valid outcome."""


@dataclass(frozen=True)
class RationalModel:
    """Exact rational assignment satisfying the condition it was solved from."""

    n: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(Fraction(x) for x in self.n))


@dataclass(frozen=True)
class ConjunctionSystem:
    """Plain conjunction of integer rows, each meaning ``coeffs . n >= 1``."""

    num_vars: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        for row in rows:
            if len(row) != self.num_vars:
                raise ValueError(f"row {row} has {len(row)} entries, expected {self.num_vars}")


# Internal rows are (integer coefficient tuple, rational bound): coeffs . n >= bound.
_Row = tuple[tuple[int, ...], Fraction]


def _normalized(rows) -> list[_Row] | None:
    """Scale rows to primitive integer coefficients, deduplicate, detect contradictions.

    Returns None when some row degenerates to ``0 >= bound`` with a positive
    bound.  Among rows with identical coefficient vectors only the largest
    bound is kept; rows that hold trivially are dropped.
    """
    best: dict[tuple[int, ...], Fraction] = {}
    for coeffs, bound in rows:
        if all(a == 0 for a in coeffs):
            if bound > 0:
                return None
            continue
        scale = Fraction(math.lcm(*(Fraction(a).denominator for a in coeffs)))
        ints = [int(a * scale) for a in coeffs]
        g = math.gcd(*(abs(x) for x in ints))
        key = tuple(x // g for x in ints)
        scaled_bound = bound * scale / g
        if key not in best or scaled_bound > best[key]:
            best[key] = scaled_bound
    return [(key, bound) for key, bound in best.items()]


def _eliminate(rows: list[_Row], var: int) -> list[_Row]:
    """Project away variable ``var`` by combining every lower/upper bound pair."""
    lower = [r for r in rows if r[0][var] > 0]
    upper = [r for r in rows if r[0][var] < 0]
    out = [r for r in rows if r[0][var] == 0]
    for lc, lb in lower:
        p = lc[var]
        for uc, ub in upper:
            q = -uc[var]
            out.append((tuple(q * a + p * b for a, b in zip(lc, uc)), q * lb + p * ub))
    return out


def _solve_rows(num_vars: int, coeff_rows) -> RationalModel | None:
    rows = [(tuple(int(a) for a in coeffs), Fraction(1)) for coeffs in coeff_rows]
    stages: list[list[_Row] | None] = [None] * (num_vars + 1)
    current = _normalized(rows)
    if current is None:
        return None
    stages[num_vars] = current
    for var in range(num_vars - 1, -1, -1):
        current = _normalized(_eliminate(current, var))
        if current is None:
            return None
        stages[var] = current
    values: list[Fraction] = []
    for var in range(num_vars):
        lower = upper = None
        for coeffs, bound in stages[var + 1]:
            a = coeffs[var]
            if a == 0:
                continue
            rest = bound - sum(c * x for c, x in zip(coeffs[:var], values))
            ratio = rest / a
            if a > 0:
                lower = ratio if lower is None else max(lower, ratio)
            else:
                upper = ratio if upper is None else min(upper, ratio)
        if lower is not None and upper is not None:
            if lower > upper:
                raise SolverDefect("back-substitution produced an empty interval")
            values.append((lower + upper) / 2)
        elif lower is not None:
            values.append(lower + 1)
        elif upper is not None:
            values.append(upper - 1)
        else:
            values.append(Fraction(0))
    return RationalModel(tuple(values))


def solve_conjunction(system: ConjunctionSystem) -> RationalModel | None:
    """Exact rational point satisfying every row, or None when infeasible.

    Variables are eliminated in reverse index order; back-substitution then
    assigns each variable the midpoint of its derived interval, lower + 1
    or upper - 1 when one side is unbounded, and 0 when both are.
    """
    model = _solve_rows(system.num_vars, system.rows)
    if model is not None:
        for coeffs in system.rows:
            if sum(a * x for a, x in zip(coeffs, model.n)) < 1:
                raise SolverDefect(f"model {model.n} fails row {coeffs}")
    return model


def solve_cnf(condition: LinearCondition) -> RationalModel | None:
    """First model of the CNF under depth-first literal selection, or None.

    The Sat/Unsat answer does not depend on clause or literal order; the
    model itself does, but identical inputs always give identical models.
    """
    if any(not clause.literals for clause in condition.clauses):
        return None
    num_vars = condition.num_vars
    chosen: list[tuple[int, ...]] = []

    def dfs(index: int) -> RationalModel | None:
        if index == len(condition.clauses):
            return _solve_rows(num_vars, chosen)
        for literal in condition.clauses[index].literals:
            chosen.append(literal.coeffs)
            if _solve_rows(num_vars, chosen) is not None:
                found = dfs(index + 1)
                if found is not None:
                    return found
            chosen.pop()
        return None

    model = dfs(0)
    if model is not None and not condition.satisfied_by(model.n):
        raise SolverDefect("search returned a model that fails direct substitution")
    return model


def scale_to_integer(model: RationalModel) -> ExponentSolution:
    """Clear denominators: multiply by the least common multiple of all of them.

    Every row value scales by the same positive integer, so
    ``coeffs . n >= 1`` becomes ``coeffs . (delta n) >= delta >= 1``.
    """
    delta = math.lcm(*(x.denominator for x in model.n)) if model.n else 1
    return ExponentSolution(tuple(int(x * delta) for x in model.n))


def shrink_model(condition: LinearCondition, solution: ExponentSolution) -> ExponentSolution:
    """Greedily step each coordinate toward 0 while the condition stays satisfied.

    Purely cosmetic: any certified vector is valid, smaller entries are just
    easier to read.  The input must already satisfy the condition.
    """
    n = list(solution.n)
    if not condition.satisfied_by(n):
        raise ValueError("cannot shrink a vector that does not satisfy the condition")
    changed = True
    while changed:
        changed = False
        for idx in range(len(n)):
            while n[idx] != 0:
                step = -1 if n[idx] > 0 else 1
                n[idx] += step
                if condition.satisfied_by(n):
                    changed = True
                else:
                    n[idx] -= step
                    break
    return ExponentSolution(tuple(n))
