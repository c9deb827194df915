"""Reduction of a signed system to a linear condition on integer exponent vectors.

A row ``f_i > 0`` holds for every positive choice of coefficients at some
point of the form ``x = t^n`` exactly when, for each negatively signed
monomial k of the row, some positively signed monomial j dominates it:
``(e_j - e_k) . n >= 1``.  Collecting these alternatives gives a CNF over
the unknown integer vector n with one clause per (row, negative monomial)
pair.  For a single inequality the same condition flattens into a
disjunction of small conjunctions, one per positive monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import SignedSystem, SubtropError, row_supports


class MultiRowError(SubtropError):
    """Raised when a single-inequality operation receives a multi-row system."""


@dataclass(frozen=True)
class LinearLiteral:
    """One dominance constraint ``coeffs . n >= 1`` with ``coeffs = e[pos] - e[neg]``."""

    coeffs: tuple[int, ...]
    row: int
    pos: int
    neg: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    def value_at(self, n) -> Fraction | int:
        if len(n) != len(self.coeffs):
            raise ValueError(f"expected a vector of length {len(self.coeffs)}, got {len(n)}")
        return sum(a * x for a, x in zip(self.coeffs, n))

    def satisfied_by(self, n) -> bool:
        return self.value_at(n) >= 1


@dataclass(frozen=True)
class Clause:
    """Alternatives for dominating negative monomial ``neg`` of row ``row``."""

    row: int
    neg: int
    literals: tuple[LinearLiteral, ...]

    def __post_init__(self):
        object.__setattr__(self, "literals", tuple(self.literals))

    def satisfied_by(self, n) -> bool:
        return any(lit.satisfied_by(n) for lit in self.literals)


@dataclass(frozen=True)
class LinearCondition:
    """CNF of dominance constraints; clauses ordered by (row, neg), literals by pos."""

    num_vars: int
    clauses: tuple[Clause, ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(self.clauses))

    def satisfied_by(self, n) -> bool:
        """True when every clause has at least one literal with value >= 1 at ``n``."""
        return all(clause.satisfied_by(n) for clause in self.clauses)

    def to_debug_text(self) -> str:
        """One line per clause: ``clause <row> <neg>: [<pos>: c1 c2 ...] ...``."""
        lines = []
        for clause in self.clauses:
            body = " ".join(
                "[{}: {}]".format(lit.pos, " ".join(str(c) for c in lit.coeffs))
                for lit in clause.literals
            )
            lines.append(f"clause {clause.row} {clause.neg}: {body}".rstrip())
        return "\n".join(lines)


@dataclass(frozen=True)
class DnfBranch:
    """Constraints forcing positive monomial ``pivot`` to dominate every negative one."""

    pivot: int
    constraints: tuple[LinearLiteral, ...]

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))


def _difference(system: SignedSystem, j: int, k: int) -> tuple[int, ...]:
    ej, ek = system.e.row(j), system.e.row(k)
    return tuple(a - b for a, b in zip(ej, ek))


def build_cnf(system: SignedSystem) -> LinearCondition:
    """CNF over n: for every row i and negative monomial k, some positive j dominates k.

    Rows without negative monomials contribute no clauses; a row with
    negative monomials but no positive ones contributes an empty
    (unsatisfiable) clause.  The result depends only on the sign and
    exponent matrices, never on coefficient values.
    """
    clauses = []
    for i in range(system.u):
        positive, negative = row_supports(system, i)
        for k in sorted(negative):
            literals = tuple(
                LinearLiteral(_difference(system, j, k), i, j, k) for j in sorted(positive)
            )
            clauses.append(Clause(i, k, literals))
    return LinearCondition(system.d, tuple(clauses))


def build_dnf_single(system: SignedSystem) -> tuple[DnfBranch, ...]:
    """Branch decomposition for a one-row system: one branch per positive monomial.

    Branch j collects ``(e_j - e_k) . n >= 1`` for every negative monomial k;
    the branch is a plain conjunction, so each one is a standalone linear
    feasibility problem.  Some branch is feasible iff :func:`build_cnf` of the
    same system is satisfiable, provided the row is not identically zero.
    """
    if system.u != 1:
        raise MultiRowError(f"expected a single inequality, got {system.u} rows")
    positive, negative = row_supports(system, 0)
    branches = []
    for j in sorted(positive):
        constraints = tuple(
            LinearLiteral(_difference(system, j, k), 0, j, k) for k in sorted(negative)
        )
        branches.append(DnfBranch(j, constraints))
    return tuple(branches)
