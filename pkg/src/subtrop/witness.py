"""Symbolic positivity witnesses and their exact verification.

Once an integer vector n certifies the dominance condition of a system,
the point ``x = t^n`` (coordinate-wise powers) satisfies every inequality
for every positive choice of coefficients, where ``t`` is 1 plus the sum
of the ratios negative-coefficient / positive-coefficient over all
same-row sign pairs.  Any base ``r >= t`` works as well.  This module
builds that witness symbolically, evaluates it on concrete coefficients,
computes the cruder all-integer-coefficient bound ``1 + v * sum of
negative coefficients``, and checks ``f(r^n) > 0`` by exact evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .condition import build_cnf
from .core import (
    ConcreteCoefficients,
    ExponentSolution,
    SignedSystem,
    SubtropError,
    row_supports,
    zero_sign_rows,
)


class PreconditionViolated(SubtropError):
    """A caller-side precondition does not hold (bad r, uncertified n, ...)."""


class UncertifiedExponent(PreconditionViolated):
    """The supplied exponent vector fails some clause of the dominance condition."""


class UnboundCoefficient(SubtropError):
    """A coefficient name has no concrete value."""


class NonIntegerCoefficient(SubtropError):
    """The integer-coefficient bound was asked of a non-integer system."""


class NonPositivePoint(SubtropError):
    """Evaluation point has a coordinate <= 0."""


class WitnessFailure(SubtropError):
    """A verification that must succeed came out negative: an implementation defect."""


class SizeLimitExceeded(SubtropError):
    """Exact evaluation would exceed the configured bit-size guard."""


@dataclass(frozen=True)
class RatioTerm:
    """One summand ``numerator / denominator`` of t, tagged with its matrix position."""

    numerator: str
    denominator: str
    row: int
    pos: int
    neg: int


@dataclass(frozen=True)
class SymbolicWitness:
    """The witness ``x = t^n`` with ``t = 1 + sum of ratio terms``."""

    terms: tuple[RatioTerm, ...]
    n: ExponentSolution
    var_names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        object.__setattr__(self, "var_names", tuple(self.var_names))

    def to_json_dict(self) -> dict:
        return {
            "t": {"one": 1, "terms": [[t.numerator, t.denominator] for t in self.terms]},
            "n": list(self.n.n),
        }

    def to_display_text(self) -> str:
        parts = ["1"] + [f"{t.numerator}/{t.denominator}" for t in self.terms]
        z = ", ".join(f"t^{ni}" for ni in self.n.n)
        return f"t = {' + '.join(parts)}; z = ({z})"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exact check of ``f(r^n) > 0``."""

    t_value: Fraction
    r_value: Fraction
    point: tuple[Fraction, ...]
    values: tuple[Fraction, ...]
    ok: bool


def ratio_terms(system: SignedSystem) -> tuple[RatioTerm, ...]:
    """All (negative, positive) same-row coefficient ratios, row-major then (neg, pos).

    Concrete systems use the synthesized positional names ``c_<i+1>_<j+1>``.
    Name pairs are deduplicated, which is a no-op while names stay pairwise
    distinct.
    """
    out: list[RatioTerm] = []
    seen: set[tuple[str, str]] = set()
    for i in range(system.u):
        positive, negative = row_supports(system, i)
        for k in sorted(negative):
            for j in sorted(positive):
                pair = (system.coefficient_name(i, k), system.coefficient_name(i, j))
                if pair in seen:
                    continue
                seen.add(pair)
                out.append(RatioTerm(pair[0], pair[1], i, j, k))
    return tuple(out)


def symbolic_t(system: SignedSystem, n: ExponentSolution) -> SymbolicWitness:
    """Witness for a certified exponent vector; rejects vectors that fail a clause."""
    condition = build_cnf(system)
    if len(n.n) != system.d:
        raise UncertifiedExponent(f"expected {system.d} entries, got {len(n.n)}")
    if not condition.satisfied_by(n.n):
        raise UncertifiedExponent(f"{n.n} does not satisfy the dominance condition")
    return SymbolicWitness(ratio_terms(system), n, system.var_names)


def evaluate_t(witness: SymbolicWitness, coefficients: ConcreteCoefficients) -> Fraction:
    """Exact value of t; 1 when there are no terms, strictly above 1 otherwise."""
    total = Fraction(1)
    values = coefficients.values
    for term in witness.terms:
        if term.row >= len(values) or max(term.pos, term.neg) >= len(values[term.row]):
            raise UnboundCoefficient(
                f"no value for coefficient pair ({term.row}, {term.neg})/({term.row}, {term.pos})"
            )
        total += values[term.row][term.neg] / values[term.row][term.pos]
    return total


def instantiate(system: SignedSystem, bindings: Mapping[str, Fraction | int]) -> SignedSystem:
    """Replace parametric coefficient names by concrete positive values.

    Every name occurring in the system must be bound; extra bindings are
    ignored so one value file can serve several systems.
    """
    if not system.is_parametric:
        raise ValueError("system already has concrete coefficients")
    rows = []
    for name_row in system.c.names:
        row = []
        for name in name_row:
            if name is None:
                row.append(Fraction(1))
                continue
            if name not in bindings:
                raise UnboundCoefficient(f"no value bound for coefficient {name!r}")
            row.append(bindings[name])
        rows.append(tuple(row))
    return SignedSystem(system.s, system.e, ConcreteCoefficients(tuple(rows)), system.var_names)


def uniform_bound(system: SignedSystem) -> Fraction:
    """``1 + v * (sum of all negative-sign coefficients)`` for integer systems.

    Requires concrete integer coefficients >= 1 at every nonzero-sign
    position.  The sum runs over the negative entries of the whole matrix,
    so the result dominates the analogous bound of any single row and in
    particular dominates t.
    """
    if system.is_parametric:
        raise NonIntegerCoefficient("the bound needs concrete integer coefficients")
    total = Fraction(0)
    for i, sign_row in enumerate(system.s.entries):
        for j, sign in enumerate(sign_row):
            if sign == 0:
                continue
            value = system.c.values[i][j]
            if value.denominator != 1:
                raise NonIntegerCoefficient(f"coefficient ({i}, {j}) = {value} is not an integer")
            if sign < 0:
                total += value
    return Fraction(1) + system.v * total


def evaluate_system_at(system: SignedSystem, point) -> tuple[Fraction, ...]:
    """Exact values (f_1, ..., f_u) at a strictly positive rational point."""
    if system.is_parametric:
        raise ValueError("cannot evaluate a system with parametric coefficients")
    coords = []
    for x in point:
        if isinstance(x, float):
            raise TypeError(f"point coordinates must be exact rationals, got float {x!r}")
        coords.append(Fraction(x))
    if len(coords) != system.d:
        raise ValueError(f"expected {system.d} coordinates, got {len(coords)}")
    if any(x <= 0 for x in coords):
        raise NonPositivePoint(f"point {tuple(coords)} has a coordinate <= 0")
    monomials = [
        1 if all(e == 0 for e in exps) else _product(x**e for x, e in zip(coords, exps))
        for exps in system.e.entries
    ]
    values = []
    for i, sign_row in enumerate(system.s.entries):
        total = Fraction(0)
        for j, sign in enumerate(sign_row):
            if sign != 0:
                total += sign * system.c.values[i][j] * monomials[j]
        values.append(total)
    return tuple(values)


def _product(factors) -> Fraction:
    result = Fraction(1)
    for f in factors:
        result *= f
    return result


def _check_size_guard(system: SignedSystem, n: ExponentSolution, r: Fraction, max_bits: int):
    bits_r = max(r.numerator.bit_length(), r.denominator.bit_length())
    coord_bits = [bits_r * max(1, abs(ni)) for ni in n.n]
    if any(b > max_bits for b in coord_bits):
        raise SizeLimitExceeded(f"a coordinate of r^n would exceed {max_bits} bits")
    for exps in system.e.entries:
        if sum(e * b for e, b in zip(exps, coord_bits)) > max_bits:
            raise SizeLimitExceeded(f"a monomial value would exceed {max_bits} bits")


def verify_witness(
    system: SignedSystem,
    n: ExponentSolution,
    r,
    *,
    max_bits: int | None = None,
) -> VerificationReport:
    """Check ``f(r^n) > 0`` exactly for a concrete system, certified n, and r >= t.

    Under those preconditions success is guaranteed, so a negative outcome
    is raised as :class:`WitnessFailure` rather than returned.  Identically
    zero rows are rejected up front: no point can make them positive.
    """
    if system.is_parametric:
        raise PreconditionViolated("verification needs concrete coefficients")
    zeros = zero_sign_rows(system)
    if zeros:
        raise PreconditionViolated(f"row {zeros[0]} is identically zero; f > 0 cannot hold")
    if isinstance(r, float):
        raise TypeError(f"r must be an exact rational, got float {r!r}")
    r = Fraction(r)
    witness = symbolic_t(system, n)
    t_value = evaluate_t(witness, system.c)
    if r < t_value:
        raise PreconditionViolated(f"r = {r} is below t = {t_value}")
    if max_bits is not None:
        _check_size_guard(system, n, r, max_bits)
    point = tuple(r**ni for ni in n.n)
    values = evaluate_system_at(system, point)
    ok = all(value > 0 for value in values)
    if not ok:
        bad = next(i for i, value in enumerate(values) if value <= 0)
        raise WitnessFailure(f"row {bad} evaluates to {values[bad]} at r = {r}, n = {n.n}")
    return VerificationReport(t_value, r, point, values, True)
