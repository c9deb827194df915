"""Value types shared by every stage of the positivity pipeline.

A system of polynomial inequalities ``f_i(x) > 0`` is stored in factored
form: a sign matrix with one row per inequality and one column per
monomial, a coefficient matrix of the same shape, and an exponent matrix
whose row j is the exponent vector of monomial j over the d variables.
Coefficients are either pairwise-distinct indeterminate names (the system
is a template quantified over all positive coefficient values) or concrete
positive rationals.

All numeric work uses :class:`fractions.Fraction`; nothing in this package
touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction
"""Exact arbitrary-precision rational scalar used throughout the package."""


class SubtropError(Exception):
    """Base class for all errors raised by this package."""


def _frozen_rows(entries) -> tuple[tuple, ...]:
    return tuple(tuple(row) for row in entries)


def _require_int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"{what} must be an int, got {x!r}")
    return x


@dataclass(frozen=True)
class ExponentMatrix:
    """v x d matrix of nonnegative integers; row j is the exponent vector of monomial j.

    ``cols`` may be omitted when there is at least one row.  No two rows may
    be equal: each monomial appears exactly once.
    """

    entries: tuple[tuple[int, ...], ...]
    cols: int = -1

    def __post_init__(self):
        entries = _frozen_rows(self.entries)
        object.__setattr__(self, "entries", entries)
        cols = self.cols
        if cols < 0:
            if not entries:
                raise ValueError("cols is required for an exponent matrix with no rows")
            cols = len(entries[0])
        object.__setattr__(self, "cols", cols)
        seen = set()
        for row in entries:
            if len(row) != cols:
                raise ValueError(f"exponent row {row} has {len(row)} entries, expected {cols}")
            for x in row:
                if _require_int(x, "exponent") < 0:
                    raise ValueError(f"negative exponent {x} in row {row}")
            if row in seen:
                raise ValueError(f"duplicate monomial row {row}")
            seen.add(row)

    @property
    def rows(self) -> int:
        return len(self.entries)

    def row(self, j: int) -> tuple[int, ...]:
        return self.entries[j]


@dataclass(frozen=True)
class SignMatrix:
    """u x v matrix over {-1, 0, 1}; entry (i, j) is the sign of monomial j in row i."""

    entries: tuple[tuple[int, ...], ...]
    cols: int = -1

    def __post_init__(self):
        entries = _frozen_rows(self.entries)
        object.__setattr__(self, "entries", entries)
        cols = self.cols
        if cols < 0:
            if not entries:
                raise ValueError("cols is required for a sign matrix with no rows")
            cols = len(entries[0])
        object.__setattr__(self, "cols", cols)
        for row in entries:
            if len(row) != cols:
                raise ValueError(f"sign row {row} has {len(row)} entries, expected {cols}")
            for x in row:
                if _require_int(x, "sign") not in (-1, 0, 1):
                    raise ValueError(f"sign entries must be -1, 0 or 1, got {x}")

    @property
    def rows(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class ParametricCoefficients:
    """Coefficient matrix of pairwise-distinct indeterminate names.

    ``None`` marks positions whose sign is zero (no coefficient exists there).
    """

    names: tuple[tuple[str | None, ...], ...]

    def __post_init__(self):
        names = _frozen_rows(self.names)
        object.__setattr__(self, "names", names)
        seen: set[str] = set()
        for row in names:
            for name in row:
                if name is None:
                    continue
                if not isinstance(name, str) or not name:
                    raise TypeError(f"coefficient name must be a nonempty string, got {name!r}")
                if name in seen:
                    raise ValueError(f"duplicate coefficient name {name!r}")
                seen.add(name)


def _as_positive_fraction(x, what: str) -> Fraction:
    if isinstance(x, float):
        raise TypeError(f"{what} must not be a float (exact rationals only): {x!r}")
    value = Fraction(x)
    if value <= 0:
        raise ValueError(f"{what} must be strictly positive, got {value}")
    return value


@dataclass(frozen=True)
class ConcreteCoefficients:
    """Coefficient matrix of positive rationals; 1 is the placeholder at zero-sign positions."""

    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(
            tuple(_as_positive_fraction(x, "coefficient") for x in row) for row in self.values
        )
        object.__setattr__(self, "values", rows)


CoefficientSpec = ParametricCoefficients | ConcreteCoefficients

_ONE = Fraction(1)


@dataclass(frozen=True)
class SignedSystem:
    """A polynomial system in factored sign/coefficient/exponent form.

    Shapes: ``s`` is u x v, ``c`` matches ``s``, ``e`` is v x d with
    ``d == len(var_names)``.  Parametric systems carry a name exactly at
    every nonzero-sign position; concrete systems carry the placeholder 1
    at every zero-sign position.
    """

    s: SignMatrix
    e: ExponentMatrix
    c: CoefficientSpec
    var_names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "var_names", tuple(self.var_names))
        if not self.var_names:
            raise ValueError("a system needs at least one variable")
        if len(set(self.var_names)) != len(self.var_names):
            raise ValueError("variable names must be distinct")
        if self.s.cols != self.e.rows:
            raise ValueError(
                f"sign matrix has {self.s.cols} columns but exponent matrix has {self.e.rows} rows"
            )
        if self.e.cols != len(self.var_names):
            raise ValueError(
                f"exponent matrix has {self.e.cols} columns for {len(self.var_names)} variables"
            )
        grid = self.c.names if isinstance(self.c, ParametricCoefficients) else self.c.values
        if len(grid) != self.s.rows or any(len(row) != self.s.cols for row in grid):
            raise ValueError("coefficient matrix shape does not match the sign matrix")
        for i, sign_row in enumerate(self.s.entries):
            for j, sign in enumerate(sign_row):
                if isinstance(self.c, ParametricCoefficients):
                    present = self.c.names[i][j] is not None
                    if present != (sign != 0):
                        raise ValueError(
                            f"coefficient name at ({i}, {j}) must be present iff the sign is nonzero"
                        )
                elif sign == 0 and self.c.values[i][j] != _ONE:
                    raise ValueError(
                        f"zero-sign position ({i}, {j}) must hold the placeholder 1, "
                        f"got {self.c.values[i][j]}"
                    )

    @property
    def u(self) -> int:
        return self.s.rows

    @property
    def v(self) -> int:
        return self.s.cols

    @property
    def d(self) -> int:
        return len(self.var_names)

    @property
    def is_parametric(self) -> bool:
        return isinstance(self.c, ParametricCoefficients)

    def sign(self, i: int, j: int) -> int:
        return self.s.entries[i][j]

    def coefficient_name(self, i: int, j: int) -> str:
        """Name of coefficient (i, j); concrete systems get positional names c_<i+1>_<j+1>."""
        if isinstance(self.c, ParametricCoefficients):
            name = self.c.names[i][j]
            if name is None:
                raise ValueError(f"no coefficient exists at zero-sign position ({i}, {j})")
            return name
        return f"c_{i + 1}_{j + 1}"


@dataclass(frozen=True)
class ExponentSolution:
    """Integer exponent vector certifying the linear dominance condition of a system."""

    n: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.n)
        for x in values:
            _require_int(x, "exponent solution entry")
        object.__setattr__(self, "n", values)


def row_supports(system: SignedSystem, i: int) -> tuple[frozenset[int], frozenset[int]]:
    """Monomial indices with positive and with negative sign in row ``i``."""
    if not 0 <= i < system.u:
        raise IndexError(f"row index {i} out of range for {system.u} rows")
    row = system.s.entries[i]
    positive = frozenset(j for j, sign in enumerate(row) if sign > 0)
    negative = frozenset(j for j, sign in enumerate(row) if sign < 0)
    return positive, negative


def zero_sign_rows(system: SignedSystem) -> tuple[int, ...]:
    """Indices of rows whose polynomial is identically zero (every sign entry is 0)."""
    return tuple(i for i, row in enumerate(system.s.entries) if all(x == 0 for x in row))
