"""Command-line front end: decide, witness, verify and explain.

Exit codes: 0 sat/ok, 1 unsat, 2 usage or input error, 3 disagreement with
the brute-force cross-check, 4 witness failure (a solver defect).  Reports
go to stdout, diagnostics to stderr.  JSON output is byte-stable: the same
input and flags always produce the same bytes.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .condition import LinearCondition, build_cnf, build_dnf_single
from .core import ExponentSolution, SignedSystem, zero_sign_rows
from .lra import (
    ConjunctionSystem,
    RationalModel,
    SolverDefect,
    scale_to_integer,
    shrink_model,
    solve_cnf,
    solve_conjunction,
)
from .oracle import BoxTooLarge, TooManySelections, exhaustive_decide
from .parser import ParseError, parse_system
from .witness import (
    NonIntegerCoefficient,
    NonPositivePoint,
    PreconditionViolated,
    SizeLimitExceeded,
    UnboundCoefficient,
    VerificationReport,
    WitnessFailure,
    evaluate_t,
    instantiate,
    symbolic_t,
    uniform_bound,
    verify_witness,
)


@dataclass(frozen=True)
class Decision:
    """Result of the full decision pipeline on one system."""

    status: str  # "sat" | "unsat"
    n: ExponentSolution | None
    model: RationalModel | None
    condition: LinearCondition
    zero_row: int | None


def decide_system(system: SignedSystem, *, shrink: bool = False) -> Decision:
    """Decide positive solvability and, in the positive case, produce an integer vector.

    A row whose polynomial is identically zero can never be positive, so
    such systems are unsatisfiable regardless of the linear condition.
    """
    condition = build_cnf(system)
    zeros = zero_sign_rows(system)
    if zeros:
        return Decision("unsat", None, None, condition, zeros[0])
    model = solve_cnf(condition)
    if model is None:
        return Decision("unsat", None, None, condition, None)
    n = scale_to_integer(model)
    if shrink:
        n = shrink_model(condition, n)
    return Decision("sat", n, model, condition, None)


def parse_coefficient_bindings(text: str) -> dict[str, Fraction]:
    """Parse a values file: one ``name = p`` or ``name = p/q`` per line, ``#`` comments."""
    bindings: dict[str, Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, eq, value = line.partition("=")
        name = name.strip()
        value = value.strip()
        if not eq or not name or not value:
            raise ParseError("expected 'name = p' or 'name = p/q'", lineno, 1)
        if name in bindings:
            raise ParseError(f"duplicate value for {name!r}", lineno, 1)
        num, slash, den = value.partition("/")
        try:
            fraction = Fraction(int(num), int(den) if slash else 1)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"invalid value {value!r}", lineno, 1) from None
        if fraction <= 0:
            raise ParseError(f"value for {name!r} must be positive", lineno, 1)
        bindings[name] = fraction
    return bindings


def _load_system(path: str) -> SignedSystem:
    return parse_system(Path(path).read_text(encoding="utf-8"))


def _format_vector(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _print_decision(decision: Decision, fmt: str):
    if fmt == "json":
        if decision.zero_row is not None:
            obj = {"status": "unsat", "reason": "zero-row", "row": decision.zero_row}
        elif decision.status == "sat":
            obj = {"status": "sat", "n": list(decision.n.n)}
        else:
            obj = {"status": "unsat"}
        print(json.dumps(obj))
    elif decision.status == "sat":
        print("SAT")
        print(f"n = {_format_vector(decision.n.n)}")
    else:
        print("UNSAT")
        if decision.zero_row is not None:
            print(f"identically zero polynomial in row {decision.zero_row}")


def _sample_bindings(system: SignedSystem, rng: random.Random) -> dict[str, Fraction]:
    names = [name for row in system.c.names for name in row if name is not None]
    return {name: Fraction(rng.randint(1, 10), rng.randint(1, 10)) for name in names}


def _run_checks(system: SignedSystem, decision: Decision, seed: int) -> int:
    """Cross-check a decision against the brute-force deciders; 0 when all agree."""
    sat = decision.status == "sat"
    if exhaustive_decide(decision.condition) != sat:
        print("check failed: exhaustive selection search disagrees", file=sys.stderr)
        return 3
    if system.u == 1:
        branches = build_dnf_single(system)
        dnf_sat = any(
            solve_conjunction(
                ConjunctionSystem(system.d, tuple(lit.coeffs for lit in branch.constraints))
            )
            is not None
            for branch in branches
        )
        if dnf_sat != sat:
            print("check failed: single-row branch decomposition disagrees", file=sys.stderr)
            return 3
    if sat and system.is_parametric:
        rng = random.Random(seed)
        for _ in range(3):
            concrete = instantiate(system, _sample_bindings(system, rng))
            t_value = evaluate_t(symbolic_t(concrete, decision.n), concrete.c)
            verify_witness(concrete, decision.n, t_value)
    return 0


def cmd_decide(args) -> int:
    system = _load_system(args.input)
    decision = decide_system(system, shrink=args.shrink)
    if args.check and decision.zero_row is None:
        code = _run_checks(system, decision, args.seed)
        if code:
            return code
    _print_decision(decision, args.format)
    return 0 if decision.status == "sat" else 1


def cmd_witness(args) -> int:
    system = _load_system(args.input)
    decision = decide_system(system, shrink=args.shrink)
    if decision.status == "unsat":
        _print_decision(decision, args.format)
        print("no witness: the system has no positive solution scheme", file=sys.stderr)
        return 1
    witness = symbolic_t(system, decision.n)
    if args.format == "json":
        print(json.dumps(witness.to_json_dict()))
    else:
        print(witness.to_display_text())
    return 0


def _print_report(report: VerificationReport, n: ExponentSolution, fmt: str):
    if fmt == "json":
        obj = {
            "status": "ok",
            "t": str(report.t_value),
            "r": str(report.r_value),
            "n": list(n.n),
            "point": [str(x) for x in report.point],
            "values": [str(x) for x in report.values],
        }
        print(json.dumps(obj))
    else:
        print(f"t = {report.t_value}")
        print(f"r = {report.r_value}")
        print(f"n = {_format_vector(n.n)}")
        print(f"point = {_format_vector(report.point)}")
        for i, value in enumerate(report.values):
            print(f"f{i + 1} = {value}")
        print("ok")


def cmd_verify(args) -> int:
    system = _load_system(args.input)
    if system.is_parametric:
        if not args.coeffs:
            print("error: parametric input needs --coeffs <file>", file=sys.stderr)
            return 2
        bindings = parse_coefficient_bindings(Path(args.coeffs).read_text(encoding="utf-8"))
        system = instantiate(system, bindings)
    elif args.coeffs:
        print("note: input is concrete, ignoring --coeffs", file=sys.stderr)
    decision = decide_system(system, shrink=args.shrink)
    if decision.status == "unsat":
        _print_decision(decision, args.format)
        return 1
    if args.use_uniform_bound:
        r = uniform_bound(system)
    else:
        r = evaluate_t(symbolic_t(system, decision.n), system.c)
    report = verify_witness(system, decision.n, r, max_bits=args.max_bits)
    _print_report(report, decision.n, args.format)
    return 0


def cmd_explain(args) -> int:
    system = _load_system(args.input)
    condition = build_cnf(system)
    if args.format == "json":
        obj = {
            "num_vars": condition.num_vars,
            "clauses": [
                {
                    "row": clause.row,
                    "neg": clause.neg,
                    "literals": [
                        {"pos": lit.pos, "coeffs": list(lit.coeffs)} for lit in clause.literals
                    ],
                }
                for clause in condition.clauses
            ],
        }
        print(json.dumps(obj))
    else:
        text = condition.to_debug_text()
        if text:
            print(text)
    return 0


def _build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subtrop",
        description=(
            "Decide whether a polynomial system with a fixed sign pattern has a "
            "positive solution for every choice of positive coefficients, and "
            "construct an exact witness when it does."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", help="input system (.spp file)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_decide = sub.add_parser("decide", help="report SAT with an integer vector, or UNSAT")
    common(p_decide)
    p_decide.add_argument("--check", action="store_true", help="cross-check with brute force")
    p_decide.add_argument("--seed", type=int, default=0, help="seed for --check sampling")
    p_decide.add_argument("--shrink", action="store_true", help="shrink the vector toward 0")
    p_decide.set_defaults(func=cmd_decide)

    p_witness = sub.add_parser("witness", help="print the symbolic witness t and t^n")
    common(p_witness)
    p_witness.add_argument("--shrink", action="store_true", help="shrink the vector toward 0")
    p_witness.set_defaults(func=cmd_witness)

    p_verify = sub.add_parser("verify", help="evaluate the witness exactly and check f > 0")
    common(p_verify)
    p_verify.add_argument("--coeffs", help="coefficient values file (parametric input)")
    p_verify.add_argument(
        "--use-uniform-bound",
        action="store_true",
        help="use 1 + v * (sum of negative integer coefficients) instead of t",
    )
    p_verify.add_argument("--max-bits", type=int, help="abort if evaluation exceeds this size")
    p_verify.add_argument("--shrink", action="store_true", help="shrink the vector toward 0")
    p_verify.set_defaults(func=cmd_verify)

    p_explain = sub.add_parser("explain", help="print the linear condition with provenance")
    common(p_explain)
    p_explain.set_defaults(func=cmd_explain)
    return parser


def main(argv=None) -> int:
    args = _build_arg_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        UnboundCoefficient,
        NonIntegerCoefficient,
        NonPositivePoint,
        PreconditionViolated,
        SizeLimitExceeded,
        TooManySelections,
        BoxTooLarge,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except WitnessFailure as exc:
        print(f"witness failure (solver defect): {exc}", file=sys.stderr)
        return 4
    except SolverDefect as exc:
        print(f"solver defect: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
