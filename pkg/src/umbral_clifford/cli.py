"""Command-line front end: ``umbral-clifford <command> ...``.

JSON goes to stdout, a readable summary to stderr.  Exit codes: 0 success,
1 an identity failed, 2 usage or parse error, 3 precondition violated.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .almansi import AlmansiResult, almansi_decompose, fischer_decompose
from .dirac import apply_dirac, apply_euler, apply_gamma, apply_laplacian, apply_vector
from .errors import ParseError, PreconditionError, SchemaError, UmbralError
from .oscillator import OscillatorConfig, apply_H, apply_J, apply_potential
from .parser import parse_polynomial
from .poly import CliffordPolynomial, rational
from .serialize import deserialize, dumps, polynomial_to_json, to_json
from .suites import SUITES, run_suite
from .umbral import FAMILIES, VARIANTS, CalculusConfig, basic_sequence

EXIT_OK, EXIT_IDENTITY, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3

OPERATORS = ("dirac", "vector", "euler", "gamma", "laplacian", "potential", "J", "H")


@dataclass
class CommandResult:
    command: str
    payload: object
    exit_code: int
    message: str = ""
    error: Optional[dict] = None

    def payload_json(self) -> Optional[str]:
        if self.payload is not None:
            return dumps(to_json(self.payload))
        if self.error is not None:
            return dumps(self.error)
        return None


class _UsageError(Exception):
    pass


def _add_common(p: argparse.ArgumentParser, needs_input: bool = True) -> None:
    p.add_argument("--n", type=int, required=True, help="number of variables")
    p.add_argument("--family", choices=FAMILIES, default="continuum")
    p.add_argument("--h", help="lattice step as 'p/q' (required for discrete families)")
    p.add_argument("--variant", choices=VARIANTS, default="plain", help="raising operator variant")
    if needs_input:
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--expr", help="polynomial expression, e.g. 'x1^2 - 1/2*e1*e2'")
        src.add_argument("--input", type=Path, help="file with an expression or polynomial JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="umbral-clifford", description="Exact umbral Clifford calculus and Almansi decompositions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="Almansi decomposition of a polymonogenic polynomial")
    _add_common(p)
    p.add_argument("--k", type=int, required=True, help="polymonogenic degree")

    p = sub.add_parser("fischer", help="Fischer decomposition of an E'-homogeneous polynomial")
    _add_common(p)
    p.add_argument("--degree", type=int, help="expected E'-degree (inferred when omitted)")

    p = sub.add_parser("basic-seq", help="basic polynomial V_alpha = (x')^alpha 1")
    _add_common(p, needs_input=False)
    p.add_argument("--alpha", required=True, help="comma-separated multi-index, e.g. 3,0")

    p = sub.add_parser("apply", help="apply one operator to a polynomial")
    _add_common(p)
    p.add_argument("--op", choices=OPERATORS, required=True)
    p.add_argument("--hbar", default="0", help="oscillator parameter as 'p/q' (potential, J, H)")

    p = sub.add_parser("verify", help="run a named identity suite")
    _add_common(p, needs_input=False)
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--max-degree", type=int, default=4)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--hbar", help="oscillator suite only; default runs 0, 1/2 and 1")
    return parser


def _config(args) -> CalculusConfig:
    if args.n < 1:
        raise _UsageError("--n must be >= 1")
    if args.family == "continuum":
        if args.h is not None:
            raise _UsageError("--h is only meaningful for discrete families")
        if args.variant != "plain":
            raise _UsageError("the continuum family only has the plain variant")
        return CalculusConfig(args.n)
    if args.h is None:
        raise _UsageError(f"--h is required for family {args.family!r}")
    try:
        return CalculusConfig(args.n, args.family, rational(args.h), args.variant)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _read_input(args) -> CliffordPolynomial:
    if args.expr is not None:
        return parse_polynomial(args.expr, args.n)
    text = args.input.read_text()
    if text.lstrip().startswith("{"):
        f = deserialize(text)
        if not isinstance(f, CliffordPolynomial):
            raise _UsageError("--input JSON must be a polynomial document")
        if f.n != args.n:
            raise _UsageError(f"--input has n={f.n} but --n is {args.n}")
        return f
    return parse_polynomial(text, args.n)


def _apply(args, cfg: CalculusConfig, f: CliffordPolynomial) -> CliffordPolynomial:
    plain = {
        "dirac": apply_dirac,
        "vector": apply_vector,
        "euler": apply_euler,
        "gamma": apply_gamma,
        "laplacian": apply_laplacian,
    }
    if args.op in plain:
        return plain[args.op](cfg, f)
    ocfg = OscillatorConfig(cfg, rational(args.hbar))
    return {"potential": apply_potential, "J": apply_J, "H": apply_H}[args.op](ocfg, f)


def _dispatch(args) -> CommandResult:
    cfg = _config(args)
    cmd = args.command
    if cmd == "decompose":
        if args.k < 1:
            raise _UsageError("--k must be >= 1")
        res = almansi_decompose(cfg, _read_input(args), args.k)
        return CommandResult(cmd, res, EXIT_OK, _describe(res))
    if cmd == "fischer":
        res = fischer_decompose(cfg, _read_input(args), args.degree)
        return CommandResult(cmd, res, EXIT_OK, _describe(res))
    if cmd == "basic-seq":
        try:
            alpha = tuple(int(a) for a in args.alpha.split(","))
        except ValueError:
            raise _UsageError(f"--alpha must be comma-separated integers, got {args.alpha!r}") from None
        if len(alpha) != cfg.n or any(a < 0 for a in alpha):
            raise _UsageError(f"--alpha needs {cfg.n} non-negative entries")
        v = basic_sequence(cfg, alpha)
        return CommandResult(cmd, v, EXIT_OK, f"V_{alpha} = {v}")
    if cmd == "apply":
        out = _apply(args, cfg, _read_input(args))
        return CommandResult(cmd, out, EXIT_OK, f"{args.op}: {out}")
    if cmd == "verify":
        if args.trials < 1 or args.max_degree < 0:
            raise _UsageError("--trials must be >= 1 and --max-degree >= 0")
        hbar = None if args.hbar is None else rational(args.hbar)
        reports = run_suite(args.suite, cfg, args.max_degree, args.trials, args.seed, hbar)
        failed = sum(not r.passed for r in reports)
        lines = [r.summary() for r in reports]
        lines.append(f"{len(reports) - failed}/{len(reports)} identities passed")
        return CommandResult(cmd, reports, EXIT_IDENTITY if failed else EXIT_OK, "\n".join(lines))
    raise _UsageError(f"unknown command {cmd!r}")


def _describe(res: AlmansiResult) -> str:
    return "\n".join(f"f_{s} = {c}" for s, c in enumerate(res.components))


def run_command(argv: Sequence[str]) -> CommandResult:
    argv = list(argv)
    command = argv[0] if argv else ""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return CommandResult(command, None, code, "")
    try:
        return _dispatch(args)
    except PreconditionError as exc:
        err = {"error": "precondition", "message": str(exc)}
        if isinstance(exc.witness, CliffordPolynomial):
            err["witness"] = polynomial_to_json(exc.witness)
        return CommandResult(command, None, EXIT_PRECONDITION, f"precondition failed: {exc}", err)
    except ParseError as exc:
        return CommandResult(command, None, EXIT_USAGE, f"parse error: {exc}",
                             {"error": "parse", "message": str(exc), "position": exc.position})
    except SchemaError as exc:
        return CommandResult(command, None, EXIT_USAGE, f"schema error: {exc}",
                             {"error": "schema", "message": str(exc), "path": exc.path})
    except (_UsageError, UmbralError, ValueError, OSError) as exc:
        return CommandResult(command, None, EXIT_USAGE, f"error: {exc}", {"error": "usage", "message": str(exc)})


def main(argv: Sequence[str] | None = None) -> int:
    result = run_command(sys.argv[1:] if argv is None else argv)
    text = result.payload_json()
    if text is not None:
        print(text)
    if result.message:
        print(result.message, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
