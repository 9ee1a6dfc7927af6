"""Command-line front end.

Exit codes: 0 on success (an audit with mismatches is still a success),
1 on internal errors and backend disagreements, 2 on argument errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .engines.audit import identity_audit
from .engines.backends import BackendId, cross_check, parse_backends, term
from .engines.bench import benchmark_run
from .engines.genfunc import egf_eval, gf_coefficients
from .errors import BackendDisagreement, HyperSpinorError, IndexOutOfRange
from .hypernum import DEFAULT_REL_TOL
from .sequences import Kind, SequenceSpec
from .spinors import Spinor, Stride, direct_partial_sum, spinor_partial_sum, spinor_range


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _rational(text: str):
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None
    return q.numerator if q.denominator == 1 else q


def _seeds(text: str) -> tuple:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated seeds, got {text!r}")
    return tuple(_rational(p) for p in parts)


def _index(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"index must be >= 0, got {n}")
    return n


def _index_list(text: str) -> list:
    return [_index(p) for p in text.split(",") if p.strip()]


def _backend_list(text: str) -> list:
    try:
        return parse_backends(text)
    except ValueError:
        choices = ", ".join(b.value for b in BackendId)
        raise argparse.ArgumentTypeError(f"unknown backend in {text!r} (choose from {choices})") from None


def _backend(text: str) -> BackendId:
    backends = _backend_list(text)
    if len(backends) != 1:
        raise argparse.ArgumentTypeError(f"expected a single backend, got {text!r}")
    return backends[0]


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--kind", choices=[k.value for k in Kind], default="padovan")
    common.add_argument("--s", type=_rational, default=1, help="recurrence coefficient of a_{n+1}")
    common.add_argument("--t", type=_rational, default=1, help="recurrence coefficient of a_n")
    common.add_argument("--seeds", type=_seeds, help="three seeds a_0,a_1,a_2 (custom kind)")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--tolerance", type=float, default=DEFAULT_REL_TOL)

    parser = _Parser(prog="hyperspinors", description="Padovan and Perrin hyperbolic spinors.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("term", parents=[common], help="n-th spinor")
    p.add_argument("--n", type=_index, required=True)
    p.add_argument("--backend", type=_backend, default=BackendId.ITER)

    p = sub.add_parser("table", parents=[common], help="a range of spinors")
    p.add_argument("--from", dest="start", type=_index, default=0)
    p.add_argument("--to", dest="stop", type=_index, required=True, help="last index (inclusive)")

    p = sub.add_parser("sum", parents=[common], help="partial sum: closed form against direct summation")
    p.add_argument("--m", type=_index, required=True)
    p.add_argument("--stride", choices=[s.value for s in Stride], default="all")

    p = sub.add_parser("gf", parents=[common], help="generating-function coefficients")
    p.add_argument("--count", type=int, required=True)

    p = sub.add_parser("egf", parents=[common], help="exponential / Poisson generating function")
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--poisson", action="store_true")
    p.add_argument("--terms", type=int, default=60)

    p = sub.add_parser("audit", parents=[common], help="exact audit of the identity corpus")
    p.add_argument("--n-max", type=_index, default=64)
    p.add_argument("--out", help="write the JSON report here")

    p = sub.add_parser("check", parents=[common], help="cross-check backends")
    p.add_argument("--n-max", type=_index, required=True)
    p.add_argument("--backends", type=_backend_list, default="iter,matpow,det_banded")

    p = sub.add_parser("bench", parents=[common], help="time backends, write CSV")
    p.add_argument("--n", type=_index_list, required=True, help="comma-separated indices")
    p.add_argument("--backends", type=_backend_list, default="iter,matpow")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--out", help="CSV path (stdout when omitted)")
    return parser


def spec_from_args(args) -> SequenceSpec:
    kind = Kind(args.kind)
    if kind is Kind.CUSTOM:
        if args.seeds is None:
            raise UsageError("--kind custom requires --seeds")
        return SequenceSpec.custom(args.seeds, args.s, args.t)
    if args.seeds is not None:
        raise UsageError("--seeds is only valid with --kind custom")
    return SequenceSpec(kind, args.s, args.t)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _approx_text(x: Spinor) -> str:
    return "approx " + str(x.map(lambda v: complex(v).real))


def _approx_json(x: Spinor) -> dict:
    return {"approx": True, **x.map(lambda v: complex(v).real).to_json()}


# --- subcommands --------------------------------------------------------------------


def cmd_term(args, spec, out) -> int:
    x = term(spec, args.n, args.backend)
    if args.backend is BackendId.BINET:
        print(_dump(_approx_json(x)) if args.format == "json" else _approx_text(x), file=out)
    else:
        print(_dump(x.to_json()) if args.format == "json" else x, file=out)
    return 0


def cmd_table(args, spec, out) -> int:
    if args.stop < args.start:
        raise UsageError(f"--to ({args.stop}) is below --from ({args.start})")
    rows = spinor_range(spec, args.start, args.stop + 1)
    if args.format == "json":
        print(_dump([{"n": args.start + i, "spinor": x.to_json()} for i, x in enumerate(rows)]), file=out)
    else:
        for i, x in enumerate(rows):
            print(f"{args.start + i}\t{x}", file=out)
    return 0


def cmd_sum(args, spec, out) -> int:
    closed = spinor_partial_sum(spec, args.m, args.stride)
    direct = direct_partial_sum(spec, args.m, args.stride)
    equal = closed == direct
    if args.format == "json":
        print(_dump({"closed": closed.to_json(), "direct": direct.to_json(), "equal": equal}), file=out)
    else:
        print(f"closed  {closed}", file=out)
        print(f"direct  {direct}", file=out)
        print("EQUAL" if equal else "DIFFERENT", file=out)
    return 0


def cmd_gf(args, spec, out) -> int:
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    coeffs = gf_coefficients(spec, args.count)
    if args.format == "json":
        print(_dump([c.to_json() for c in coeffs]), file=out)
    else:
        for k, c in enumerate(coeffs):
            print(f"{k}\t{c}", file=out)
    return 0


def cmd_egf(args, spec, out) -> int:
    if args.terms < 1:
        raise UsageError("--terms must be >= 1")
    try:
        r = egf_eval(spec, args.y, args.poisson, args.terms, args.tolerance)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    closed = r.closed.map(lambda v: complex(v).real)
    if args.format == "json":
        print(
            _dump(
                {
                    "y": r.y,
                    "poisson": r.poisson,
                    "terms": r.terms,
                    "closed": closed.to_json(),
                    "series": r.series.to_json(),
                    "deviation": r.deviation,
                    "tail_bound": r.tail_bound,
                }
            ),
            file=out,
        )
    else:
        print(f"closed     {closed}", file=out)
        print(f"series     {r.series}", file=out)
        print(f"deviation  {r.deviation:.3e}", file=out)
        print(f"tail bound {r.tail_bound:.3e}", file=out)
    return 0


def cmd_audit(args, spec, out) -> int:
    if args.n_max < 5:
        raise UsageError("--n-max must be >= 5")
    report = identity_audit(args.n_max)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report.dumps() + "\n")
    if args.format == "json":
        print(_dump(report.to_json()), file=out)
    else:
        for line in report.summary_lines():
            print(line, file=out)
        n_bad = len(report.mismatches())
        print(f"{len(report.entries)} identities, {n_bad} mismatches", file=out)
    return 0


def cmd_check(args, spec, out) -> int:
    try:
        result = cross_check(spec, args.n_max, args.backends)
    except BackendDisagreement as exc:
        if args.format == "json":
            print(
                _dump(
                    {
                        "agree": False,
                        "backends": [exc.first, exc.second],
                        "n": exc.n,
                        "lhs": exc.lhs.to_json(),
                        "rhs": exc.rhs.to_json(),
                    }
                ),
                file=out,
            )
        else:
            print(f"DISAGREE {exc}", file=out)
        return 1
    compared = {b.value: k for b, k in result.compared.items()}
    skipped = {b.value: why for b, why in result.skipped.items()}
    if args.format == "json":
        print(_dump({"agree": True, "n_max": args.n_max, "compared": compared, "skipped": skipped}), file=out)
    else:
        for b, k in compared.items():
            print(f"{b:<13} {k} indices agree", file=out)
        for b, why in skipped.items():
            print(f"{b:<13} note: {why}", file=out)
        print("AGREE", file=out)
    return 0


def cmd_bench(args, spec, out) -> int:
    if args.reps < 3:
        raise UsageError("--reps must be >= 3")
    try:
        run = benchmark_run(spec, args.n, args.backends, args.reps)
    except BackendDisagreement as exc:
        print(f"DISAGREE {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", newline="") as fh:
            run.write_csv(fh)
        for rec in run.records:
            print(
                f"{rec.backend:<13} n={rec.n:<9} min {rec.min_ns / 1e6:10.3f} ms  median {rec.median_ns / 1e6:10.3f} ms",
                file=out,
            )
        for backend, n, why in run.skipped:
            print(f"{backend:<13} n={n:<9} skipped: {why}", file=out)
    else:
        run.write_csv(out)
    return 0


COMMANDS = {
    "term": cmd_term,
    "table": cmd_table,
    "sum": cmd_sum,
    "gf": cmd_gf,
    "egf": cmd_egf,
    "audit": cmd_audit,
    "check": cmd_check,
    "bench": cmd_bench,
}


def _wants_json(argv) -> bool:
    for i, a in enumerate(argv):
        if a == "--format=json" or (a == "--format" and i + 1 < len(argv) and argv[i + 1] == "json"):
            return True
    return False


def _fail(code: int, kind: str, message: str, as_json: bool, out) -> int:
    if as_json:
        print(_dump({"error": kind, "message": message, "exit_code": code}), file=out)
    else:
        print(message, file=sys.stderr)
    return code


def run_cli(argv=None, out=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = sys.stdout if out is None else out
    as_json = _wants_json(argv)
    try:
        args = build_parser().parse_args(argv)
        spec = spec_from_args(args)
        return COMMANDS[args.command](args, spec, out)
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else 0
    except UsageError as exc:
        return _fail(2, "usage", str(exc), as_json, out)
    except IndexOutOfRange as exc:
        return _fail(2, "usage", str(exc), as_json, out)
    except (HyperSpinorError, ArithmeticError, ValueError) as exc:
        return _fail(1, type(exc).__name__, str(exc), as_json, out)
    except Exception as exc:  # anything else is a bug; still report it in the requested format
        return _fail(1, type(exc).__name__, f"internal error: {exc}", as_json, out)


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
