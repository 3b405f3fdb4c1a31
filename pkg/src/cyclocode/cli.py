"""Command-line interface.

Verbs:
  cyclo --n N --field Q                   cyclotomic polynomial + profile
  code {build,dual,mindist,weights,zeros} code construction and diagnostics
  verify sweep --config FILE              batch theorem verification
  verify tensor --n1 A --n2 B --field Q   single CRT-equivalence check
  conjecture run [--config FILE]          observed rows for the open question

Exit codes: 0 = no failing record, 1 = at least one fail, 2 = config error.
"""

import argparse
import json
import sys

from . import codes
from .cyclotomic import cyclotomic_poly, profile
from .errors import ConfigInvalid, CycloError
from .field import parse_field
from .poly import Poly
from .report import emit_report
from .tensor import verify_tensor_dual
from .verify import SweepConfig, conjecture_check, sweep


def _build_code(args, ctx):
    if args.gen:
        coeffs = json.loads(args.gen)
        return codes.from_generator(Poly(ctx, coeffs), args.n, label="custom")
    if args.kind == "cn":
        return codes.build_Cn(args.n, ctx)
    if args.kind == "cn1":
        return codes.build_Cn1(args.n, ctx)
    return codes.build_repetition(args.n, ctx)


def _cmd_cyclo(args):
    ctx = parse_field(args.field)
    q = cyclotomic_poly(args.n, ctx)
    print(
        json.dumps(
            {
                "n": args.n,
                "field": ctx.literal(),
                "coefficients": list(q.coeffs),
                "profile": profile(args.n).to_dict(),
            },
            indent=2,
        )
    )
    return 0


def _cmd_code(args):
    ctx = parse_field(args.field)
    code = _build_code(args, ctx)
    if args.action == "build":
        out = code.to_dict()
    elif args.action == "dual":
        out = codes.dual(code).to_dict()
    elif args.action == "mindist":
        out = codes.min_distance(code, budget=args.budget).to_dict()
    elif args.action == "weights":
        out = {"weights": codes.weight_distribution(code, budget=args.budget)}
    else:  # zeros
        zeros, nonzeros = codes.zeros_and_nonzeros(code)
        out = {"defining_set": list(zeros), "nonzeros": list(nonzeros)}
    print(json.dumps(out, indent=2))
    return 0


def _finish(records, output, fmt, deterministic):
    if output:
        emit_report(records, fmt, output, deterministic=deterministic)
    else:
        print(json.dumps([r.to_dict() for r in records], indent=2))
    return 1 if any(r.status == "fail" for r in records) else 0


def _cmd_verify(args):
    if args.action == "tensor":
        ctx = parse_field(args.field)
        rec = verify_tensor_dual(args.n1, args.n2, ctx)
        print(json.dumps(rec.to_dict(), indent=2))
        return 1 if rec.status == "fail" else 0
    cfg = SweepConfig.from_file(args.config) if args.config else SweepConfig()
    records = sweep(cfg)
    return _finish(
        records, args.output or cfg.output, args.format or cfg.format,
        args.deterministic,
    )


def _cmd_conjecture(args):
    if args.config:
        cfg = SweepConfig.from_file(args.config)
    else:
        cfg = SweepConfig(n_range=(2, args.n_max))
    records = conjecture_check(cfg)
    return _finish(
        records, args.output or cfg.output, args.format or cfg.format,
        args.deterministic,
    )


def build_parser():
    parser = argparse.ArgumentParser(prog="cyclocode")
    sub = parser.add_subparsers(dest="command", required=True)

    p_cyclo = sub.add_parser("cyclo", help="cyclotomic polynomial over a field")
    p_cyclo.add_argument("--n", type=int, required=True)
    p_cyclo.add_argument("--field", required=True)
    p_cyclo.set_defaults(func=_cmd_cyclo)

    p_code = sub.add_parser("code", help="build codes and measure them")
    p_code.add_argument(
        "action", choices=["build", "dual", "mindist", "weights", "zeros"]
    )
    p_code.add_argument("--n", type=int, required=True)
    p_code.add_argument("--field", required=True)
    p_code.add_argument("--kind", choices=["cn", "cn1", "rn"], default="cn")
    p_code.add_argument("--gen", help="JSON coefficient list for a custom generator")
    p_code.add_argument("--budget", type=int, default=codes.DEFAULT_BUDGET)
    p_code.set_defaults(func=_cmd_code)

    p_verify = sub.add_parser("verify", help="verify theorem claims")
    p_verify.add_argument("action", choices=["sweep", "tensor"])
    p_verify.add_argument("--config")
    p_verify.add_argument("--n1", type=int)
    p_verify.add_argument("--n2", type=int)
    p_verify.add_argument("--field")
    p_verify.add_argument("--output")
    p_verify.add_argument("--format", choices=["csv", "json"])
    p_verify.add_argument(
        "--deterministic",
        action="store_true",
        help="zero elapsed times so identical configs give identical files",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_conj = sub.add_parser("conjecture", help="empirical conjecture checker")
    p_conj.add_argument("action", choices=["run"])
    p_conj.add_argument("--config")
    p_conj.add_argument("--n-max", type=int, default=24)
    p_conj.add_argument("--output")
    p_conj.add_argument("--format", choices=["csv", "json"])
    p_conj.add_argument("--deterministic", action="store_true")
    p_conj.set_defaults(func=_cmd_conjecture)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.action == "tensor":
        if args.n1 is None or args.n2 is None or args.field is None:
            parser.error("verify tensor needs --n1, --n2 and --field")
    try:
        return args.func(args)
    except ConfigInvalid as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except CycloError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
