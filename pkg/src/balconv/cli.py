"""Command-line frontend.

Subcommands: ``seq`` (sequence tables), ``conv`` (evaluate one convolution),
``closed`` (evaluate one closed form), ``verify`` (sweep an identity and
report mismatches), ``series-check`` (exact power-series checks), ``bench``
(closed form vs. series oracle wall time), ``table`` (side-by-side LHS/RHS
columns).

Exit codes: 0 success / all checks pass, 1 verification found mismatches
(report still emitted), 2 usage or domain error.  All integers in machine
output are decimal strings; they outgrow 64-bit types quickly.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from .combinatorics import IntegralityError
from .identities import (
    IdentityId,
    binom_conv_c,
    binom_conv_u,
    binom_conv_v,
    clear_caches,
    conv_power,
    identity_info,
    report_to_dict,
    resolve_identity_args,
    rhs_general_plain,
    verify_identity,
)
from .sequences import BALANCING, FIBONACCI, SeqParams, lucas_balancing, u, v
from .series import verify_ogf_square_relation, verify_power_expansion

__all__ = ["main", "run"]

_FORMATS = ("plain", "csv", "json")

_NAMED_KINDS = {
    "balancing": (BALANCING, "u"),
    "lucas-balancing": (BALANCING, "c"),
    "fibonacci": (FIBONACCI, "u"),
    "lucas": (FIBONACCI, "v"),
}


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _json_dumps(obj: object) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _kind_spec(args: argparse.Namespace) -> tuple[SeqParams, str]:
    """Map --kind/--a/--b to (params, sequence selector u/v/c)."""
    if args.kind in ("u", "v"):
        if args.a is None or args.b is None:
            raise ValueError("--kind u/v requires both --a and --b")
        return SeqParams(args.a, args.b), args.kind
    if args.a is not None or args.b is not None:
        raise ValueError("--a/--b apply only to --kind u or v")
    return _NAMED_KINDS[args.kind]


def _term(params: SeqParams, which: str, n: int) -> int:
    if which == "u":
        return u(params, n)
    if which == "v":
        return v(params, n)
    return lucas_balancing(n)


def _params_dict(params: SeqParams) -> dict:
    return {"a": str(params.a), "b": str(params.b)}


def _identity_args(args: argparse.Namespace) -> tuple[IdentityId, SeqParams, int]:
    identity = IdentityId(args.identity)
    params = None
    if args.a is not None or args.b is not None:
        if args.a is None or args.b is None:
            raise ValueError("--a and --b must be given together")
        params = SeqParams(args.a, args.b)
    params, r = resolve_identity_args(identity, params, args.r)
    return identity, params, r


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_seq(args: argparse.Namespace) -> int:
    params, which = _kind_spec(args)
    values = [_term(params, which, n) for n in range(args.to + 1)]
    if args.format == "csv":
        text = ",".join(str(x) for x in values) + "\n"
    elif args.format == "plain":
        text = "".join(f"{n} {x}\n" for n, x in enumerate(values))
    else:
        text = _json_dumps(
            {
                "kind": args.kind,
                "params": _params_dict(params),
                "values": [str(x) for x in values],
            }
        )
    _emit(text, args.output)
    return 0


def _cmd_conv(args: argparse.Namespace) -> int:
    params, which = _kind_spec(args)
    if args.binomial:
        if which == "u":
            value = binom_conv_u(params, args.r, args.n)
        elif which == "v":
            value = binom_conv_v(params, args.r, args.n)
        else:
            value = binom_conv_c(args.r, args.n)
    else:
        if which != "u":
            raise ValueError(
                "plain convolutions are defined for u-type kinds; "
                "use --binomial for lucas / lucas-balancing / v kinds"
            )
        value = conv_power(params, args.r, args.n)
    if args.format == "csv":
        text = f"r,n,value\n{args.r},{args.n},{value}\n"
    elif args.format == "plain":
        text = f"{value}\n"
    else:
        text = _json_dumps(
            {
                "kind": args.kind,
                "params": _params_dict(params),
                "r": str(args.r),
                "n": str(args.n),
                "binomial": args.binomial,
                "value": str(value),
            }
        )
    _emit(text, args.output)
    return 0


def _cmd_closed(args: argparse.Namespace) -> int:
    identity, params, r = _identity_args(args)
    value = identity_info(identity).rhs(params, r, args.n)
    if args.format == "csv":
        text = f"identity,r,n,value\n{identity.value},{r},{args.n},{value}\n"
    elif args.format == "plain":
        text = f"{value}\n"
    else:
        text = _json_dumps(
            {
                "identity": identity.value,
                "params": _params_dict(params),
                "r": str(r),
                "n": str(args.n),
                "value": str(value),
            }
        )
    _emit(text, args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    identity, params, r = _identity_args(args)
    lo = args.n_min if args.n_min is not None else identity_info(identity).n_min(r)
    report = verify_identity(identity, (lo, args.n_max), params, r)
    if args.format == "json":
        text = _json_dumps(report_to_dict(report))
    elif args.format == "csv":
        lines = ["n,lhs,rhs"]
        lines += [f"{f.n},{f.lhs},{f.rhs}" for f in report.failures]
        text = "\n".join(lines) + "\n"
    else:
        status = "pass" if report.passed else "FAIL"
        lines = [
            f"identity={report.identity.value} params=({report.params.a},{report.params.b}) "
            f"r={report.r} range=[{report.n_range[0]},{report.n_range[1]}] "
            f"checked={report.checked} failures={len(report.failures)} status={status}"
        ]
        lines += [f"  n={f.n} lhs={f.lhs} rhs={f.rhs}" for f in report.failures]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0 if report.passed else 1


def _cmd_series_check(args: argparse.Namespace) -> int:
    if args.r is None:
        name = "ogf-square"
        passed = verify_ogf_square_relation(args.order)
        r_text = ""
    else:
        name = "power-expansion"
        passed = verify_power_expansion(args.r, args.order)
        r_text = str(args.r)
    if args.format == "csv":
        text = f"check,r,order,passed\n{name},{r_text},{args.order},{str(passed).lower()}\n"
    elif args.format == "plain":
        label = f"{name} r={r_text} " if r_text else f"{name} "
        text = f"{label}order={args.order}: {'pass' if passed else 'FAIL'}\n"
    else:
        text = _json_dumps(
            {
                "check": name,
                "r": r_text or None,
                "order": str(args.order),
                "passed": passed,
            }
        )
    _emit(text, args.output)
    return 0 if passed else 1


def _cmd_bench(args: argparse.Namespace) -> int:
    # Informational only: wall time of the O(r n^2) series oracle vs the
    # O(n) closed form, both cold.  Timing output is inherently run-dependent.
    clear_caches()
    t0 = time.perf_counter()
    oracle_value = conv_power(BALANCING, args.r, args.n)
    t1 = time.perf_counter()
    closed_value = rhs_general_plain(args.r, args.n)
    t2 = time.perf_counter()
    agree = oracle_value == closed_value
    if args.format == "csv":
        text = (
            "method,r,n,seconds\n"
            f"conv-power,{args.r},{args.n},{t1 - t0:.6f}\n"
            f"closed-form,{args.r},{args.n},{t2 - t1:.6f}\n"
        )
    elif args.format == "plain":
        text = (
            f"conv-power   r={args.r} n={args.n}  {t1 - t0:.6f}s\n"
            f"closed-form  r={args.r} n={args.n}  {t2 - t1:.6f}s\n"
            f"agree: {str(agree).lower()}\n"
        )
    else:
        text = _json_dumps(
            {
                "r": str(args.r),
                "n": str(args.n),
                "conv_power_seconds": f"{t1 - t0:.6f}",
                "closed_form_seconds": f"{t2 - t1:.6f}",
                "agree": agree,
            }
        )
    _emit(text, args.output)
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    identity, params, r = _identity_args(args)
    info = identity_info(identity)
    lo = args.n_min if args.n_min is not None else info.n_min(r)
    hi = args.n_max
    if lo > hi:
        raise ValueError(f"empty range [{lo}, {hi}]")
    if lo < info.n_min(r):
        raise ValueError(f"{identity.value} requires n >= {info.n_min(r)}")
    rows = [(n, info.lhs(params, r, n), info.rhs(params, r, n)) for n in range(lo, hi + 1)]
    if args.format == "csv":
        lines = ["n,lhs,rhs"] + [f"{n},{lhs},{rhs}" for n, lhs, rhs in rows]
        text = "\n".join(lines) + "\n"
    elif args.format == "plain":
        lines = ["n\tlhs\trhs"] + [f"{n}\t{lhs}\t{rhs}" for n, lhs, rhs in rows]
        text = "\n".join(lines) + "\n"
    else:
        text = _json_dumps(
            {
                "identity": identity.value,
                "params": _params_dict(params),
                "r": str(r),
                "rows": [
                    {"n": str(n), "lhs": str(lhs), "rhs": str(rhs)} for n, lhs, rhs in rows
                ],
            }
        )
    _emit(text, args.output)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=_FORMATS, default="plain")
    sub.add_argument("--output", default=None, help="write to file instead of stdout")


def _add_kind(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--kind",
        choices=(*_NAMED_KINDS, "u", "v"),
        default="balancing",
    )
    sub.add_argument("--a", type=int, default=None, help="recurrence coefficient a (kinds u/v)")
    sub.add_argument("--b", type=int, default=None, help="recurrence coefficient b (kinds u/v)")


def _add_identity(sub: argparse.ArgumentParser, with_params: bool = True) -> None:
    sub.add_argument(
        "--identity",
        required=True,
        choices=[i.value for i in IdentityId],
    )
    sub.add_argument("--r", type=int, default=None, help="fold count for variable-r identities")
    if with_params:
        sub.add_argument("--a", type=int, default=None, help="recurrence coefficient a (general-u/v)")
        sub.add_argument("--b", type=int, default=None, help="recurrence coefficient b (general-u/v)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="balconv",
        description="Exact convolution-identity toolkit for balancing-type sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="emit sequence values 0..N")
    _add_kind(p)
    p.add_argument("--to", type=_nonneg, required=True, help="largest index")
    _add_common(p)
    p.set_defaults(func=_cmd_seq)

    p = sub.add_parser("conv", help="evaluate one r-fold convolution")
    _add_kind(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--binomial", action="store_true", help="binomial-weighted convolution")
    _add_common(p)
    p.set_defaults(func=_cmd_conv)

    p = sub.add_parser("closed", help="evaluate an identity's closed form at one n")
    _add_identity(p)
    p.add_argument("--n", type=_nonneg, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_closed)

    p = sub.add_parser("verify", help="sweep an identity and report exact mismatches")
    _add_identity(p)
    p.add_argument("--n-min", type=_nonneg, default=None, help="default: the identity's domain minimum")
    p.add_argument("--n-max", type=_nonneg, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("series-check", help="exact truncated-series checks")
    p.add_argument("--order", type=_nonneg, default=200, help="truncation order")
    p.add_argument("--r", type=int, default=None, help="check the r-th power expansion instead of the square relation")
    _add_common(p)
    p.set_defaults(func=_cmd_series_check)

    p = sub.add_parser("bench", help="time the series oracle against the closed form")
    p.add_argument("--r", type=int, default=4)
    p.add_argument("--n", type=_nonneg, default=400)
    _add_common(p)
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("table", help="LHS/RHS columns for an identity over a range")
    _add_identity(p)
    p.add_argument("--n-min", type=_nonneg, default=None)
    p.add_argument("--n-max", type=_nonneg, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_table)

    return parser


def run(argv: Sequence[str]) -> int:
    """Execute one invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, IntegralityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
