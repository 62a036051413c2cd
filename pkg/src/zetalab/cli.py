"""Command-line interface: eval, sieve, verify, scan, zeros subcommands."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import arith
from .errors import ZetaLabError
from .harness import REGISTRY, all_assertions_pass, grid_scan, run_all, run_check
from .reflect import kappa, nu, theta
from .reporting import RunConfig, emit_report
from .zeros import Rect, find_critical_zeros
from .zeta_eval import eta, zeta

_EVAL_FNS = {
    "zeta": zeta,
    "eta": eta,
    "nu": nu,
    "theta": theta,
    "kappa": kappa,
}

_SIEVE_COLUMNS = {
    "mu": lambda t: t.mu,
    "lambda": lambda t: t.liouville,
    "mangoldt": lambda t: t.mangoldt,
    "sigma": lambda t: t.sigma_paper,
}


def _write_out(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _cmd_eval(args: argparse.Namespace) -> int:
    s = complex(args.re, args.im)
    try:
        result = _EVAL_FNS[args.fn](s)
    except ZetaLabError as exc:
        print(json.dumps({"fn": args.fn, "re": args.re, "im": args.im, "error": str(exc)}))
        return 1
    payload = {
        "fn": args.fn,
        "re": args.re,
        "im": args.im,
        "value_re": result.value.real,
        "value_im": result.value.imag,
        "abs_err_est": result.abs_err_est,
        "method": result.method,
    }
    print(json.dumps(payload))
    return 0


def _cmd_sieve(args: argparse.Namespace) -> int:
    table = arith.build_table(args.n)
    column = _SIEVE_COLUMNS[args.fn](table)
    lines = ["n,value"]
    is_real = column.dtype.kind == "f"
    for n in range(1, args.n + 1):
        lines.append(f"{n},{float(column[n])!r}" if is_real else f"{n},{int(column[n])}")
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("ZETALAB_SEED", "0"))
    cfg = RunConfig(seed=seed)
    if args.only:
        ids = [x.strip() for x in args.only.split(",") if x.strip()]
        unknown = [x for x in ids if x not in REGISTRY]
        if unknown:
            raise SystemExit(f"unknown check ids: {', '.join(unknown)}")
        results = [run_check(check_id, cfg) for check_id in ids]
    else:
        results = run_all(cfg)
    payload = emit_report(results, args.report, seed=seed)
    if args.out is None or args.out == "-":
        sys.stdout.write(payload.decode("utf-8"))
    else:
        with open(args.out, "wb") as handle:
            handle.write(payload)
    return 0 if all_assertions_pass(results) else 1


def _cmd_scan(args: argparse.Namespace) -> int:
    parts = [float(x) for x in args.rect.split(",")]
    if len(parts) != 4:
        raise SystemExit("--rect expects re_min,re_max,im_min,im_max")
    region = Rect(*parts)
    csv_text = grid_scan(region, args.step, args.quantity)
    _write_out(csv_text, args.out)
    return 0


def _cmd_zeros(args: argparse.Namespace) -> int:
    records = find_critical_zeros(args.tmin, args.tmax, args.step)
    lines = ["t,re,im,abs_eta,multiplicity,method"]
    for rec in records:
        lines.append(
            f"{rec.location.imag!r},{rec.location.real!r},{rec.location.imag!r},"
            f"{rec.refined_abs_value!r},{rec.multiplicity_estimate!r},{rec.method}"
        )
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zetalab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    eval_cmd = sub.add_parser("eval", help="Evaluate a function at re + i*im")
    eval_cmd.add_argument("re", type=float)
    eval_cmd.add_argument("im", type=float)
    eval_cmd.add_argument("--fn", choices=sorted(_EVAL_FNS), default="zeta")

    sieve_cmd = sub.add_parser("sieve", help="Dump a sieved array as CSV (columns n,value)")
    sieve_cmd.add_argument("n", type=int)
    sieve_cmd.add_argument("--fn", choices=sorted(_SIEVE_COLUMNS), required=True)
    sieve_cmd.add_argument("--out", default=None, help="output path (default stdout)")

    verify_cmd = sub.add_parser("verify", help="Run registered checks and emit a report")
    verify_cmd.add_argument("--only", default=None, help="comma-separated check ids")
    verify_cmd.add_argument("--seed", type=int, default=None)
    verify_cmd.add_argument("--report", choices=["json", "csv", "text"], default="text")
    verify_cmd.add_argument("--out", default=None, help="output path (default stdout)")

    scan_cmd = sub.add_parser("scan", help="Grid-scan a quantity over a rectangle (CSV)")
    scan_cmd.add_argument("--rect", required=True, help="re_min,re_max,im_min,im_max")
    scan_cmd.add_argument("--step", type=float, required=True)
    scan_cmd.add_argument(
        "--quantity", choices=["abs_zeta", "abs_eta", "abs_kappa", "im_kappa"], required=True
    )
    scan_cmd.add_argument("--out", default=None, help="output path (default stdout)")

    zeros_cmd = sub.add_parser("zeros", help="Locate critical-line zeros (CSV)")
    zeros_cmd.add_argument("--tmin", type=float, required=True)
    zeros_cmd.add_argument("--tmax", type=float, required=True)
    zeros_cmd.add_argument("--step", type=float, default=0.01)
    zeros_cmd.add_argument("--out", default=None, help="output path (default stdout)")

    return parser


_HANDLERS = {
    "eval": _cmd_eval,
    "sieve": _cmd_sieve,
    "verify": _cmd_verify,
    "scan": _cmd_scan,
    "zeros": _cmd_zeros,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return _HANDLERS[args.command](args)


if __name__ == "__main__":
    raise SystemExit(main())
