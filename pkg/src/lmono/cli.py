"""Command-line surface: reproducible JSON reports over every capability.

Exit codes: 0 success, 2 usage/precondition, 3 data (count check, cache),
4 certificate or residual failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
import time

import numpy as np

from . import __version__
from .characters import RealPrimitiveCharacter, is_fundamental_discriminant
from .errors import LmonoError
from .logderiv import f_deriv_series, f_deriv_zerosum, f_prime_formula
from .monotonicity import (
    compare_fingerprints,
    compute_constants,
    construct_offline_pair,
    fingerprint,
    scan_sign_changes,
    siegel_stability,
)
from .zeros import (
    SyntheticZeroSet,
    ZeroList,
    load_zeros,
    lowest_zero,
    mark_complete,
    scan_zeros,
    store_zeros,
)

USAGE_EXIT = 2
DATA_EXIT = 3
CERT_EXIT = 4


def _cache_dir(args) -> str:
    return args.cache or os.environ.get("LMONO_CACHE") or os.getcwd()


def _cache_path(args, d: int, T: float) -> str:
    t_label = f"{T:g}"
    return os.path.join(_cache_dir(args), f"d{d}_T{t_label}.csv")


def _character(d: int) -> RealPrimitiveCharacter:
    if not is_fundamental_discriminant(d):
        raise SystemExit(
            _fail(USAGE_EXIT, f"{d} is not a fundamental discriminant")
        )
    return RealPrimitiveCharacter(d)


def _fail(code: int, message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _emit(args, report: dict) -> None:
    report["tool_version"] = __version__
    report["timestamp"] = time.strftime("%Y-%m-%dT%H:%M:%S")
    json.dump(report, sys.stdout, indent=2, default=_jsonable)
    print()


def _jsonable(obj):
    if dataclasses.is_dataclass(obj):
        return dataclasses.asdict(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    raise TypeError(f"unserializable {type(obj)}")


def _run_config(args, **extra) -> dict:
    cfg = {k: v for k, v in vars(args).items() if k != "func" and v is not None}
    cfg.update(extra)
    return cfg


def _load_verified(args, d: int, T: float) -> ZeroList:
    """Scan or load-and-reverify the zero list for (d, T); maintain cache."""
    chi = _character(d)
    path = _cache_path(args, d, T)
    zlist = None
    if os.path.exists(path):
        zlist = load_zeros(path)
        if zlist.d != d or abs(zlist.covered_height - T) > 1e-9:
            zlist = None
    if zlist is None:
        zlist = scan_zeros(chi, T)
        store_zeros(zlist, path)
    # caches are never trusted blindly: always re-verify the count
    zlist = mark_complete(chi, zlist)
    if not zlist.complete:
        raise SystemExit(_fail(DATA_EXIT, f"count check failed for d={d}, T={T}"))
    return zlist


def _parse_k(text: str) -> tuple[int, int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return int(lo), int(hi)
    k = int(text)
    return k, k


def _parse_s_list(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


# --- subcommands -------------------------------------------------------------


def cmd_zeros(args) -> int:
    chi = _character(args.d)
    zlist = _load_verified(args, args.d, args.T)
    if args.csv:
        with open(_cache_path(args, args.d, args.T)) as fh:
            sys.stdout.write(fh.read())
        return 0
    _emit(
        args,
        {
            "command": "zeros",
            "config": _run_config(args),
            "count": len(zlist),
            "lowest_ordinate": lowest_zero(zlist),
            "per_zero_error": zlist.per_zero_error,
            "cache_file": _cache_path(args, args.d, args.T),
            "complete": zlist.complete,
        },
    )
    return 0


def cmd_deriv(args) -> int:
    chi = _character(args.d)
    if args.s <= 1.0 or (args.method in ("series", "both") and args.s < 1.2):
        return _fail(USAGE_EXIT, f"s={args.s} below the evaluation floor")
    k = args.k
    report = {"command": "deriv", "config": _run_config(args)}
    if args.method in ("series", "both"):
        ser = f_deriv_series(chi, args.s, k, eps=args.tolerance)
        report["series"] = {"value": ser.value, "error_bound": ser.error_bound}
    if k >= 1 and args.method in ("zerosum", "both"):
        zlist = _load_verified(args, args.d, args.T)
        zs = (
            f_prime_formula(chi, args.s, zlist)
            if k == 1
            else f_deriv_zerosum(chi, args.s, k, zlist)
        )
        report["zerosum"] = {
            "value": zs.value,
            "error_bound": zs.error_bound,
            "sign": zs.sign,
            "log_magnitude": zs.log_magnitude,
        }
    if args.method == "both" and k >= 1:
        residual = abs(report["series"]["value"] - report["zerosum"]["value"])
        allowed = (
            report["series"]["error_bound"] + report["zerosum"]["error_bound"]
        )
        report["residual"] = residual
        report["residual_allowed"] = allowed
        _emit(args, report)
        if residual > max(allowed, args.tolerance):
            return _fail(CERT_EXIT, f"residual {residual:.3g} exceeds bounds")
        return 0
    _emit(args, report)
    return 0


def _constants_block(zlist: ZeroList) -> dict:
    return dataclasses.asdict(compute_constants(zlist))


def cmd_constants(args) -> int:
    zlist = _load_verified(args, args.d, args.T)
    _emit(
        args,
        {
            "command": "constants",
            "config": _run_config(args),
            "constants": _constants_block(zlist),
        },
    )
    return 0


def cmd_scan(args) -> int:
    zlist = _load_verified(args, args.d, args.T)
    s_vals = _parse_s_list(args.s)
    if len(s_vals) != 2:
        return _fail(USAGE_EXIT, "-s must give an interval a,b")
    result = scan_sign_changes(
        zlist, (s_vals[0], s_vals[1]), args.kmax, tolerance=args.tolerance
    )
    _emit(
        args,
        {
            "command": "scan",
            "config": _run_config(args),
            "constants": _constants_block(zlist),
            "k_star": result.k_star,
            "found": len(result.findings),
            "findings": [
                {"k": f.k, "s_star": f.s_star, "certificate": f.certificate}
                for f in result.findings[: args.limit]
            ],
        },
    )
    return 0


def cmd_fingerprint(args) -> int:
    zlist = _load_verified(args, args.d, args.T)
    k_lo, k_hi = _parse_k(args.k)
    fp = fingerprint(zlist, float(args.s), k_lo, k_hi, tolerance=args.tolerance)
    if args.csv:
        for line in fp.records():
            print(line)
        return 0
    _emit(
        args,
        {
            "command": "fingerprint",
            "config": _run_config(args),
            "constants": _constants_block(zlist),
            "definite_fraction": fp.definite_fraction(),
            "records": list(fp.records()),
        },
    )
    return 0


def cmd_compare(args) -> int:
    zlist = _load_verified(args, args.d, args.T)
    try:
        report = compare_fingerprints(
            zlist, args.s1, args.s2, args.kmax, tolerance=args.tolerance
        )
    except ValueError as exc:
        return _fail(USAGE_EXIT, str(exc))
    _emit(
        args,
        {
            "command": "compare",
            "config": _run_config(args),
            "constants": _constants_block(zlist),
            **report,
        },
    )
    return 0


def cmd_synth(args) -> int:
    if args.mode == "siegel":
        zlist = _load_verified(args, args.base, args.T)
        synth = SyntheticZeroSet(
            zeros=tuple(complex(0.5, g) for g in zlist.ordinates),
            real_zero=args.beta,
        )
        report = siegel_stability(
            synth, _parse_s_list(args.s), k_start=1, k_span=args.span
        )
        _emit(
            args,
            {"command": "synth siegel", "config": _run_config(args), **report},
        )
        return 0 if report["stable"] else _fail(CERT_EXIT, "not stable")
    report = construct_offline_pair(
        complex(*_parse_s_list(args.rho0)),
        complex(*_parse_s_list(args.rho1)),
        delta=args.delta,
    )
    _emit(args, {"command": "synth pair", "config": _run_config(args), **report})
    cert = report["certificate"]
    if not (cert["diophantine_ok"] and cert["signs_agree"]):
        return _fail(CERT_EXIT, "pair certificate failed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lmono",
        description="sign patterns of log-derivatives of Dirichlet L-functions",
    )
    p.add_argument("--cache", help="cache directory (default $LMONO_CACHE or cwd)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_T=True):
        sp.add_argument("-d", type=int, required=True, help="fundamental discriminant")
        if with_T:
            sp.add_argument("-T", type=float, default=100.0, help="zero-list height")
        sp.add_argument("--tolerance", type=float, default=1e-9)
        sp.add_argument("--json", action="store_true", default=True)
        sp.add_argument("--csv", dest="csv", action="store_true")

    sp = sub.add_parser("zeros", help="scan/load zeros, verify the count, cache")
    common(sp)
    sp.set_defaults(func=cmd_zeros)

    sp = sub.add_parser("deriv", help="F^(k)(s) by series and/or zero sum")
    common(sp)
    sp.add_argument("-s", type=float, required=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument(
        "--method", choices=("series", "zerosum", "both"), default="both"
    )
    sp.set_defaults(func=cmd_deriv)

    sp = sub.add_parser("constants", help="threshold constants block")
    common(sp)
    sp.set_defaults(func=cmd_constants)

    sp = sub.add_parser("scan", help="certified F^(k) zeros in an s-interval")
    common(sp)
    sp.add_argument("-s", required=True, help="interval a,b")
    sp.add_argument("--kmax", type=int, required=True)
    sp.add_argument("--limit", type=int, default=100, help="findings to print")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("fingerprint", help="sign fingerprint over a k-range")
    common(sp)
    sp.add_argument("-s", type=float, required=True)
    sp.add_argument("-k", required=True, help="k or k_lo:k_hi")
    sp.set_defaults(func=cmd_fingerprint)

    sp = sub.add_parser("compare", help="first separating k between s1 and s2")
    common(sp)
    sp.add_argument("--s1", type=float, required=True)
    sp.add_argument("--s2", type=float, required=True)
    sp.add_argument("--kmax", type=int, default=10**5)
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("synth", help="synthetic zero-set constructions")
    sp.add_argument("mode", choices=("siegel", "pair"))
    sp.add_argument("--beta", type=float, default=0.99)
    sp.add_argument("--base", type=int, default=-4)
    sp.add_argument("-T", type=float, default=100.0)
    sp.add_argument("--s", default="2,3,5")
    sp.add_argument("--span", type=int, default=500)
    sp.add_argument("--rho0", default="0.5,6")
    sp.add_argument("--rho1", default="0.75,9")
    sp.add_argument("--delta", type=float, default=1e-3)
    sp.add_argument("--tolerance", type=float, default=1e-9)
    sp.add_argument("--json", action="store_true", default=True)
    sp.add_argument("--csv", action="store_true")
    sp.set_defaults(func=cmd_synth)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_EXIT if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    except LmonoError as exc:
        return _fail(DATA_EXIT, f"{type(exc).__name__}: {exc}")
    except ValueError as exc:
        return _fail(USAGE_EXIT, str(exc))


if __name__ == "__main__":
    sys.exit(main())
