"""Command-line surface: evaluate, predict, classify, simulate, export.

Every subcommand writes a run manifest (JSON) describing the invocation;
`zetacond replay manifest.json` re-executes it, and sequential reruns are
bit-identical.  Exit codes: 0 success / all checks passed, 1 check failure,
2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import monte_carlo, predictor, zeta_zeros
from .errors import ZetacondError
from .prime_zeta import prime_zeta, prime_zeta_truncated, re_prime_zeta
from .zeta_zeros import ZeroSource, ZeroTable

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _write_manifest(subcommand: str, params: dict, output_paths: list[str], manifest_path) -> None:
    manifest = {
        "schema_version": SCHEMA_VERSION,
        "subcommand": subcommand,
        "parameters": params,
        "seed": params.get("seed"),
        "output_paths": output_paths,
    }
    with open(manifest_path, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _manifest_path(args, default_stem: str) -> Path:
    if args.manifest:
        return Path(args.manifest)
    out = getattr(args, "out", None)
    if out:
        return Path(str(out) + ".manifest.json")
    return Path(f"{default_stem}.manifest.json")


def _params_from_args(args, names) -> dict:
    return {name: getattr(args, name.replace("-", "_")) for name in names}


# ---------------------------------------------------------------------------
# subcommands


def _cmd_primezeta(args) -> int:
    if args.sigma is None and args.s_re is None:
        raise ZetacondError("provide --sigma/--delta or --s-re/--s-im")
    if args.sigma is not None:
        sigma, delta = args.sigma, args.delta if args.delta is not None else 0.0
    else:
        sigma, delta = args.s_re, args.s_im
    if args.truncated is not None:
        value = prime_zeta_truncated(complex(sigma, delta), args.truncated)
    elif delta == 0.0 or args.s_re is not None:
        value = prime_zeta(complex(sigma, delta))
    else:
        value = complex(re_prime_zeta(sigma, delta), 0.0)
    if value.imag == 0.0:
        print(f"{value.real:.12g}")
    else:
        print(f"{value.real:.12g} {value.imag:.12g}")
    params = _params_from_args(args, ["sigma", "delta", "s_re", "s_im", "truncated"])
    _write_manifest("primezeta", params, [], _manifest_path(args, "primezeta"))
    return EXIT_OK


def _resolve_anchor(args) -> float:
    if args.t_anchor is not None:
        return args.t_anchor
    if not args.zero_table:
        raise ZetacondError("provide --t-anchor or --zero-table with --zero-index")
    table = zeta_zeros.load_zero_table(args.zero_table)
    index = args.zero_index if args.zero_index is not None else len(table)
    return table.ordinate(index)


def _cmd_predict(args) -> int:
    t_anchor = _resolve_anchor(args)
    grid = np.arange(args.delta_min, args.delta_max + 0.5 * args.delta_step, args.delta_step)
    curve = predictor.zero_conditional_tail_curve(
        grid, t_anchor, threshold_multiplier=args.threshold_multiplier
    )
    outputs = [args.out]
    predictor.write_curve_csv(curve, args.out, threshold_multiplier=args.threshold_multiplier)
    if args.svg or args.mark_zeros:
        ordinates = ()
        if args.mark_zeros:
            t_max = min(max(args.delta_max, 15.0), 1000.0)
            ordinates = zeta_zeros.find_zeros(t_max).ordinates
        if args.svg:
            predictor.write_curve_svg(curve, args.svg, zero_ordinates=ordinates)
            outputs.append(args.svg)
    params = _params_from_args(
        args,
        ["t_anchor", "zero_table", "zero_index", "delta_min", "delta_max",
         "delta_step", "threshold_multiplier", "out", "svg", "mark_zeros"],
    )
    params["t_anchor"] = t_anchor
    _write_manifest("predict", params, outputs, _manifest_path(args, "predict"))
    return EXIT_OK


def _cmd_classify(args) -> int:
    if args.modulus is not None and args.modulus > 1:
        from .dirichlet_l import l_classify

        verdict = l_classify(args.sigma, args.delta, args.modulus, args.tolerance)
    else:
        verdict = predictor.classify_off_critical(args.sigma, args.delta, args.tolerance)
    print(json.dumps(
        {"case": verdict.case.value, "discriminant": verdict.discriminant},
        sort_keys=True,
    ))
    params = _params_from_args(args, ["sigma", "delta", "modulus", "tolerance"])
    _write_manifest("classify", params, [], _manifest_path(args, "classify"))
    return EXIT_OK


def _cmd_mc(args) -> int:
    cfg = monte_carlo.MCConfig(
        t_lower=args.T,
        sample_count=args.M,
        seed=args.seed,
        sigma=args.sigma,
        cutoff=args.X,
        delta_list=tuple(args.delta or ()),
    )
    result = monte_carlo.run_check(args.check, cfg, workers=args.workers)
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(result, fh, sort_keys=True, indent=2)
        fh.write("\n")
    params = _params_from_args(
        args, ["check", "T", "M", "X", "sigma", "delta", "seed", "workers", "out"]
    )
    _write_manifest("mc", params, [args.out], _manifest_path(args, "mc"))
    return EXIT_OK if all(result["pass"]) else EXIT_CHECK_FAILED


def _cmd_zeros(args) -> int:
    if args.t_max > 1000.0:
        raise ZetacondError("--t-max is capped at 1000 (desk envelope)")
    if args.t_max < zeta_zeros.FIRST_ORDINATE:
        table = ZeroTable(np.array([]), ZeroSource.COMPUTED)
    else:
        table = zeta_zeros.find_zeros(max(args.t_max, 15.0))
        keep = table.ordinates[table.ordinates <= args.t_max]
        table = ZeroTable(keep, ZeroSource.COMPUTED)
    zeta_zeros.write_zero_table(table, args.out, header=f"zeros of zeta below t = {args.t_max}")
    params = _params_from_args(args, ["t_max", "out"])
    _write_manifest("zeros", params, [args.out], _manifest_path(args, "zeros"))
    return EXIT_OK


def _cmd_replay(args) -> int:
    with open(args.manifest_file, "r", encoding="utf-8") as fh:
        manifest = json.load(fh)
    sub = manifest["subcommand"]
    params = manifest["parameters"]
    argv = [sub]
    flag_of = {
        "s_re": "--s-re", "s_im": "--s-im", "t_anchor": "--t-anchor",
        "zero_table": "--zero-table", "zero_index": "--zero-index",
        "delta_min": "--delta-min", "delta_max": "--delta-max",
        "delta_step": "--delta-step", "threshold_multiplier": "--threshold-multiplier",
        "mark_zeros": "--mark-zeros", "t_max": "--t-max",
    }
    for key, value in params.items():
        if value is None or value is False:
            continue
        flag = flag_of.get(key, f"--{key.replace('_', '-')}")
        if value is True:
            argv.append(flag)
        elif isinstance(value, (list, tuple)):
            argv.append(flag)
            argv.extend(str(v) for v in value)
        else:
            argv.extend([flag, str(value)])
    return main(argv)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zetacond",
        description="Conditional value distributions of log|zeta| around zeros",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("primezeta", help="evaluate the prime zeta function")
    p.add_argument("--sigma", type=float)
    p.add_argument("--delta", type=float)
    p.add_argument("--s-re", type=float)
    p.add_argument("--s-im", type=float, default=0.0)
    p.add_argument("--truncated", type=int, metavar="X")
    p.add_argument("--manifest")
    p.set_defaults(func=_cmd_primezeta)

    p = sub.add_parser("predict", help="critical-line tail-probability curve")
    p.add_argument("--t-anchor", type=float)
    p.add_argument("--zero-table")
    p.add_argument("--zero-index", type=int)
    p.add_argument("--delta-min", type=float, required=True)
    p.add_argument("--delta-max", type=float, required=True)
    p.add_argument("--delta-step", type=float, required=True)
    p.add_argument("--threshold-multiplier", type=float, default=-3.0)
    p.add_argument("--out", required=True)
    p.add_argument("--svg")
    p.add_argument("--mark-zeros", action="store_true")
    p.add_argument("--manifest")
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("classify", help="off-critical divergence classification")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--modulus", type=int)
    p.add_argument("--tolerance", type=float, default=1e-8)
    p.add_argument("--manifest")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("mc", help="Monte Carlo verification checks")
    p.add_argument("--check", required=True,
                   choices=["variance", "autocov", "clt", "slope", "appendix-b"])
    p.add_argument("--T", type=float, default=1e6)
    p.add_argument("--M", type=int, default=10**4)
    p.add_argument("--X", type=int, default=10**4)
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--delta", type=float, nargs="*")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True)
    p.add_argument("--manifest")
    p.set_defaults(func=_cmd_mc)

    p = sub.add_parser("zeros", help="write a table of critical-line zeros")
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--manifest")
    p.set_defaults(func=_cmd_zeros)

    p = sub.add_parser("replay", help="re-run a manifest")
    p.add_argument("manifest_file")
    p.set_defaults(func=_cmd_replay)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ZetacondError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
