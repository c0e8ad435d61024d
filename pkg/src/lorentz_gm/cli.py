"""Command-line driver: one subcommand per module, plus the verify suites.

Exit codes: 0 success, 1 malformed input, 2 failed verification,
3 quadrature nonconvergence.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import __version__
from .fourier import dirichlet_bound_report, l1_norm_trig, weak_l1_report
from .gm import gm_constant_step, gms1_constant, gms2_constant, gms_constant
from .hardy import hardy_report
from .interpolate import gms_decomposition, interpolation_norm, k_functional, k_functional_oracle
from .model import (
    PQ,
    VerificationReport,
    dump_function,
    dump_sequence,
    load_function,
    load_sequence,
    make_report,
    write_reports_csv,
)
from .norms import lorentz_norm_seq, lorentz_norm_step, weighted_norm_seq, weighted_norm_step
from .quadrature import NonconvergenceError
from .rearrange import rearrange_seq, rearrange_step
from .verify import SUITES, run_suites

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_FAILED = 2
EXIT_NONCONVERGED = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse failures to exit code 1
        raise _UsageError(message)


def _parse_t_grid(text: str) -> np.ndarray:
    """'1e-3:10:50' -> 50 log-spaced points from 1e-3 to 10."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError("t-grid must look like lo:hi:count")
    lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    if not 0 < lo < hi or count < 2:
        raise ValueError("t-grid needs 0 < lo < hi and count >= 2")
    return np.geomspace(lo, hi, count)


def _load_input(args, want="either"):
    seq = getattr(args, "seq", None)
    fn = getattr(args, "fn", None)
    if seq and fn:
        raise ValueError("give --seq or --fn, not both")
    if want in ("either", "seq") and seq:
        return "seq", load_sequence(seq)
    if want in ("either", "fn") and fn:
        return "fn", load_function(fn)
    raise ValueError(f"this command needs --{'seq' if want == 'seq' else 'fn' if want == 'fn' else 'seq or --fn'}")


def _emit_lines(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_reports(rows: list[VerificationReport], out: str | None) -> int:
    if out:
        write_reports_csv(rows, out)
    for r in rows:
        print(f"{r.name}: lhs={r.lhs:.9g} rhs={r.rhs:.9g} c={r.constant:.9g} "
              f"-> {'pass' if r.passed else 'FAIL'}")
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAILED


def _cmd_rearrange(args) -> int:
    kind, obj = _load_input(args)
    if kind == "seq":
        payload = dump_sequence(rearrange_seq(obj))
    else:
        payload = dump_function(rearrange_step(obj))
    text = json.dumps(payload, indent=2, sort_keys=True)
    _emit_lines([text], args.out)
    return EXIT_OK


def _cmd_norm(args) -> int:
    pq = PQ(args.p, args.q)
    kind, obj = _load_input(args)
    lines = ["name,value"]
    if kind == "seq":
        lines.append(f"weighted,{weighted_norm_seq(obj, pq)!r}")
        lines.append(f"lorentz,{lorentz_norm_seq(obj, pq)!r}")
    else:
        f = obj.plain()
        lines.append(f"weighted,{weighted_norm_step(f, pq)!r}")
        lines.append(f"lorentz,{lorentz_norm_step(f, pq)!r}")
    _emit_lines(lines, args.out)
    return EXIT_OK


def _cmd_gm(args) -> int:
    kind, obj = _load_input(args)
    lines = ["name,value"]
    if kind == "seq":
        for tag, fn in (("gms", gms_constant), ("gms1", gms1_constant), ("gms2", gms2_constant)):
            lines.append(f"{tag},{fn(obj).constant!r}")
    else:
        for tag in ("GM", "GM1", "GM2"):
            lines.append(f"{tag},{gm_constant_step(obj, variant=tag).constant!r}")
    _emit_lines(lines, args.out)
    return EXIT_OK


def _cmd_kfun(args) -> int:
    _, c = _load_input(args, want="seq")
    if args.t_grid:
        lines = ["t,k"]
        for t in _parse_t_grid(args.t_grid):
            lines.append(f"{float(t)!r},{k_functional(c, float(t))!r}")
        _emit_lines(lines, args.out)
        return EXIT_OK
    if args.t is None:
        raise ValueError("kfun needs --t or --t-grid")
    k = k_functional(c, args.t)
    lines = [f"{k!r}"]
    if args.grid:
        oracle = k_functional_oracle(c, args.t, grid_resolution=args.grid)
        lines.append(f"oracle {oracle!r} (diff {abs(k - oracle):.3e})")
    _emit_lines(lines, args.out)
    return EXIT_OK


def _cmd_interp(args) -> int:
    _, c = _load_input(args, want="seq")
    if args.theta is None:
        raise ValueError("interp needs --theta")
    value = interpolation_norm(c, args.theta, args.q, rel_tol=args.tol)
    _emit_lines([f"{value!r}"], args.out)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    _, c = _load_input(args, want="seq")
    alpha = args.alpha if args.alpha is not None else 0.0
    if args.t_grid:
        lines = ["t,cost,k,ratio"]
        worst = 0.0
        for t in _parse_t_grid(args.t_grid):
            d = gms_decomposition(c, float(t), alpha=alpha)
            worst = max(worst, d.ratio)
            lines.append(f"{float(t)!r},{d.cost!r},{d.k_value!r},{d.ratio!r}")
        _emit_lines(lines, args.out)
        return EXIT_OK if worst <= 4.5 else EXIT_FAILED
    if args.t is None:
        raise ValueError("decompose needs --t or --t-grid")
    d = gms_decomposition(c, args.t, alpha=alpha)
    _emit_lines(
        [f"t={d.t!r} cost={d.cost!r} k={d.k_value!r} ratio={d.ratio!r}"], args.out
    )
    return EXIT_OK if d.ratio <= 4.5 else EXIT_FAILED


def _cmd_fourier(args) -> int:
    _, c = _load_input(args, want="seq")
    n = len(c)
    if n == 0 or not any(c.values):
        raise ValueError("fourier needs a nonzero sequence")
    grid = args.grid or 400
    xs = tuple(np.linspace(1e-3, math.pi, grid))
    rows = [dirichlet_bound_report(c, 1, n, xs, variant="plain")]
    mods = c.moduli()
    b = max(1.0, gms2_constant(c).constant)
    log_weight = math.fsum(m * math.log(k) / k for k, m in enumerate(mods, 1) if k >= 2)
    lhs = l1_norm_trig(c, tol=args.tol)
    rows.append(make_report("l1-log-weight-bound", lhs,
                            2.0 * math.pi * mods[0] + 27.0 * math.pi * b * log_weight, 1.0))
    rows.append(weak_l1_report(c))
    return _emit_reports(rows, args.out)


def _cmd_hardy(args) -> int:
    _, f = _load_input(args, want="fn")
    if args.alpha is None:
        raise ValueError("hardy needs --alpha")
    rep = hardy_report(f, args.alpha, args.q, rel_tol=args.tol)
    return _emit_reports([rep], args.out)


def _cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite in (None, "all") else [args.suite]
    results = run_suites(names, seed=args.seed)
    rows = []
    all_pass = True
    print(f"seed={args.seed}")
    for suite in names:
        for r in results[suite]:
            rows.append((suite, r))
            mark = "pass" if r.passed else "FAIL"
            all_pass &= r.passed
            print(f"[{mark}] {suite:18s} {r.name:34s} lhs={r.lhs:.6g} rhs={r.rhs:.6g}")
    if args.out:
        lines = [f"# seed={args.seed}", "suite," + VerificationReport.CSV_HEADER]
        for suite, r in sorted(rows, key=lambda sr: (sr[0], sr[1].name)):
            lines.append(f"{suite},{r.csv_row()}")
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    return EXIT_OK if all_pass else EXIT_FAILED


def build_parser() -> _Parser:
    p = _Parser(prog="lorentz-gm", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(handler=fn)
        sp.add_argument("--seq", help="JSON sequence path")
        sp.add_argument("--fn", help="JSON step-function path")
        sp.add_argument("--p", type=float, default=1.0)
        sp.add_argument("--q", type=float, default=1.0)
        sp.add_argument("--alpha", type=float, default=None)
        sp.add_argument("--phi", type=float, default=None)
        sp.add_argument("--t", type=float, default=None)
        sp.add_argument("--t-grid", dest="t_grid", default=None)
        sp.add_argument("--theta", type=float, default=None)
        sp.add_argument("--tol", type=float, default=1e-8)
        sp.add_argument("--grid", type=int, default=None)
        sp.add_argument("--seed", type=int, default=42)
        sp.add_argument("--out", default=None)
        return sp

    add("rearrange", _cmd_rearrange, help="decreasing rearrangement of the input")
    add("norm", _cmd_norm, help="weighted and rearranged norms for (p, q)")
    add("gm", _cmd_gm, help="window-variation constants of the input")
    add("kfun", _cmd_kfun, help="splitting functional at --t or over --t-grid")
    add("interp", _cmd_interp, help="interpolation-scale norm for (theta, q)")
    add("decompose", _cmd_decompose, help="near-optimal splitting at --t or over --t-grid")
    add("fourier", _cmd_fourier, help="partial-sum, L1, and weak-L1 bound reports")
    add("hardy", _cmd_hardy, help="averaging-transform bound report for (alpha, q)")
    vp = add("verify", _cmd_verify, help="run verification suites")
    vp.add_argument("--suite", default="all", help="suite name or 'all'")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except NonconvergenceError as exc:
        print(f"nonconvergence: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGED
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except RuntimeError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
