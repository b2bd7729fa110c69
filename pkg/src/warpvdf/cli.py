"""Command-line interface: design, tune, response, filter, cost.

Exit codes: 0 success, 2 input or spec error, 3 tuning infeasible.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import cost
from .analyzer import DEFAULT_GRID
from .errors import DomainError, InfeasibleSpecError, NotBandpassError, TuningInfeasibleError
from .prototype import FilterSpec, PrototypeFilter, design_bandpass, overdesign_margin
from .signalfile import read_signal, write_signal
from .vdf import VariableFilter

EXIT_INPUT = 2
EXIT_INFEASIBLE = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_proto(path: str) -> PrototypeFilter:
    try:
        return PrototypeFilter.from_json(Path(path).read_text())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise CliError(f"cannot read prototype {path}: {exc}") from exc


def _tuned(proto, center, bandwidth, m_max) -> VariableFilter:
    try:
        return VariableFilter.build(proto, center, bandwidth, m_max)
    except (TuningInfeasibleError, DomainError) as exc:
        raise CliError(f"tuning infeasible: {exc}", EXIT_INFEASIBLE) from exc


def cmd_design(args) -> None:
    try:
        spec = FilterSpec(args.center, args.bandwidth, args.ripple_db, args.atten_db, args.transition)
        spec.check_decimation(args.max_m)
        spec = spec.with_margin(overdesign_margin(args.atten_db, args.max_m))
        proto = design_bandpass(spec, max_order=args.max_order)
    except InfeasibleSpecError as exc:
        raise CliError(f"infeasible spec: {exc}") from exc
    _emit(proto.to_text() if args.text else proto.to_json() + "\n", args.out)


def cmd_tune(args) -> None:
    proto = _load_proto(args.proto)
    vdf = _tuned(proto, args.center, args.bandwidth, args.m_max)
    try:
        report = vdf.report
    except NotBandpassError as exc:
        raise CliError(f"tuned response is not measurable: {exc}", EXIT_INFEASIBLE) from exc
    _emit(json.dumps(report, indent=2) + "\n", args.out)


def cmd_response(args) -> None:
    knobs = args.alpha is not None or args.m is not None
    targets = args.center is not None or args.bandwidth is not None
    if knobs == targets:
        raise CliError("give exactly one of (--alpha, --m) or (--center, --bandwidth)")
    proto = _load_proto(args.proto)
    if knobs:
        try:
            vdf = VariableFilter.from_params(proto, args.alpha or 0.0, args.m or 1, args.m_max)
        except (TuningInfeasibleError, DomainError) as exc:
            raise CliError(f"invalid parameters: {exc}", EXIT_INFEASIBLE) from exc
    else:
        if args.center is None or args.bandwidth is None:
            raise CliError("--center and --bandwidth must be given together")
        vdf = _tuned(proto, args.center, args.bandwidth, args.m_max)
    if args.grid < 16:
        raise CliError("--grid must be >= 16")
    _emit(vdf.response(args.grid).to_csv(), args.out)
    if args.measure_out:
        try:
            meas = vdf.measure(args.grid)
        except NotBandpassError as exc:
            raise CliError(f"response is not measurable: {exc}") from exc
        Path(args.measure_out).write_text(meas.to_json() + "\n")


def _parse_retune(text: str) -> tuple[int, float, float]:
    try:
        n, c, b = text.split(":")
        return int(n), float(c), float(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n:center:bandwidth, got {text!r}") from None


def cmd_filter(args) -> None:
    proto = _load_proto(args.proto)
    try:
        x = read_signal(args.inp, args.binary)
    except (OSError, ValueError) as exc:
        raise CliError(f"cannot read signal: {exc}") from exc
    points = sorted(args.retune_at or [])
    idx = [p[0] for p in points]
    if any(b <= a for a, b in zip(idx, idx[1:])) or any(i < 0 for i in idx):
        raise CliError("--retune-at sample indices must be non-negative and strictly increasing")

    vdf = _tuned(proto, args.center, args.bandwidth, args.m_max)
    y = np.empty_like(x)
    start = 0
    for n, c, b in points + [(x.size, None, None)]:
        n = min(n, x.size)
        y[start:n] = vdf.process(x[start:n])
        start = n
        if c is not None:
            try:
                vdf.retune(c, b)
            except (TuningInfeasibleError, DomainError) as exc:
                Path(args.out).unlink(missing_ok=True)
                raise CliError(f"retune at sample {n} infeasible: {exc}", EXIT_INFEASIBLE) from exc
    write_signal(args.out, y, args.binary)


def cmd_cost(args) -> None:
    fit = cost.derive_unit_costs()
    reports = cost.cost_reports(fit.costs)
    if args.json:
        _emit(cost.reports_json(reports, fit) + "\n", args.out)
    else:
        _emit(cost.format_table(reports, fit) + "\n", args.out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="warpvdf", description="Variable bandpass filter via allpass warping and coefficient decimation")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("design", help="design the fixed bandpass prototype")
    d.add_argument("--center", type=float, default=0.14)
    d.add_argument("--bandwidth", type=float, default=0.02)
    d.add_argument("--ripple-db", type=float, default=0.002)
    d.add_argument("--atten-db", type=float, default=90.0)
    d.add_argument("--transition", type=float, default=0.02)
    d.add_argument("--max-m", type=int, default=5, help="largest decimation factor to budget stopband margin for")
    d.add_argument("--max-order", type=int, default=4096)
    d.add_argument("--text", action="store_true", help="plain text, one coefficient per line")
    d.add_argument("--out")
    d.set_defaults(func=cmd_design)

    t = sub.add_parser("tune", help="compute (alpha, M) for a target and measure the result")
    t.add_argument("--proto", required=True)
    t.add_argument("--center", type=float, required=True)
    t.add_argument("--bandwidth", type=float, required=True)
    t.add_argument("--m-max", type=int, default=8)
    t.add_argument("--out")
    t.set_defaults(func=cmd_tune)

    r = sub.add_parser("response", help="write the magnitude/phase response as CSV")
    r.add_argument("--proto", required=True)
    r.add_argument("--alpha", type=float)
    r.add_argument("--m", type=int)
    r.add_argument("--center", type=float)
    r.add_argument("--bandwidth", type=float)
    r.add_argument("--grid", type=int, default=DEFAULT_GRID)
    r.add_argument("--m-max", type=int, default=8)
    r.add_argument("--measure-out", help="also write the bandpass measurement JSON here")
    r.add_argument("--out")
    r.set_defaults(func=cmd_response)

    f = sub.add_parser("filter", help="stream a signal through the filter, optionally retuning")
    f.add_argument("--proto", required=True)
    f.add_argument("--center", type=float, required=True)
    f.add_argument("--bandwidth", type=float, required=True)
    f.add_argument("--in", dest="inp", required=True)
    f.add_argument("--out", required=True)
    f.add_argument("--retune-at", type=_parse_retune, action="append", metavar="N:CENTER:BW")
    f.add_argument("--binary", action="store_true", help="raw little-endian float64 signal files")
    f.add_argument("--m-max", type=int, default=8)
    f.set_defaults(func=cmd_filter)

    c = sub.add_parser("cost", help="gate-count comparison table")
    c.add_argument("--json", action="store_true")
    c.add_argument("--out")
    c.set_defaults(func=cmd_cost)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except CliError as exc:
        print(f"warpvdf {args.command}: {exc}", file=sys.stderr)
        return exc.code
    return 0


if __name__ == "__main__":
    sys.exit(main())
