"""Command line front end: ber / rate / gain sweeps and a selftest battery.

Grids are written start:stop:step (inclusive of stop up to rounding) or as
comma lists.  All CSV goes to --output, default stdout.  Exit codes:
0 success, 2 usage error, 3 ran fine but produced no data rows.
"""

import argparse
import sys

import numpy as np

from . import selftest as selftest_mod
from .harness import (RECEIVER_IDS, SimConfig, run_ber_sweep, run_rate_sweep,
                      write_ber_csv, write_rate_csv)
from .inforate import QuadratureSpec


def parse_grid(text):
    """-6:6:0.5 or 1,2,3 -> list of floats."""
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError("grid must be start:stop:step")
        start, stop, step = (float(p) for p in parts)
        if step <= 0:
            raise ValueError("grid step must be positive")
        count = int(round((stop - start) / step))
        grid = [start + i * step for i in range(count + 1)]
        return [g for g in grid if g <= stop + 1e-9]
    return [float(p) for p in text.split(",") if p.strip()]


def _add_grid_args(sub):
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--snr-o-db", help="optical SNR grid in dB")
    group.add_argument("--snr-e-db", help="electrical SNR grid in dB")


def _resolve_grid(args):
    if args.snr_o_db is not None:
        return parse_grid(args.snr_o_db), "optical"
    return parse_grid(args.snr_e_db), "electrical"


def build_parser():
    parser = argparse.ArgumentParser(
        prog="optofdm",
        description="clipped optical OFDM simulation and rate analysis")
    subs = parser.add_subparsers(dest="command", required=True)

    ber = subs.add_parser("ber", help="Monte-Carlo BER sweep")
    _add_grid_args(ber)
    ber.add_argument("--scheme", default="aco",
                     choices=("aco", "flip", "pamdmt"))
    ber.add_argument("--constellation", default="qam4")
    ber.add_argument("--receivers", "--receiver", default="conventional",
                     help="comma list, or 'all'")
    ber.add_argument("--n", type=int, default=64)
    ber.add_argument("--target-errors", type=int, default=200)
    ber.add_argument("--max-frames", type=int, default=100_000)
    ber.add_argument("--batch-frames", type=int, default=250)
    ber.add_argument("--seed", type=int, default=2024)
    ber.add_argument("--output", default="-")

    rate = subs.add_parser("rate", help="numerical rate quantities")
    _add_grid_args(rate)
    rate.add_argument("--input", default="gaussian",
                      help="gaussian or a constellation name (e.g. qam16)")
    rate.add_argument("--quantities", default="all",
                      help="comma list; default all for the input kind")
    rate.add_argument("--tol-bits", type=float, default=1e-7)
    rate.add_argument("--output", default="-")

    gain = subs.add_parser("gain", help="SNR gain of pair-aware reception")
    _add_grid_args(gain)
    gain.add_argument("--tol-bits", type=float, default=1e-7)
    gain.add_argument("--output", default="-")

    subs.add_parser("selftest", help="run the invariant battery")
    return parser


def _emit(write, points, output):
    if output == "-":
        write(points, sys.stdout)
    else:
        write(points, output)


def _cmd_ber(args):
    grid, axis = _resolve_grid(args)
    receivers = (tuple(RECEIVER_IDS) if args.receivers == "all"
                 else tuple(r.strip() for r in args.receivers.split(",")))
    config = SimConfig(scheme=args.scheme, constellation=args.constellation,
                       receivers=receivers, n=args.n,
                       snr_grid_db=tuple(grid), snr_axis=axis,
                       target_errors=args.target_errors,
                       max_frames=args.max_frames,
                       batch_frames=args.batch_frames,
                       master_seed=args.seed)
    points = run_ber_sweep(config)
    _emit(write_ber_csv, points, args.output)
    return 0 if points else 3


def _cmd_rate(args):
    grid, axis = _resolve_grid(args)
    if axis == "electrical":
        grid = [v / 2.0 - 10.0 * np.log10(np.pi) / 2.0 for v in grid]
    kind = args.input
    if args.quantities == "all":
        quantities = None
    else:
        # unknown names surface as ValueError -> usage exit in main
        quantities = tuple(q.strip() for q in args.quantities.split(","))
    spec = QuadratureSpec(tol_bits=args.tol_bits)
    points = run_rate_sweep(grid, input_kind=kind, quantities=quantities,
                            spec=spec)
    _emit(write_rate_csv, points, args.output)
    return 0 if points or not grid else 3


def _cmd_gain(args):
    grid, axis = _resolve_grid(args)
    if axis == "electrical":
        grid = [v / 2.0 - 10.0 * np.log10(np.pi) / 2.0 for v in grid]
    spec = QuadratureSpec(tol_bits=args.tol_bits)
    points = run_rate_sweep(grid, quantities=("optical_gain_db",
                                              "electrical_gain_db"),
                            spec=spec)
    _emit(write_rate_csv, points, args.output)
    return 0 if points or not grid else 3


def _merge_grid_flags(argv):
    # argparse reads "-30:30:1" as an option; fold grids into --flag=value
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--snr-o-db", "--snr-e-db") and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None):
    parser = build_parser()
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    args = parser.parse_args(_merge_grid_flags(argv))
    try:
        if args.command == "ber":
            return _cmd_ber(args)
        if args.command == "rate":
            return _cmd_rate(args)
        if args.command == "gain":
            return _cmd_gain(args)
        if args.command == "selftest":
            return selftest_mod.run(sys.stdout)
    except ValueError as exc:
        parser.exit(2, f"optofdm: {exc}\n")
    return 2


if __name__ == "__main__":
    sys.exit(main())
