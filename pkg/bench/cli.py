"""
bench/cli.py
------------
Greenlight – Command Line

Usage:
    python -m bench simulate optical -n 3 --codeword 5
    python -m bench simulate digital -n 3 --codeword 5 --format csv
    python -m bench device power-curve --out out/
    python -m bench device delay-curve --device SiRA04DP
    python -m bench compare -n 10 --policy fixed:80e-9 --stage-delay 1e-11
    python -m bench plan dump -n 3

Exit codes: 0 success, 1 decode failure, 2 configuration error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from digital.symbols   import NetlistConsistencyError
from digital.network   import DigitalDecodeError
from hadamard.topology import build_butterfly
from optical.network   import NoSignalError

from .config import CompareConfig, ConfigError
from .runner import (
    DecodeFailure,
    emit_delay_curves,
    emit_power_curves,
    emit_report,
    run_compare,
    simulate_digital,
    simulate_optical,
    write_csv,
)

logger = logging.getLogger("greenlight.bench.cli")

EXIT_OK, EXIT_DECODE, EXIT_CONFIG, EXIT_IO = 0, 1, 2, 3


def _common_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("-n", "--order", type=int, help="Code order n (2^n modes).")
    p.add_argument("--vgs", type=float, help="Gate-source voltage in volts; also the power-curve voltage.")
    p.add_argument("--rgext", type=float, help="External gate resistance in ohms.")
    p.add_argument("--device", action="append", metavar="PRESET|PATH",
                   help="MOSFET preset or JSON file; repeat for NMOS and PMOS.")
    p.add_argument("--policy", help="AND delay policy: stage-worst-case, on-plus-off, serial-sum, fixed:<seconds>.")
    p.add_argument("--phi", choices=["0", "pi2"], help="Beamsplitter phase convention.")
    p.add_argument("--phase-correction", action="store_true", default=None,
                   help="Wrap every splitter with hi-port phase shifters.")
    p.add_argument("--stage-delay", type=float, help="Optical delay per splitter in seconds.")
    p.add_argument("--alpha", type=float, help="Coherent amplitude per mode.")
    p.add_argument("--seed", type=int, help="Seed for sampled verification codewords.")
    p.add_argument("--link-propagation", type=float, help="Informational link propagation time (s).")
    p.add_argument("--out", help="Output directory.")
    p.add_argument("--format", choices=["csv", "json", "text"], help="Output format.")
    p.add_argument("--config", help="JSON config file (keys are CompareConfig fields).")
    p.add_argument("-v", "--verbose", action="store_true", help="Debug logging.")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="python -m bench",
        description="Optical vs. electronic Hadamard receiver: simulation, device curves, comparison.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", parents=[common], help="Decode one codeword on one receiver.")
    sim.add_argument("substrate", choices=["optical", "digital"])
    sim.add_argument("--codeword", type=int, default=0, help="Codeword index j.")
    sim.add_argument("--invert", action="store_true", help="Digital: encode with inverted polarity.")

    dev = sub.add_parser("device", parents=[common], help="Emit device curves.")
    dev.add_argument("curve", choices=["power-curve", "delay-curve"])

    sub.add_parser("compare", parents=[common], help="Verify both receivers and write the comparison report.")

    plan = sub.add_parser("plan", parents=[common], help="Butterfly plan.")
    plan.add_argument("action", choices=["dump"])
    return parser


def load_config(args: argparse.Namespace) -> CompareConfig:
    base = CompareConfig.load(args.config) if args.config else CompareConfig()
    # power curves are drawn at --vgs when given; delay curves sweep v_gs themselves
    curve_vgs = [args.vgs] if args.command == "device" and args.vgs is not None else None
    return base.merged(
        order=args.order,
        v_gs=args.vgs,
        r_gext=args.rgext,
        devices=args.device,
        policy=args.policy,
        phi=args.phi,
        phase_correction=args.phase_correction,
        stage_delay=args.stage_delay,
        alpha=args.alpha,
        seed=args.seed,
        link_propagation_s=args.link_propagation,
        out_dir=args.out,
        curve_gate_voltages=curve_vgs,
    ).validate()


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _cmd_simulate(args: argparse.Namespace, config: CompareConfig) -> int:
    fmt = args.format or "text"
    trace_path = None
    if fmt == "csv":
        trace_path = Path(config.out_dir) / f"trace_{args.substrate}_n{config.order}_j{args.codeword}.csv"
    try:
        if args.substrate == "optical":
            result = simulate_optical(config, args.codeword, trace_path=trace_path)
        else:
            result = simulate_digital(config, args.codeword, invert=args.invert, trace_path=trace_path)
    except (NoSignalError, DigitalDecodeError, NetlistConsistencyError) as exc:
        raise DecodeFailure(str(exc), trace_path) from exc

    if fmt == "json":
        print(json.dumps(result, indent=2))
    elif fmt == "text":
        print("  ".join(f"{k}={v:.6e}" if isinstance(v, float) else f"{k}={v}" for k, v in result.items()))
    else:
        print(trace_path)
    if result["decoded"] != args.codeword:
        logger.error("[Compare] Codeword %d decoded as %d", args.codeword, result["decoded"])
        return EXIT_DECODE
    return EXIT_OK


def _cmd_device(args: argparse.Namespace, config: CompareConfig) -> int:
    paths = emit_power_curves(config) if args.curve == "power-curve" else emit_delay_curves(config)
    for p in paths:
        print(p)
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace, config: CompareConfig) -> int:
    fmt = args.format or "json"
    if fmt == "csv":
        raise ConfigError("compare writes json or text reports")
    report = run_compare(config)
    suffix = "json" if fmt == "json" else "txt"
    path = emit_report(report, Path(config.out_dir) / f"compare_n{config.order}.{suffix}", fmt)
    print(report.summary())
    print(f"  Report: {path}")
    return EXIT_OK


def _cmd_plan(args: argparse.Namespace, config: CompareConfig) -> int:
    plan = build_butterfly(config.order, cap=config.max_order)
    if args.format == "csv":
        rows = [
            {"stage": s, "lo": lo, "hi": hi}
            for s in range(plan.depth) for lo, hi in plan.pairs(s)
        ]
        print(write_csv(rows, ["stage", "lo", "hi"], Path(config.out_dir) / f"plan_n{config.order}.csv"))
    else:
        print(plan.to_json(indent=2))
    return EXIT_OK


_COMMANDS = {
    "simulate": _cmd_simulate,
    "device":   _cmd_device,
    "compare":  _cmd_compare,
    "plan":     _cmd_plan,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        config = load_config(args)
        return _COMMANDS[args.command](args, config)
    except DecodeFailure as exc:
        logger.error("%s", exc)
        return EXIT_DECODE
    except ValueError as exc:
        logger.error("Configuration error: %s", exc)
        return EXIT_CONFIG
    except OSError as exc:
        logger.error("I/O error: %s", exc)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
