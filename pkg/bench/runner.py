"""
bench/runner.py
---------------
Greenlight – Comparison Runner

Drives both receivers and the device models from a `CompareConfig` and
writes every artifact (curves, traces, reports). File writes happen only
here.

Usage
-----
    from bench.config import CompareConfig
    from bench.runner import run_compare, emit_report

    cfg    = CompareConfig(order=10, policy="fixed:80e-9", stage_delay=1e-11).validate()
    report = run_compare(cfg)
    emit_report(report, "out/compare_n10.json", "json")
"""

from __future__ import annotations

import logging
from fractions import Fraction
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd

from devices.and_gate  import and_gate_delay
from devices.sweeps    import delay_sweep, power_summary, power_sweep
from digital.network   import decode_digital, electronic_latency, encode_digital, propagate_digital
from digital.network   import trace_rows as digital_trace_rows
from hadamard.topology import HadamardPlan, beamsplitter_count, build_butterfly
from optical.chip      import chip_traversal_time, optical_latency, optical_power_report
from optical.network   import decode_optical, encode_optical, propagate_optical
from optical.network   import trace_rows as optical_trace_rows

from .config import CompareConfig, ConfigError
from .report import ComparisonReport

logger = logging.getLogger("greenlight.bench.runner")

TRANSISTORS_PER_AND = 6          # 4 NAND + 2 NOT
ANDS_PER_BEAMSPLITTER = 4
CONCENTRATION_TOLERANCE = 1e-9
CSV_FLOAT_FORMAT = "%.12e"


class DecodeFailure(RuntimeError):
    """Raised when a receiver does not decode a verification codeword; carries the trace dump path."""

    def __init__(self, message: str, trace_path: Optional[Path] = None):
        super().__init__(message if trace_path is None else f"{message} (trace: {trace_path})")
        self.trace_path = trace_path


class ReportIOError(OSError):
    """Raised when an artifact cannot be written."""

    def __init__(self, path: Path, cause: OSError):
        super().__init__(f"Cannot write {path}: {cause.strerror or cause}")
        self.path = path


# ---------------------------------------------------------------------------
# File helpers
# ---------------------------------------------------------------------------

def write_csv(rows: list[dict], columns: list[str], path: Path) -> Path:
    """Write *rows* with pandas in a fixed column order and float format."""
    df = pd.DataFrame(rows, columns=columns)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        df.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    except OSError as exc:
        raise ReportIOError(path, exc) from exc
    logger.info("[Compare] Wrote %s (%d rows)", path, len(df))
    return path


def _write_text(text: str, path: Path) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise ReportIOError(path, exc) from exc
    logger.info("[Compare] Wrote %s", path)
    return path


# ---------------------------------------------------------------------------
# Single-codeword simulation
# ---------------------------------------------------------------------------

def simulate_optical(
    config: CompareConfig,
    j: int,
    trace_path: Optional[Path] = None,
) -> dict:
    plan = build_butterfly(config.order, cap=config.max_order)
    trace: list = []
    out = propagate_optical(
        plan, encode_optical(j, config.order, config.alpha),
        spec=config.spec, phase_correction=config.phase_correction, trace=trace,
    )
    index, fraction = decode_optical(out)
    if trace_path is not None:
        write_csv(optical_trace_rows(trace), ["stage", "mode", "re", "im", "energy"], trace_path)
    return {
        "substrate":       "optical",
        "order":           config.order,
        "codeword":        j,
        "decoded":         index,
        "energy_fraction": fraction,
        "peak_amplitude":  abs(complex(out.amplitudes[index])),
        "latency_s":       optical_latency(plan, config.geometry()),
    }


def simulate_digital(
    config: CompareConfig,
    j: int,
    invert: bool = False,
    trace_path: Optional[Path] = None,
) -> dict:
    plan = build_butterfly(config.order, cap=config.max_order)
    trace: list = []
    try:
        out = propagate_digital(plan, encode_digital(j, config.order, invert=invert), trace=trace)
    finally:
        if trace_path is not None:
            write_csv(digital_trace_rows(trace), ["stage", "mode", "symbol_bits"], trace_path)
    index, polarity = decode_digital(out)
    return {
        "substrate": "digital",
        "order":     config.order,
        "codeword":  j,
        "decoded":   index,
        "polarity":  polarity,
    }


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

def verification_codewords(config: CompareConfig) -> np.ndarray:
    """Every codeword up to `exhaustive_limit`, else a seeded sample."""
    size = 1 << config.order
    if config.order <= config.exhaustive_limit:
        return np.arange(size)
    rng = np.random.default_rng(config.seed)
    return np.sort(rng.choice(size, size=min(config.sample_size, size), replace=False))


def _dump_and_fail(config: CompareConfig, substrate: str, j: int, reason: str) -> None:
    path = Path(config.out_dir) / f"trace_{substrate}_n{config.order}_j{j}.csv"
    if substrate == "optical":
        simulate_optical(config, j, trace_path=path)
    else:
        try:
            simulate_digital(config, j, trace_path=path)
        except RuntimeError:
            pass
    logger.error("[Compare] %s decode failed for codeword %d: %s", substrate, j, reason)
    raise DecodeFailure(f"{substrate} receiver failed on codeword {j}: {reason}", path)


def verify_codewords(plan: HadamardPlan, config: CompareConfig, codewords: np.ndarray) -> int:
    """Decode every codeword on both receivers; raise DecodeFailure on the first miss."""
    expected_peak = (1 << plan.order) ** 0.5 * abs(config.alpha)
    for j in (int(c) for c in codewords):
        out = propagate_optical(
            plan, encode_optical(j, plan.order, config.alpha),
            spec=config.spec, phase_correction=config.phase_correction,
        )
        index, fraction = decode_optical(out)
        peak = abs(complex(out.amplitudes[index]))
        if (index != j or fraction < 1 - CONCENTRATION_TOLERANCE
                or abs(peak - expected_peak) > CONCENTRATION_TOLERANCE * expected_peak):
            _dump_and_fail(config, "optical", j, f"mode {index} holds {fraction:.6f} of the energy")

        try:
            d_index, polarity = decode_digital(propagate_digital(plan, encode_digital(j, plan.order)))
        except RuntimeError as exc:
            _dump_and_fail(config, "digital", j, str(exc))
        if d_index != j or polarity != "+":
            _dump_and_fail(config, "digital", j, f"decoded {d_index}{polarity}")
    logger.info("[Compare] Verified %d codeword(s) at n=%d on both receivers", len(codewords), plan.order)
    return len(codewords)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def latency_ratio(and_delay_s: float, stage_delay_s: float) -> float:
    """
    Electronic over optical delay per stage. Depth cancels, and the division
    runs on the decimal values so quoted delays such as 80e-9 / 1e-11 give
    exactly 8000; the result is still a float.
    """
    return float(Fraction(repr(and_delay_s)) / Fraction(repr(stage_delay_s)))


def run_compare(config: CompareConfig) -> ComparisonReport:
    config.validate()
    nmos, pmos = config.resolve_devices()
    plan = build_butterfly(config.order, cap=config.max_order)
    codewords = verification_codewords(config)
    verified = verify_codewords(plan, config, codewords)

    geom = config.geometry()
    breakdown = and_gate_delay(nmos, pmos, config.drive, config.v_gs, config.policy)
    opt_latency = optical_latency(plan, geom)
    el_latency = electronic_latency(plan, breakdown.and_delay_s)
    power = optical_power_report()
    bs = beamsplitter_count(config.order)

    report = ComparisonReport(
        order=config.order,
        depth=plan.depth,
        beamsplitter_count=bs,
        transistor_count=TRANSISTORS_PER_AND * ANDS_PER_BEAMSPLITTER * bs,
        optical_stage_delay_s=geom.stage_delay,
        optical_latency_s=opt_latency,
        electronic_latency_s=el_latency,
        latency_ratio=latency_ratio(breakdown.and_delay_s, geom.stage_delay),
        optical_runtime_power_w=power.runtime_w,
        optical_tuning_power_excluded=power.tuning_excluded,
        and_delay=breakdown,
        power_summary=[power_summary(nmos, config.v_gs), power_summary(pmos, config.v_gs)],
        v_gs=config.v_gs,
        r_gext=config.r_gext,
        phi=config.phi,
        phase_correction=config.phase_correction,
        codewords_verified=verified,
        verification="exhaustive" if config.order <= config.exhaustive_limit else "sampled",
        chip_traversal_s=chip_traversal_time(geom),
        link_propagation_s=config.link_propagation_s,
    )
    logger.info(
        "[Compare] n=%d: electronic %.6e s / optical %.6e s = %.6e",
        config.order, el_latency, opt_latency, report.latency_ratio,
    )
    return report


def emit_power_curves(config: CompareConfig) -> list[Path]:
    """One CSV per (device, gate voltage) over v_ds = 0..v_gs."""
    paths = []
    for ds in config.datasheets():
        for v_gs in config.curve_gate_voltages:
            rows = [
                {"v_ds_v": s.v_ds, "i_d_a": s.i_d, "p_w": s.p, "mode": s.mode.value}
                for s in power_sweep(ds, v_gs, (0.0, v_gs), config.v_ds_step)
            ]
            path = Path(config.out_dir) / f"power_{ds.name}_{v_gs:g}V.csv"
            paths.append(write_csv(rows, ["v_ds_v", "i_d_a", "p_w", "mode"], path))
    return paths


def emit_delay_curves(config: CompareConfig) -> list[Path]:
    """One CSV per device of t_on / t_off over gate voltage."""
    paths = []
    for ds in config.datasheets():
        samples, _ = delay_sweep(
            ds, config.drive, config.delay_start, config.delay_stop, config.delay_step,
        )
        rows = [{"v_gs_v": s.v_gs, "t_on_s": s.t_on, "t_off_s": s.t_off} for s in samples]
        path = Path(config.out_dir) / f"delay_{ds.name}.csv"
        paths.append(write_csv(rows, ["v_gs_v", "t_on_s", "t_off_s"], path))
    return paths


def emit_report(report: ComparisonReport, path: str | Path, fmt: str = "json") -> Path:
    if fmt == "json":
        text = report.to_json()
    elif fmt == "text":
        text = report.summary()
    else:
        raise ConfigError(f"Report format must be json or text, got {fmt!r}")
    return _write_text(text, Path(path))
