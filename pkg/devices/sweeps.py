"""
devices/sweeps.py
-----------------
Greenlight – Device Curves & Operating-Point Summaries

power_sweep    P(v_ds) at a fixed gate voltage (power-curve figures)
delay_sweep    t_on / t_off over gate voltage (delay-curve figures)
power_summary  per-device power at the operating gate voltage, for reports
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .calibration import at_gate_voltage
from .datasheet   import GateDrive, MosfetDatasheet, OperatingPoint
from .mosfet      import (
    DeviceDomainError,
    Mode,
    classify_mode,
    dissipation_integral,
    drain_current,
    turn_off_delay,
    turn_on_delay,
)

logger = logging.getLogger("greenlight.devices.sweeps")

DELAY_SWEEP_STOP  = 10.0        # V
DELAY_SWEEP_STEP  = 0.05        # V
DELAY_SWEEP_START_MARGIN = 0.1  # V above the gate plateau


@dataclass(frozen=True)
class PowerSample:
    v_ds: float
    i_d:  float
    p:    float
    mode: Mode


@dataclass(frozen=True)
class DelaySample:
    v_gs:  float
    t_on:  float
    t_off: float


@dataclass
class ModePower:
    """Power of one device at its operating gate voltage."""
    device:             str
    polarity:           str
    v_gs:               float
    k:                  Optional[float]
    mid_triode_v_ds:    float
    mid_triode_w:       float
    rail_mode:          str
    rail_w:             float
    triode_dissipation_w: float

    @classmethod
    def from_dict(cls, d: dict) -> "ModePower":
        return cls(**d)


def _grid(start: float, stop: float, step: float) -> np.ndarray:
    """start, start+step, ... up to and including stop."""
    if not (math.isfinite(step) and step > 0):
        raise DeviceDomainError(f"Sweep step must be positive, got {step}")
    if not (math.isfinite(start) and math.isfinite(stop)) or stop < start:
        raise DeviceDomainError(f"Empty sweep range [{start}, {stop}]")
    count = int(math.floor((stop - start) / step + 1e-9))
    grid = start + step * np.arange(count + 1)
    if stop - grid[-1] > 1e-9 * step:
        grid = np.append(grid, stop)
    else:
        grid[-1] = stop
    return grid


def power_sweep(
    ds: MosfetDatasheet,
    v_gs: float,
    v_ds_range: tuple[float, float],
    step: float,
) -> list[PowerSample]:
    """Sample I_d and P = I_d·v_ds over *v_ds_range* (inclusive) at fixed *v_gs*."""
    start, stop = v_ds_range
    if start < 0:
        raise DeviceDomainError(f"v_ds range must start at >= 0 V, got {start}")
    grid = _grid(start, stop, step)
    dev = at_gate_voltage(ds, v_gs)
    samples = []
    for v_ds in grid:
        op = OperatingPoint(v_gs=v_gs, v_ds=float(v_ds))
        mode, i_d = drain_current(dev, op)
        samples.append(PowerSample(v_ds=op.v_ds, i_d=i_d, p=i_d * op.v_ds, mode=mode))
    logger.debug("[Devices] %s power sweep at %.3g V: %d samples", ds.name, v_gs, len(samples))
    return samples


def delay_sweep(
    ds: MosfetDatasheet,
    drive: GateDrive,
    start: Optional[float] = None,
    stop: float = DELAY_SWEEP_STOP,
    step: float = DELAY_SWEEP_STEP,
) -> tuple[list[DelaySample], int]:
    """
    Turn-on and turn-off delay over gate voltage.

    *start* defaults to v_gp + 0.1 V. Gate voltages at or below the plateau
    never turn the device on; those rows are left out and counted.
    Returns (samples, omitted).
    """
    if start is None:
        start = ds.v_gp + DELAY_SWEEP_START_MARGIN
    samples: list[DelaySample] = []
    omitted = 0
    for v_gs in _grid(start, stop, step):
        v_gs = float(v_gs)
        if v_gs <= ds.v_gp:
            omitted += 1
            continue
        samples.append(DelaySample(
            v_gs=v_gs,
            t_on=turn_on_delay(ds, drive, v_gs),
            t_off=turn_off_delay(ds, drive, v_gs),
        ))
    if omitted:
        logger.warning(
            "[Devices] %s delay sweep: omitted %d row(s) at or below the %.3g V gate plateau",
            ds.name, omitted, ds.v_gp,
        )
    return samples, omitted


def power_summary(ds: MosfetDatasheet, v_gs: float) -> ModePower:
    """
    Power at a mid-triode point (v_ds = (v_gs - v_th)/2), at the rail
    (v_ds = v_gs, saturation) and the triode dissipation over 0..v_gs - v_th.
    A device in cutoff reports zeros.
    """
    dev = at_gate_voltage(ds, v_gs)
    rail = OperatingPoint(v_gs=v_gs, v_ds=v_gs)
    rail_mode = classify_mode(dev, rail)
    if rail_mode is Mode.CUTOFF:
        return ModePower(
            device=ds.name, polarity=ds.polarity.value, v_gs=v_gs, k=dev.k,
            mid_triode_v_ds=0.0, mid_triode_w=0.0,
            rail_mode=rail_mode.value, rail_w=0.0, triode_dissipation_w=0.0,
        )
    v_ov = v_gs - dev.v_th
    mid = OperatingPoint(v_gs=v_gs, v_ds=v_ov / 2)
    _, i_mid = drain_current(dev, mid)
    _, i_rail = drain_current(dev, rail)
    return ModePower(
        device=ds.name,
        polarity=ds.polarity.value,
        v_gs=v_gs,
        k=dev.k,
        mid_triode_v_ds=mid.v_ds,
        mid_triode_w=i_mid * mid.v_ds,
        rail_mode=rail_mode.value,
        rail_w=i_rail * rail.v_ds,
        triode_dissipation_w=dissipation_integral(dev, v_gs, v_ov, 0.0),
    )
