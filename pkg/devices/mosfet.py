"""
devices/mosfet.py
-----------------
Greenlight – MOSFET Device Equations

Square-law drain current, power and switching-delay models:

    cutoff      v_gs <= v_th                          I_d = 0
    triode      v_gs >  v_th, v_ds <  v_gs - v_th     I_d = k[(v_gs - v_th)v_ds - v_ds²/2]
    saturation  v_gs >  v_th, v_ds >= v_gs - v_th     I_d = (k/2)(v_gs - v_th)²(1 + λ v_ds)

    power                 P = I_d · v_ds
    triode dissipation    W = (k/2)[(v_gs - v_th)(v_ds² - v_off²) - (v_ds³ - v_off³)/3]

    turn-on delay   t_on  = (R_g + R_gext) · C_iss(v_ds) · ln(v_gs / (v_gs - v_gp))
    turn-off delay  t_off = (R_g + R_gext) · C_iss(0 V)  · ln(v_gs / v_gp)

The boundary v_gs = v_th is classified as cutoff; both current formulas
vanish there. Datasheets without k must be calibrated first
(see devices.calibration.at_gate_voltage).
"""

from __future__ import annotations

import math
from enum import Enum

from .datasheet import DatasheetError, GateDrive, MosfetDatasheet, OperatingPoint


class Mode(str, Enum):
    CUTOFF     = "cutoff"
    TRIODE     = "triode"
    SATURATION = "saturation"


class DeviceModeError(ValueError):
    """Raised when a mode-specific current is requested outside its mode."""


class DeviceDomainError(ValueError):
    """Raised for voltages outside an equation's valid range."""


class NoTurnOnError(DeviceDomainError):
    """Raised when v_gs never rises past the gate plateau, so the device never turns on."""


# ---------------------------------------------------------------------------
# Closed forms (no mode guard)
# ---------------------------------------------------------------------------

def triode_current(k: float, v_ov: float, v_ds: float) -> float:
    return k * (v_ov * v_ds - 0.5 * v_ds * v_ds)


def saturation_current(k: float, v_ov: float, v_ds: float, lambda_: float = 0.0) -> float:
    return 0.5 * k * v_ov * v_ov * (1.0 + lambda_ * v_ds)


def _require_k(ds: MosfetDatasheet) -> float:
    if ds.k is None:
        raise DatasheetError(f"{ds.name}: k is not set; calibrate the datasheet for a gate voltage first")
    return ds.k


# ---------------------------------------------------------------------------
# Operating mode, currents, power
# ---------------------------------------------------------------------------

def classify_mode(ds: MosfetDatasheet, op: OperatingPoint) -> Mode:
    v_ov = op.v_gs - ds.v_th
    if v_ov <= 0:
        return Mode.CUTOFF
    if op.v_ds < v_ov:
        return Mode.TRIODE
    return Mode.SATURATION


def i_d_triode(ds: MosfetDatasheet, op: OperatingPoint) -> float:
    mode = classify_mode(ds, op)
    if mode is not Mode.TRIODE:
        raise DeviceModeError(f"{ds.name} is in {mode.value} mode at {op}, not triode")
    return triode_current(_require_k(ds), op.v_gs - ds.v_th, op.v_ds)


def i_d_saturation(ds: MosfetDatasheet, op: OperatingPoint) -> float:
    mode = classify_mode(ds, op)
    if mode is not Mode.SATURATION:
        raise DeviceModeError(f"{ds.name} is in {mode.value} mode at {op}, not saturation")
    return saturation_current(_require_k(ds), op.v_gs - ds.v_th, op.v_ds, ds.lambda_)


def drain_current(ds: MosfetDatasheet, op: OperatingPoint) -> tuple[Mode, float]:
    """(mode, I_d) with the mode-appropriate equation; 0 A in cutoff."""
    mode = classify_mode(ds, op)
    if mode is Mode.CUTOFF:
        return mode, 0.0
    if mode is Mode.TRIODE:
        return mode, i_d_triode(ds, op)
    return mode, i_d_saturation(ds, op)


def power(ds: MosfetDatasheet, op: OperatingPoint) -> float:
    """P = I_d · v_ds (0 W in cutoff)."""
    _, i_d = drain_current(ds, op)
    return i_d * op.v_ds


def dissipation_integral(
    ds: MosfetDatasheet,
    v_gs: float,
    v_ds: float,
    v_off: float | None = None,
) -> float:
    """
    Triode dissipation: the integral of the triode current over drain-source
    voltage from v_off to v_ds. *v_off* defaults to the datasheet's v_off (0 V).
    """
    v_off = ds.v_off if v_off is None else v_off
    v_ov = v_gs - ds.v_th
    if not (0 <= v_off <= v_ds <= v_ov):
        raise DeviceDomainError(
            f"Need 0 <= v_off <= v_ds <= v_gs - v_th, got v_off={v_off}, v_ds={v_ds}, v_gs - v_th={v_ov}"
        )
    k = _require_k(ds)
    return 0.5 * k * (v_ov * (v_ds ** 2 - v_off ** 2) - (v_ds ** 3 - v_off ** 3) / 3.0)


# ---------------------------------------------------------------------------
# Switching delays
# ---------------------------------------------------------------------------

def total_gate_resistance(ds: MosfetDatasheet, drive: GateDrive) -> float:
    return ds.r_g + drive.r_gext


def turn_on_delay(ds: MosfetDatasheet, drive: GateDrive, v_gs: float) -> float:
    if v_gs <= ds.v_gp:
        raise NoTurnOnError(
            f"{ds.name}: v_gs={v_gs} V does not exceed the gate plateau {ds.v_gp} V"
        )
    return total_gate_resistance(ds, drive) * ds.c_iss_at_vds * math.log(v_gs / (v_gs - ds.v_gp))


def turn_off_delay(ds: MosfetDatasheet, drive: GateDrive, v_gs: float) -> float:
    if v_gs <= 0:
        raise DeviceDomainError(f"{ds.name}: v_gs must be positive, got {v_gs}")
    if v_gs < ds.v_gp:
        raise DeviceDomainError(
            f"{ds.name}: v_gs={v_gs} V is below the gate plateau {ds.v_gp} V"
        )
    return total_gate_resistance(ds, drive) * ds.c_iss_at_0v * math.log(v_gs / ds.v_gp)
