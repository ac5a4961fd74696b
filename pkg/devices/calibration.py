"""
devices/calibration.py
----------------------
Greenlight – Transconductance Calibration

Datasheets rarely state k or λ. k is recovered by inverting the triode or
saturation current equation at an operating point where the drain current
is known (λ held fixed).

A single k does not reproduce a device's currents at two different gate
voltages, so presets keep one reference current per v_gs and
`at_gate_voltage` calibrates per profile.
"""

from __future__ import annotations

import dataclasses
import logging

from .datasheet import MosfetDatasheet, OperatingPoint
from .mosfet import Mode, classify_mode, saturation_current, triode_current

logger = logging.getLogger("greenlight.devices.calibration")


class CalibrationError(ValueError):
    """Raised when k cannot be recovered from the given reference point."""


def calibrate_k(ds: MosfetDatasheet, reference_current: float, op: OperatingPoint) -> float:
    """
    Return k such that the current model reproduces *reference_current* at *op*.

    *ds* may be partial: only v_th and lambda_ are read.
    """
    if not reference_current > 0:
        raise CalibrationError(f"Reference current must be positive, got {reference_current}")
    mode = classify_mode(ds, op)
    v_ov = op.v_gs - ds.v_th
    if mode is Mode.CUTOFF:
        raise CalibrationError(f"{ds.name} is in cutoff at {op}; no current to calibrate against")
    if mode is Mode.TRIODE:
        unit = triode_current(1.0, v_ov, op.v_ds)
    else:
        unit = saturation_current(1.0, v_ov, op.v_ds, ds.lambda_)
    if unit <= 0:
        raise CalibrationError(f"Degenerate operating point {op} for {ds.name}")
    return reference_current / unit


def at_gate_voltage(ds: MosfetDatasheet, v_gs: float) -> MosfetDatasheet:
    """
    Return *ds* with k fixed for gate voltage *v_gs*.

    An explicit k wins. Otherwise the reference current nearest in v_gs is
    treated as the saturation current at v_ds = v_gs and inverted for k.
    Devices in cutoff at *v_gs* keep k unset (their current is 0 regardless).
    """
    if ds.k is not None:
        return ds
    if v_gs <= ds.v_th:
        return ds
    if not ds.reference_currents:
        raise CalibrationError(f"{ds.name}: no k and no reference currents to calibrate from")

    ref_v = min(ds.reference_currents, key=lambda v: (abs(v - v_gs), v))
    if ref_v != v_gs:
        logger.warning(
            "[Devices] %s: no reference current at %.3g V, using the %.3g V profile",
            ds.name, v_gs, ref_v,
        )
    if ref_v <= ds.v_th:
        raise CalibrationError(f"{ds.name}: reference profile at {ref_v} V is in cutoff")
    k = calibrate_k(ds, ds.reference_currents[ref_v], OperatingPoint(v_gs=ref_v, v_ds=ref_v))
    logger.debug("[Devices] %s calibrated at %.3g V: k = %.6e A/V^2", ds.name, ref_v, k)
    return dataclasses.replace(ds, k=k)
