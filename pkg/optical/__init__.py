"""
optical/
--------
Greenlight – Optical Receiver Simulation

Modules
-------
beamsplitter.py  — BeamsplitterSpec and the 2×2 unitary
network.py       — BPSK encoding, butterfly propagation, energy-argmax decoding
chip.py          — chip geometry, latency from light speed, runtime power
"""

from .beamsplitter import (
    HADAMARD_SPEC,
    SYMMETRIC_SPEC,
    BeamsplitterSpec,
    BeamsplitterSpecError,
    beamsplitter_apply,
    check_amplitude,
)
from .chip import (
    CHIP_20_MODE,
    DEFAULT_GEOMETRY,
    SPEED_OF_LIGHT,
    ChipGeometry,
    GeometryError,
    OpticalPower,
    chip_traversal_time,
    optical_latency,
    optical_power,
    optical_power_report,
)
from .network import (
    ModeVector,
    NoSignalError,
    OpticalDomainError,
    decode_optical,
    encode_optical,
    propagate_optical,
    trace_rows,
)

__all__ = [
    "HADAMARD_SPEC",
    "SYMMETRIC_SPEC",
    "BeamsplitterSpec",
    "BeamsplitterSpecError",
    "beamsplitter_apply",
    "check_amplitude",
    "CHIP_20_MODE",
    "DEFAULT_GEOMETRY",
    "SPEED_OF_LIGHT",
    "ChipGeometry",
    "GeometryError",
    "OpticalPower",
    "chip_traversal_time",
    "optical_latency",
    "optical_power",
    "optical_power_report",
    "ModeVector",
    "NoSignalError",
    "OpticalDomainError",
    "decode_optical",
    "encode_optical",
    "propagate_optical",
    "trace_rows",
]
