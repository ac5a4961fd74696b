"""
optical/chip.py
---------------
Greenlight – Photonic Chip Latency & Power

Light crosses one beamsplitter per network stage, so

    optical_latency = depth(n) · bs_traversal_length · refractive_index / c

A 2 mm splitter at index 1.0 takes ≈6.7 ps (of order 10 ps). The optional
full_chip_length gives the end-to-end traversal of the whole chip (3 cm ≈
100 ps); it is informational and does not enter the per-depth latency.

Passive splitters draw no runtime power. Tunable splitters draw power only
while being tuned before operation; that tuning power is excluded and the
exclusion is reported as a flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from hadamard.topology import HadamardPlan

SPEED_OF_LIGHT = 299_792_458.0          # m/s


class GeometryError(ValueError):
    """Raised for non-positive chip lengths or refractive index."""


@dataclass(frozen=True)
class ChipGeometry:
    bs_traversal_length: float = 2e-3               # m
    refractive_index:    float = 1.0
    full_chip_length:    Optional[float] = None     # m
    traversal_time:      Optional[float] = None     # s, set by for_stage_delay

    def __post_init__(self) -> None:
        checks = [("bs_traversal_length", self.bs_traversal_length),
                  ("refractive_index", self.refractive_index)]
        if self.full_chip_length is not None:
            checks.append(("full_chip_length", self.full_chip_length))
        if self.traversal_time is not None:
            checks.append(("traversal_time", self.traversal_time))
        for label, v in checks:
            if not (math.isfinite(v) and v > 0):
                raise GeometryError(f"{label} must be a positive finite number, got {v}")

    @classmethod
    def for_stage_delay(
        cls,
        seconds: float,
        refractive_index: float = 1.0,
        full_chip_length: Optional[float] = None,
    ) -> "ChipGeometry":
        """Geometry whose single-splitter traversal takes *seconds*."""
        if not (math.isfinite(seconds) and seconds > 0):
            raise GeometryError(f"stage delay must be positive, got {seconds}")
        return cls(seconds * SPEED_OF_LIGHT / refractive_index, refractive_index, full_chip_length, seconds)

    @property
    def stage_delay(self) -> float:
        if self.traversal_time is not None:
            return self.traversal_time
        return self.bs_traversal_length * self.refractive_index / SPEED_OF_LIGHT


DEFAULT_GEOMETRY = ChipGeometry()
CHIP_20_MODE     = ChipGeometry(bs_traversal_length=2e-3, full_chip_length=3e-2)


def optical_latency(plan: HadamardPlan, geom: ChipGeometry = DEFAULT_GEOMETRY) -> float:
    """Seconds for light to cross depth(n) splitters."""
    return plan.depth * geom.stage_delay


def chip_traversal_time(geom: ChipGeometry) -> Optional[float]:
    if geom.full_chip_length is None:
        return None
    return geom.full_chip_length * geom.refractive_index / SPEED_OF_LIGHT


# ---------------------------------------------------------------------------
# Power
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OpticalPower:
    runtime_w:        float = 0.0
    tuning_excluded:  bool  = True


def optical_power() -> float:
    """Runtime power of the passive network: always 0 W."""
    return OpticalPower().runtime_w


def optical_power_report() -> OpticalPower:
    return OpticalPower()
