"""
bench/config.py
---------------
Greenlight – Comparison Configuration

`CompareConfig` is assembled in three layers: dataclass defaults, then an
optional JSON file whose keys are field names, then command-line flags.

    {
      "order":    10,
      "v_gs":     3.3,
      "devices":  ["SiRA04DP", "./my_pmos.json"],
      "policy":   "fixed:80e-9",
      "stage_delay": 1e-11
    }
"""

from __future__ import annotations

import dataclasses
import json
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from devices.and_gate  import DEFAULT_POLICY, PolicyConfigError, resolve_policy
from devices.datasheet import (
    DEFAULT_NMOS,
    DEFAULT_PMOS,
    DatasheetError,
    GateDrive,
    MosfetDatasheet,
    Polarity,
    load_datasheet,
)
from hadamard.code     import DEFAULT_MAX_ORDER
from optical.beamsplitter import HADAMARD_SPEC, SYMMETRIC_SPEC, BeamsplitterSpec
from optical.chip      import ChipGeometry, GeometryError

logger = logging.getLogger("greenlight.bench.config")

PHASES: dict[str, BeamsplitterSpec] = {
    "0":   HADAMARD_SPEC,
    "pi2": SYMMETRIC_SPEC,
}


class ConfigError(ValueError):
    """Raised for invalid or inconsistent comparison settings."""


@dataclass
class CompareConfig:
    order:              int             = 10
    v_gs:               float           = 3.3                 # V
    r_gext:             float           = 10.0                # Ω
    devices:            list[str]       = field(default_factory=lambda: [DEFAULT_NMOS, DEFAULT_PMOS])
    phi:                str             = "0"                 # "0" | "pi2"
    phase_correction:   bool            = False
    bs_length:          float           = 2e-3                # m per splitter
    refractive_index:   float           = 1.0
    full_chip_length:   Optional[float] = 3e-2                # m, informational
    stage_delay:        Optional[float] = None                # s, overrides bs_length
    alpha:              float           = 1.0
    policy:             str             = DEFAULT_POLICY
    out_dir:            str             = "out"
    seed:               int             = 0
    sample_size:        int             = 64
    exhaustive_limit:   int             = 10
    max_order:          int             = DEFAULT_MAX_ORDER
    link_propagation_s: Optional[float] = None                # informational
    curve_gate_voltages: list[float]    = field(default_factory=lambda: [3.3, 5.0])
    v_ds_step:          float           = 0.01                # V
    delay_start:        Optional[float] = None                # V, default v_gp + 0.1
    delay_stop:         float           = 10.0                # V
    delay_step:         float           = 0.05                # V

    # ------------------------------------------------------------------
    # Layering
    # ------------------------------------------------------------------

    @classmethod
    def from_dict(cls, d: dict) -> "CompareConfig":
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(d) - known)
        if unknown:
            raise ConfigError(f"Unknown config key(s): {', '.join(unknown)}")
        return cls(**d)

    @classmethod
    def load(cls, path: str | Path) -> "CompareConfig":
        path = Path(path)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: invalid JSON ({exc})") from exc
        if not isinstance(data, dict):
            raise ConfigError(f"{path}: expected a JSON object")
        logger.info("[Config] Loaded %s", path)
        return cls.from_dict(data)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    def merged(self, **overrides: Any) -> "CompareConfig":
        """Copy with every non-None override applied."""
        return dataclasses.replace(self, **{k: v for k, v in overrides.items() if v is not None})

    # ------------------------------------------------------------------
    # Validation
    # ------------------------------------------------------------------

    def validate(self) -> "CompareConfig":
        if not (1 <= self.max_order <= 64):
            raise ConfigError(f"max_order must be in 1..64, got {self.max_order}")
        if not (isinstance(self.order, int) and 1 <= self.order <= self.max_order):
            raise ConfigError(f"order must be an integer in 1..{self.max_order}, got {self.order}")
        for label, v in (("v_gs", self.v_gs), ("alpha", self.alpha), ("v_ds_step", self.v_ds_step),
                         ("delay_stop", self.delay_stop), ("delay_step", self.delay_step)):
            if not (math.isfinite(v) and v > 0):
                raise ConfigError(f"{label} must be positive, got {v}")
        if not self.r_gext >= 0:
            raise ConfigError(f"r_gext must be >= 0, got {self.r_gext}")
        if self.phi not in PHASES:
            raise ConfigError(f"phi must be one of {', '.join(PHASES)}, got {self.phi!r}")
        if self.sample_size < 1 or self.exhaustive_limit < 0:
            raise ConfigError("sample_size must be >= 1 and exhaustive_limit >= 0")
        if self.link_propagation_s is not None and not self.link_propagation_s >= 0:
            raise ConfigError(f"link_propagation_s must be >= 0, got {self.link_propagation_s}")
        if not self.curve_gate_voltages or any(not v > 0 for v in self.curve_gate_voltages):
            raise ConfigError(f"curve_gate_voltages must be positive, got {self.curve_gate_voltages}")
        try:
            resolve_policy(self.policy)
            self.geometry()
            if not self.datasheets():
                raise ConfigError("devices must name at least one preset or JSON file")
        except (PolicyConfigError, GeometryError, DatasheetError) as exc:
            raise ConfigError(str(exc)) from exc
        return self

    # ------------------------------------------------------------------
    # Derived objects
    # ------------------------------------------------------------------

    @property
    def spec(self) -> BeamsplitterSpec:
        return PHASES[self.phi]

    @property
    def drive(self) -> GateDrive:
        return GateDrive(self.r_gext)

    def geometry(self) -> ChipGeometry:
        if self.stage_delay is not None:
            return ChipGeometry.for_stage_delay(
                self.stage_delay, self.refractive_index, self.full_chip_length,
            )
        return ChipGeometry(self.bs_length, self.refractive_index, self.full_chip_length)

    def datasheets(self) -> list[MosfetDatasheet]:
        return [load_datasheet(d) for d in self.devices]

    def resolve_devices(self) -> tuple[MosfetDatasheet, MosfetDatasheet]:
        """The first NMOS and the first PMOS among `devices`; only `compare` needs both."""
        loaded = self.datasheets()
        nmos = next((d for d in loaded if d.polarity is Polarity.NMOS), None)
        pmos = next((d for d in loaded if d.polarity is Polarity.PMOS), None)
        if nmos is None or pmos is None:
            raise ConfigError(
                f"devices must include one NMOS and one PMOS, got {', '.join(self.devices) or 'none'}"
            )
        return nmos, pmos
