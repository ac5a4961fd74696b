"""
devices/datasheet.py
--------------------
Greenlight – MOSFET Datasheet Records

Device constants that drive every current, power and delay evaluation, the
bundled presets, and the JSON parameter-file format.

All quantities are magnitudes: PMOS thresholds, plateaus and currents are
entered as positive numbers and go through the same equations as NMOS.

Parameter file (one JSON object per device)
-------------------------------------------
    {
      "name":          "SiRA04DP",
      "polarity":      "NMOS",
      "r_g_ohm":       1.0,
      "c_iss_0v_pf":   4000,
      "c_iss_vds_pf":  3600,
      "v_th_v":        1.7,
      "v_gp_v":        2.6,
      "k_a_per_v2":    27.34,          # optional
      "lambda_per_v":  0.0,            # optional, default 0
      "reference_currents": {"3.3": 35.0, "5.0": 235.0}   # optional, v_gs -> A
    }

Usage
-----
    from devices.datasheet import load_datasheet

    nmos = load_datasheet("SiRA04DP")
    pmos = load_datasheet("./my_pmos.json")
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Optional

logger = logging.getLogger("greenlight.devices.datasheet")

PF = 1e-12


class DatasheetError(ValueError):
    """Raised for invalid datasheet values or unresolvable presets/files."""


class Polarity(str, Enum):
    NMOS = "NMOS"
    PMOS = "PMOS"


# ---------------------------------------------------------------------------
# Records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MosfetDatasheet:
    name:          str
    polarity:      Polarity
    r_g:           float                    # Ω, internal gate resistance
    c_iss_at_0v:   float                    # F
    c_iss_at_vds:  float                    # F
    v_th:          float                    # V
    v_gp:          float                    # V, gate plateau
    k:             Optional[float] = None   # A/V², μ_n·C_ox·w/l
    lambda_:       float = 0.0              # 1/V, channel-length modulation
    v_off:         float = 0.0              # V, lower bound of the triode dissipation integral
    reference_currents: dict[float, float] = field(default_factory=dict, hash=False, compare=True)

    def __post_init__(self) -> None:
        object.__setattr__(self, "polarity", Polarity(self.polarity))
        positive = {
            "c_iss_at_0v": self.c_iss_at_0v, "c_iss_at_vds": self.c_iss_at_vds,
            "v_th": self.v_th, "v_gp": self.v_gp,
        }
        for label, v in positive.items():
            if not (math.isfinite(v) and v > 0):
                raise DatasheetError(f"{self.name}: {label} must be > 0, got {v}")
        if not (math.isfinite(self.r_g) and self.r_g >= 0):
            raise DatasheetError(f"{self.name}: r_g must be >= 0, got {self.r_g}")
        if self.k is not None and not (math.isfinite(self.k) and self.k > 0):
            raise DatasheetError(f"{self.name}: k must be > 0, got {self.k}")
        if not (math.isfinite(self.lambda_) and self.lambda_ >= 0):
            raise DatasheetError(f"{self.name}: lambda must be >= 0, got {self.lambda_}")
        for v_gs, current in self.reference_currents.items():
            if not (v_gs > 0 and current > 0):
                raise DatasheetError(f"{self.name}: bad reference current {current} A at {v_gs} V")

    # ------------------------------------------------------------------
    # JSON (de)serialisation
    # ------------------------------------------------------------------

    @classmethod
    def from_dict(cls, d: dict) -> "MosfetDatasheet":
        try:
            return cls(
                name=d["name"],
                polarity=Polarity(str(d["polarity"]).upper()),
                r_g=float(d["r_g_ohm"]),
                c_iss_at_0v=float(d["c_iss_0v_pf"]) * PF,
                c_iss_at_vds=float(d["c_iss_vds_pf"]) * PF,
                v_th=float(d["v_th_v"]),
                v_gp=float(d["v_gp_v"]),
                k=float(d["k_a_per_v2"]) if d.get("k_a_per_v2") is not None else None,
                lambda_=float(d.get("lambda_per_v", 0.0)),
                reference_currents={
                    float(v): float(i) for v, i in (d.get("reference_currents") or {}).items()
                },
            )
        except KeyError as exc:
            raise DatasheetError(f"Datasheet missing key {exc.args[0]!r}") from exc
        except (TypeError, ValueError) as exc:
            if isinstance(exc, DatasheetError):
                raise
            raise DatasheetError(f"Datasheet has a malformed value: {exc}") from exc

    def to_dict(self) -> dict:
        d = {
            "name":          self.name,
            "polarity":      self.polarity.value,
            "r_g_ohm":       self.r_g,
            "c_iss_0v_pf":   self.c_iss_at_0v / PF,
            "c_iss_vds_pf":  self.c_iss_at_vds / PF,
            "v_th_v":        self.v_th,
            "v_gp_v":        self.v_gp,
            "lambda_per_v":  self.lambda_,
        }
        if self.k is not None:
            d["k_a_per_v2"] = self.k
        if self.reference_currents:
            d["reference_currents"] = {str(v): i for v, i in sorted(self.reference_currents.items())}
        return d


@dataclass(frozen=True)
class OperatingPoint:
    v_gs: float
    v_ds: float

    def __post_init__(self) -> None:
        if not (self.v_gs >= 0 and self.v_ds >= 0):
            raise DatasheetError(f"Operating point needs v_gs, v_ds >= 0, got ({self.v_gs}, {self.v_ds})")


@dataclass(frozen=True)
class GateDrive:
    r_gext: float = 10.0                    # Ω

    def __post_init__(self) -> None:
        if not self.r_gext >= 0:
            raise DatasheetError(f"External gate resistance must be >= 0, got {self.r_gext}")


# ---------------------------------------------------------------------------
# Presets (capacitances and voltages from the vendor datasheets; reference
# currents are the saturation currents read off the power curves)
# ---------------------------------------------------------------------------

PRESETS: list[MosfetDatasheet] = [
    MosfetDatasheet(
        name="SiRA04DP", polarity=Polarity.NMOS,
        r_g=1.0, c_iss_at_0v=4000 * PF, c_iss_at_vds=3600 * PF,
        v_th=1.7, v_gp=2.6,
        reference_currents={3.3: 35.0, 5.0: 235.0},
    ),
    MosfetDatasheet(
        name="SiA469DJ", polarity=Polarity.PMOS,
        r_g=9.0, c_iss_at_0v=1500 * PF, c_iss_at_vds=1020 * PF,
        v_th=3.0, v_gp=2.1,
        reference_currents={3.3: 15.0, 5.0: 90.0},
    ),
]

_PRESET_MAP: dict[str, MosfetDatasheet] = {p.name.lower(): p for p in PRESETS}

DEFAULT_NMOS = "SiRA04DP"
DEFAULT_PMOS = "SiA469DJ"


def preset_names() -> list[str]:
    return [p.name for p in PRESETS]


def load_datasheet(name_or_path: str | Path) -> MosfetDatasheet:
    """Resolve a preset name (case-insensitive) or a JSON parameter file."""
    preset = _PRESET_MAP.get(str(name_or_path).lower())
    if preset is not None:
        return preset

    path = Path(name_or_path)
    if not path.is_file():
        raise DatasheetError(
            f"Unknown device {str(name_or_path)!r}: not a preset ({', '.join(preset_names())}) "
            "and no such file"
        )
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DatasheetError(f"{path}: invalid JSON ({exc})") from exc
    ds = MosfetDatasheet.from_dict(data)
    logger.info("[Devices] Loaded datasheet %s (%s) from %s", ds.name, ds.polarity.value, path)
    return ds


def save_datasheet(ds: MosfetDatasheet, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(json.dumps(ds.to_dict(), indent=2) + "\n", encoding="utf-8")
    return path
