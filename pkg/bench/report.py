"""
bench/report.py
---------------
Greenlight – Comparison Report

One record per `compare` run. JSON output keeps field order and carries a
top-level `schema_version`; floats are written with their shortest
round-trip repr so parse(emit(r)) == r.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Optional

from devices.and_gate import AndDelayBreakdown
from devices.sweeps   import ModePower

SCHEMA_VERSION = 1

_RULE = "━" * 60


@dataclass
class ComparisonReport:
    order:                  int
    depth:                  int
    beamsplitter_count:     int
    transistor_count:       int
    optical_stage_delay_s:  float
    optical_latency_s:      float
    electronic_latency_s:   float
    latency_ratio:          float
    optical_runtime_power_w: float
    optical_tuning_power_excluded: bool
    and_delay:              AndDelayBreakdown
    power_summary:          list[ModePower] = field(default_factory=list)
    v_gs:                   float = 0.0
    r_gext:                 float = 0.0
    phi:                    str   = "0"
    phase_correction:       bool  = False
    codewords_verified:     int   = 0
    verification:           str   = "exhaustive"      # or "sampled"
    chip_traversal_s:       Optional[float] = None
    link_propagation_s:     Optional[float] = None
    schema_version:         int   = SCHEMA_VERSION

    def to_dict(self) -> dict:
        d = asdict(self)
        return {"schema_version": d.pop("schema_version"), **d}

    @classmethod
    def from_dict(cls, d: dict) -> "ComparisonReport":
        d = dict(d)
        version = d.get("schema_version")
        if version != SCHEMA_VERSION:
            raise ValueError(f"Unsupported report schema_version {version!r}, expected {SCHEMA_VERSION}")
        d["and_delay"] = AndDelayBreakdown.from_dict(d["and_delay"])
        d["power_summary"] = [ModePower.from_dict(p) for p in d.get("power_summary", [])]
        return cls(**d)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ComparisonReport":
        return cls.from_dict(json.loads(text))

    def summary(self) -> str:
        bd = self.and_delay
        lines = [
            "",
            _RULE,
            "  Greenlight Receiver Comparison",
            f"  n = {self.order}  |  {1 << self.order} modes  |  depth {self.depth}",
            _RULE,
            f"  {'beamsplitters':<26}{self.beamsplitter_count}",
            f"  {'transistors (6/AND, 4 AND)':<26}{self.transistor_count}",
            f"  {'codewords verified':<26}{self.codewords_verified} ({self.verification})",
            _RULE,
            f"  {'optical stage delay':<26}{self.optical_stage_delay_s:.6e} s",
            f"  {'optical latency':<26}{self.optical_latency_s:.6e} s",
            f"  {'electronic latency':<26}{self.electronic_latency_s:.6e} s",
            f"  {'latency ratio':<26}{self.latency_ratio:.6e}",
        ]
        if self.chip_traversal_s is not None:
            lines.append(f"  {'chip traversal':<26}{self.chip_traversal_s:.6e} s")
        if self.link_propagation_s is not None:
            lines.append(f"  {'link propagation':<26}{self.link_propagation_s:.6e} s")
        lines += [
            _RULE,
            f"  AND delay @ {self.v_gs:g} V, R_gext {self.r_gext:g} Ω  [{bd.policy}]",
            f"    NMOS on {bd.nmos_on_s:.6e} s   off {bd.nmos_off_s:.6e} s",
            f"    PMOS on {bd.pmos_on_s:.6e} s   off {bd.pmos_off_s:.6e} s",
            f"    AND     {bd.and_delay_s:.6e} s   ({bd.worst_case})",
            _RULE,
            f"  {'optical runtime power':<26}{self.optical_runtime_power_w:.6e} W"
            + ("  (tuning excluded)" if self.optical_tuning_power_excluded else ""),
        ]
        for p in self.power_summary:
            lines.append(
                f"  {p.device} ({p.polarity}): mid-triode {p.mid_triode_w:.6e} W, "
                f"rail {p.rail_w:.6e} W ({p.rail_mode}), dissipation {p.triode_dissipation_w:.6e} W"
            )
        lines += [_RULE, ""]
        return "\n".join(lines)
