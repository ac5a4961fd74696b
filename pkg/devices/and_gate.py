"""
devices/and_gate.py
-------------------
Greenlight – CMOS AND-Gate Delay Aggregation

An AND gate is built as a NAND stage (2 PMOS in parallel, 2 NMOS in series)
followed by a NOT stage (1 PMOS, 1 NMOS). Which transistors switch depends
on the NAND inputs:

    both-low   NAND: PMOS on, NMOS off         NOT: NMOS on, PMOS off
    one-high   NAND: one of each on and off    NOT: NMOS on, PMOS off
    both-high  NAND: NMOS on, PMOS off         NOT: PMOS on, NMOS off

The four device delays (NMOS/PMOS × on/off) are combined into one AND-gate
delay by a named policy:

    stage-worst-case   per stage, max(slowest turn-on, slowest turn-off) over
                       all cases; NAND + NOT          (default)
    on-plus-off        per stage, slowest turn-on + slowest turn-off over all
                       cases; NAND + NOT
    serial-sum         t_on + t_off of both device kinds
    fixed:<seconds>    a fixed value, e.g. fixed:80e-9

Usage
-----
    from devices.and_gate import and_gate_delay

    bd = and_gate_delay(nmos, pmos, GateDrive(10.0), v_gs=3.3)
    bd.and_delay_s, bd.policy, bd.worst_case
"""

from __future__ import annotations

import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass

from .datasheet   import DatasheetError, GateDrive, MosfetDatasheet, Polarity
from .mosfet      import turn_off_delay, turn_on_delay

logger = logging.getLogger("greenlight.devices.and_gate")

DEFAULT_POLICY = "stage-worst-case"


class PolicyConfigError(ValueError):
    """Raised for unknown or malformed delay-aggregation policy names."""


# ---------------------------------------------------------------------------
# Data structures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DeviceDelays:
    nmos_on:  float
    nmos_off: float
    pmos_on:  float
    pmos_off: float

    def on(self, kind: Polarity) -> float:
        return self.nmos_on if kind is Polarity.NMOS else self.pmos_on

    def off(self, kind: Polarity) -> float:
        return self.nmos_off if kind is Polarity.NMOS else self.pmos_off


@dataclass(frozen=True)
class StageSwitching:
    turning_on:  tuple[Polarity, ...]
    turning_off: tuple[Polarity, ...]


@dataclass(frozen=True)
class SwitchingCase:
    name:  str
    nand:  StageSwitching
    inv:   StageSwitching


N, P = Polarity.NMOS, Polarity.PMOS

SWITCHING_CASES: tuple[SwitchingCase, ...] = (
    SwitchingCase("both-low",  StageSwitching((P, P), (N, N)), StageSwitching((N,), (P,))),
    SwitchingCase("one-high",  StageSwitching((P, N), (P, N)), StageSwitching((N,), (P,))),
    SwitchingCase("both-high", StageSwitching((N, N), (P, P)), StageSwitching((P,), (N,))),
)


@dataclass
class AndDelayBreakdown:
    nmos_on_s:   float
    nmos_off_s:  float
    pmos_on_s:   float
    pmos_off_s:  float
    and_delay_s: float
    policy:      str
    worst_case:  str = ""

    @classmethod
    def from_dict(cls, d: dict) -> "AndDelayBreakdown":
        return cls(**d)


# ---------------------------------------------------------------------------
# Policies
# ---------------------------------------------------------------------------

class DelayPolicy(ABC):
    """Turns four device delays into one AND-gate delay."""

    name: str = "base"

    @abstractmethod
    def aggregate(self, delays: DeviceDelays) -> tuple[float, str]:
        """Return (AND-gate delay in seconds, label of the dominating case)."""

    def __repr__(self) -> str:
        return f"<DelayPolicy {self.name}>"


class _PerStagePolicy(DelayPolicy):

    @abstractmethod
    def stage_delay(self, stage: StageSwitching, delays: DeviceDelays) -> float:
        ...

    def aggregate(self, delays: DeviceDelays) -> tuple[float, str]:
        total = 0.0
        labels = []
        for stage_name, pick in (("nand", lambda c: c.nand), ("not", lambda c: c.inv)):
            worst = max(SWITCHING_CASES, key=lambda c: self.stage_delay(pick(c), delays))
            total += self.stage_delay(pick(worst), delays)
            labels.append(f"{stage_name}:{worst.name}")
        return total, ",".join(labels)


class StageWorstCase(_PerStagePolicy):
    name = "stage-worst-case"

    def stage_delay(self, stage: StageSwitching, delays: DeviceDelays) -> float:
        return max(
            max((delays.on(k) for k in stage.turning_on), default=0.0),
            max((delays.off(k) for k in stage.turning_off), default=0.0),
        )


class OnPlusOff(_PerStagePolicy):
    name = "on-plus-off"

    def stage_delay(self, stage: StageSwitching, delays: DeviceDelays) -> float:
        return (max((delays.on(k) for k in stage.turning_on), default=0.0)
                + max((delays.off(k) for k in stage.turning_off), default=0.0))


class SerialSum(DelayPolicy):
    name = "serial-sum"

    def aggregate(self, delays: DeviceDelays) -> tuple[float, str]:
        return delays.nmos_on + delays.nmos_off + delays.pmos_on + delays.pmos_off, "all"


class FixedDelay(DelayPolicy):

    def __init__(self, seconds: float):
        if not (math.isfinite(seconds) and seconds > 0):
            raise PolicyConfigError(f"Fixed AND delay must be positive, got {seconds}")
        self.seconds = seconds
        self.name = f"fixed:{seconds!r}"

    def aggregate(self, delays: DeviceDelays) -> tuple[float, str]:
        return self.seconds, "fixed"


_POLICY_REGISTRY: dict[str, type[DelayPolicy]] = {
    StageWorstCase.name: StageWorstCase,
    OnPlusOff.name:      OnPlusOff,
    SerialSum.name:      SerialSum,
}


def policy_names() -> list[str]:
    return [*_POLICY_REGISTRY, "fixed:<seconds>"]


def resolve_policy(name: str | DelayPolicy) -> DelayPolicy:
    if isinstance(name, DelayPolicy):
        return name
    key = str(name).strip().lower()
    if key.startswith("fixed:"):
        try:
            return FixedDelay(float(key.split(":", 1)[1]))
        except ValueError as exc:
            if isinstance(exc, PolicyConfigError):
                raise
            raise PolicyConfigError(f"Malformed fixed policy {name!r}; expected fixed:<seconds>") from exc
    cls = _POLICY_REGISTRY.get(key)
    if cls is None:
        raise PolicyConfigError(
            f"Unknown delay policy: {name!r}. Available: {', '.join(policy_names())}"
        )
    return cls()


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def device_delays(
    nmos: MosfetDatasheet,
    pmos: MosfetDatasheet,
    drive: GateDrive,
    v_gs: float,
) -> DeviceDelays:
    return DeviceDelays(
        nmos_on=turn_on_delay(nmos, drive, v_gs),
        nmos_off=turn_off_delay(nmos, drive, v_gs),
        pmos_on=turn_on_delay(pmos, drive, v_gs),
        pmos_off=turn_off_delay(pmos, drive, v_gs),
    )


def and_gate_delay(
    nmos: MosfetDatasheet,
    pmos: MosfetDatasheet,
    drive: GateDrive,
    v_gs: float,
    policy: str | DelayPolicy = DEFAULT_POLICY,
) -> AndDelayBreakdown:
    """Evaluate the four device delays at *v_gs* and aggregate them with *policy*."""
    if nmos.polarity is not Polarity.NMOS or pmos.polarity is not Polarity.PMOS:
        raise DatasheetError(
            f"AND gate needs an NMOS and a PMOS, got {nmos.polarity.value} / {pmos.polarity.value}"
        )
    resolved = resolve_policy(policy)
    delays = device_delays(nmos, pmos, drive, v_gs)
    value, worst = resolved.aggregate(delays)
    logger.info(
        "[Devices] AND delay at %.3g V (%s): %.6e s [%s]", v_gs, resolved.name, value, worst,
    )
    return AndDelayBreakdown(
        nmos_on_s=delays.nmos_on,
        nmos_off_s=delays.nmos_off,
        pmos_on_s=delays.pmos_on,
        pmos_off_s=delays.pmos_off,
        and_delay_s=value,
        policy=resolved.name,
        worst_case=worst,
    )


__all__ = [
    "DEFAULT_POLICY",
    "SWITCHING_CASES",
    "AndDelayBreakdown",
    "DelayPolicy",
    "DeviceDelays",
    "FixedDelay",
    "PolicyConfigError",
    "StageSwitching",
    "SwitchingCase",
    "and_gate_delay",
    "device_delays",
    "policy_names",
    "resolve_policy",
]
