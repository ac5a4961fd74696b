"""
devices/
--------
Greenlight – MOSFET Device Models

Modules
-------
datasheet.py    — datasheet records, presets, JSON parameter files
mosfet.py       — operating modes, drain current, power, switching delays
calibration.py  — k recovery from reference currents
and_gate.py     — switching cases and AND-gate delay policies
sweeps.py       — power/delay curves and operating-point power summaries
"""

from .and_gate import (
    DEFAULT_POLICY,
    SWITCHING_CASES,
    AndDelayBreakdown,
    DelayPolicy,
    DeviceDelays,
    FixedDelay,
    PolicyConfigError,
    and_gate_delay,
    device_delays,
    policy_names,
    resolve_policy,
)
from .calibration import CalibrationError, at_gate_voltage, calibrate_k
from .datasheet import (
    DEFAULT_NMOS,
    DEFAULT_PMOS,
    PRESETS,
    DatasheetError,
    GateDrive,
    MosfetDatasheet,
    OperatingPoint,
    Polarity,
    load_datasheet,
    preset_names,
    save_datasheet,
)
from .mosfet import (
    DeviceDomainError,
    DeviceModeError,
    Mode,
    NoTurnOnError,
    classify_mode,
    dissipation_integral,
    drain_current,
    i_d_saturation,
    i_d_triode,
    power,
    saturation_current,
    total_gate_resistance,
    triode_current,
    turn_off_delay,
    turn_on_delay,
)
from .sweeps import DelaySample, ModePower, PowerSample, delay_sweep, power_summary, power_sweep

__all__ = [
    "DEFAULT_POLICY",
    "SWITCHING_CASES",
    "AndDelayBreakdown",
    "DelayPolicy",
    "DeviceDelays",
    "FixedDelay",
    "PolicyConfigError",
    "and_gate_delay",
    "device_delays",
    "policy_names",
    "resolve_policy",
    "CalibrationError",
    "at_gate_voltage",
    "calibrate_k",
    "DEFAULT_NMOS",
    "DEFAULT_PMOS",
    "PRESETS",
    "DatasheetError",
    "GateDrive",
    "MosfetDatasheet",
    "OperatingPoint",
    "Polarity",
    "load_datasheet",
    "preset_names",
    "save_datasheet",
    "DeviceDomainError",
    "DeviceModeError",
    "Mode",
    "NoTurnOnError",
    "classify_mode",
    "dissipation_integral",
    "drain_current",
    "i_d_saturation",
    "i_d_triode",
    "power",
    "saturation_current",
    "total_gate_resistance",
    "triode_current",
    "turn_off_delay",
    "turn_on_delay",
    "DelaySample",
    "ModePower",
    "PowerSample",
    "delay_sweep",
    "power_summary",
    "power_sweep",
]
