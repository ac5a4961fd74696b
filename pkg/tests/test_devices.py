import dataclasses
import json
import logging
import math

import numpy as np
import pytest
from scipy.integrate import quad

from devices import (
    SWITCHING_CASES,
    CalibrationError,
    DatasheetError,
    DeviceDelays,
    DeviceDomainError,
    DeviceModeError,
    GateDrive,
    Mode,
    NoTurnOnError,
    OperatingPoint,
    Polarity,
    PolicyConfigError,
    and_gate_delay,
    at_gate_voltage,
    calibrate_k,
    classify_mode,
    delay_sweep,
    dissipation_integral,
    drain_current,
    i_d_saturation,
    i_d_triode,
    load_datasheet,
    power,
    power_summary,
    power_sweep,
    preset_names,
    resolve_policy,
    saturation_current,
    save_datasheet,
    triode_current,
    turn_off_delay,
    turn_on_delay,
)
from devices.datasheet import PF


# ---------------------------------------------------------------------------
# Datasheets
# ---------------------------------------------------------------------------

def test_presets(nmos, pmos):
    assert preset_names() == ["SiRA04DP", "SiA469DJ"]
    assert nmos.polarity is Polarity.NMOS
    assert nmos.c_iss_at_0v == pytest.approx(4000 * PF)
    assert pmos.v_th == 3.0 and pmos.v_gp == 2.1
    assert load_datasheet("sira04dp") is nmos


def test_unknown_device(tmp_path):
    with pytest.raises(DatasheetError, match="SiRA04DP"):
        load_datasheet(tmp_path / "missing.json")


def test_datasheet_file_round_trip(tmp_path, nmos):
    path = save_datasheet(nmos, tmp_path / "nmos.json")
    loaded = load_datasheet(path)
    assert loaded.name == nmos.name and loaded.polarity is nmos.polarity
    assert loaded.c_iss_at_0v == pytest.approx(nmos.c_iss_at_0v, rel=1e-12)
    assert loaded.reference_currents == nmos.reference_currents


def test_datasheet_file_defaults(tmp_path):
    path = tmp_path / "dev.json"
    path.write_text(json.dumps({
        "name": "X", "polarity": "pmos", "r_g_ohm": 2, "c_iss_0v_pf": 100,
        "c_iss_vds_pf": 80, "v_th_v": 1.0, "v_gp_v": 1.8, "k_a_per_v2": 3.0,
    }))
    ds = load_datasheet(path)
    assert ds.polarity is Polarity.PMOS
    assert ds.lambda_ == 0.0
    assert ds.k == 3.0
    assert ds.c_iss_at_vds == pytest.approx(80 * PF)


def test_datasheet_missing_key(tmp_path):
    path = tmp_path / "dev.json"
    path.write_text(json.dumps({"name": "X"}))
    with pytest.raises(DatasheetError, match="polarity"):
        load_datasheet(path)


@pytest.mark.parametrize("overrides", [{"v_th": 0.0}, {"k": -1.0}, {"lambda_": -0.1}, {"r_g": -1.0}])
def test_datasheet_validation(make_ds, overrides):
    with pytest.raises(DatasheetError):
        make_ds(**overrides)


def test_operating_point_rejects_negative():
    with pytest.raises(DatasheetError):
        OperatingPoint(v_gs=-1.0, v_ds=0.0)


# ---------------------------------------------------------------------------
# Modes and currents
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("v_gs, v_ds, mode", [
    (1.0, 2.0, Mode.CUTOFF),
    (1.7, 2.0, Mode.CUTOFF),
    (3.3, 0.5, Mode.TRIODE),
    (3.3, 1.6, Mode.SATURATION),
])
def test_classify_mode(make_ds, v_gs, v_ds, mode):
    ds = make_ds(v_th=1.7)
    assert classify_mode(ds, OperatingPoint(v_gs, v_ds)) is mode


def test_triode_examples(make_ds):
    assert i_d_triode(make_ds(k=1.0), OperatingPoint(2.0, 0.5)) == pytest.approx(0.375)
    assert i_d_triode(make_ds(k=2.0), OperatingPoint(3.0, 1.0)) == pytest.approx(3.0)
    assert i_d_triode(make_ds(k=1.0), OperatingPoint(2.0, 1e-12)) == pytest.approx(0.0, abs=1e-11)


def test_saturation_examples(make_ds):
    assert i_d_saturation(make_ds(k=1.0), OperatingPoint(2.0, 1.0)) == pytest.approx(0.5)
    assert i_d_saturation(make_ds(k=1.0), OperatingPoint(2.0, 7.0)) == pytest.approx(0.5)
    ds = make_ds(k=2.0, lambda_=0.01)
    assert i_d_saturation(ds, OperatingPoint(3.0, 5.0)) == pytest.approx(4.2)


def test_mode_guards(make_ds):
    ds = make_ds()
    with pytest.raises(DeviceModeError):
        i_d_triode(ds, OperatingPoint(2.0, 2.0))
    with pytest.raises(DeviceModeError):
        i_d_saturation(ds, OperatingPoint(2.0, 0.5))
    with pytest.raises(DeviceModeError):
        i_d_triode(ds, OperatingPoint(0.5, 0.5))


def test_current_needs_k(nmos):
    with pytest.raises(DatasheetError):
        i_d_triode(nmos, OperatingPoint(3.3, 0.5))


def test_power_examples(make_ds):
    ds = make_ds(k=1.0)
    assert power(ds, OperatingPoint(2.0, 0.5)) == pytest.approx(0.1875)
    assert power(ds, OperatingPoint(2.0, 2.0)) == pytest.approx(1.0)
    assert power(ds, OperatingPoint(0.9, 5.0)) == 0.0


def test_power_zero_in_cutoff_positive_elsewhere(make_ds):
    rng = np.random.default_rng(5)
    ds = make_ds(k=4.0, v_th=1.5, lambda_=0.02)
    for v_gs, v_ds in rng.uniform(0.0, 6.0, size=(500, 2)):
        p = power(ds, OperatingPoint(v_gs, v_ds))
        if v_gs <= ds.v_th:
            assert p == 0.0
        elif v_ds > 0:
            assert p > 0


def test_continuity_at_mode_boundary():
    rng = np.random.default_rng(0)
    for _ in range(1000):
        k = rng.uniform(0.01, 500.0)
        v_th = rng.uniform(0.2, 4.0)
        v_gs = v_th + rng.uniform(0.01, 8.0)
        v_ov = v_gs - v_th
        tri = triode_current(k, v_ov, v_ov)
        sat = saturation_current(k, v_ov, v_ov, 0.0)
        assert tri == pytest.approx(sat, rel=1e-12)


# ---------------------------------------------------------------------------
# Dissipation
# ---------------------------------------------------------------------------

def test_dissipation_examples(make_ds):
    ds = make_ds(k=1.0)
    assert dissipation_integral(ds, 2.0, 0.5) == pytest.approx(0.1041666666, rel=1e-9)
    assert dissipation_integral(ds, 2.0, 0.4, v_off=0.4) == 0.0


def test_dissipation_matches_quadrature(make_ds):
    rng = np.random.default_rng(42)
    for _ in range(100):
        k = rng.uniform(0.1, 100.0)
        v_th = rng.uniform(0.5, 3.0)
        v_gs = v_th + rng.uniform(0.1, 6.0)
        v_ov = v_gs - v_th
        v_off, v_ds = sorted(rng.uniform(0.0, v_ov, size=2))
        ds = make_ds(k=k, v_th=v_th)
        expected, _ = quad(lambda v: triode_current(k, v_ov, v), v_off, v_ds, epsabs=0, epsrel=1e-13)
        got = dissipation_integral(ds, v_gs, v_ds, v_off)
        assert got == pytest.approx(expected, rel=1e-9, abs=1e-15)


def test_dissipation_fixed_example(make_ds):
    expected, _ = quad(lambda v: 3.0 * (2.0 * v - v * v / 2), 0.2, 1.0)
    assert dissipation_integral(make_ds(k=3.0), 3.0, 1.0, 0.2) == pytest.approx(expected, rel=1e-9)


@pytest.mark.parametrize("v_ds, v_off", [(1.5, 0.0), (0.5, 0.6), (0.5, -0.1)])
def test_dissipation_range_errors(make_ds, v_ds, v_off):
    with pytest.raises(DeviceDomainError):
        dissipation_integral(make_ds(), 2.0, v_ds, v_off)


# ---------------------------------------------------------------------------
# Switching delays
# ---------------------------------------------------------------------------

def test_five_volt_delays(nmos, pmos, drive):
    assert turn_on_delay(nmos, drive, 5.0) == pytest.approx(29.1e-9, rel=5e-3)
    assert turn_off_delay(nmos, drive, 5.0) == pytest.approx(28.8e-9, rel=5e-3)
    assert turn_on_delay(pmos, drive, 5.0) == pytest.approx(10.6e-9, rel=5e-3)
    assert turn_off_delay(pmos, drive, 5.0) == pytest.approx(24.7e-9, rel=5e-3)


def test_five_volt_delays_within_published_band(nmos, pmos, drive):
    assert turn_on_delay(nmos, drive, 5.0) == pytest.approx(30e-9, rel=0.2)
    assert turn_off_delay(nmos, drive, 5.0) == pytest.approx(30e-9, rel=0.2)
    assert turn_on_delay(pmos, drive, 5.0) == pytest.approx(10e-9, rel=0.2)
    assert turn_off_delay(pmos, drive, 5.0) == pytest.approx(25e-9, rel=0.2)


def test_three_volt_delays_follow_formula(nmos, drive):
    # At 3.3 V the NMOS turn-on is the slow transition (~61 ns), not the turn-off.
    assert turn_on_delay(nmos, drive, 3.3) == pytest.approx(11 * 3600 * PF * math.log(3.3 / 0.7))
    assert turn_off_delay(nmos, drive, 3.3) == pytest.approx(11 * 4000 * PF * math.log(3.3 / 2.6))
    assert turn_on_delay(nmos, drive, 3.3) > turn_off_delay(nmos, drive, 3.3)


def test_no_turn_on_at_or_below_plateau(nmos, drive):
    with pytest.raises(NoTurnOnError):
        turn_on_delay(nmos, drive, 2.6)
    with pytest.raises(NoTurnOnError):
        turn_on_delay(nmos, drive, 1.0)


def test_turn_on_diverges_near_plateau(nmos, drive):
    delays = [turn_on_delay(nmos, drive, 2.6 + eps) for eps in (1e-3, 1e-6, 1e-9, 1e-12)]
    assert all(a < b for a, b in zip(delays, delays[1:]))
    v_gs = 2.6 + 1e-9
    assert delays[2] == pytest.approx(11 * 3600 * PF * math.log(v_gs / (v_gs - 2.6)), rel=1e-6)


def test_turn_off_boundaries(nmos, drive):
    assert turn_off_delay(nmos, drive, 2.6) == 0.0
    with pytest.raises(DeviceDomainError):
        turn_off_delay(nmos, drive, 0.0)
    with pytest.raises(DeviceDomainError):
        turn_off_delay(nmos, drive, 2.0)


@pytest.mark.parametrize("name", ["SiRA04DP", "SiA469DJ"])
def test_delay_monotonicity(name, drive):
    ds = load_datasheet(name)
    v = np.linspace(ds.v_gp + 0.01, 20.0, 400)
    t_on = [turn_on_delay(ds, drive, x) for x in v]
    t_off = [turn_off_delay(ds, drive, x) for x in v]
    assert all(a > b for a, b in zip(t_on, t_on[1:]))
    assert all(a < b for a, b in zip(t_off, t_off[1:]))


def test_delays_scale_with_gate_resistance(make_ds):
    rng = np.random.default_rng(9)
    ds = make_ds(r_g=0.0, v_gp=2.0)
    for r, v_gs in zip(rng.uniform(1.0, 50.0, 50), rng.uniform(2.1, 10.0, 50)):
        one, two = GateDrive(r), GateDrive(2 * r)
        assert turn_on_delay(ds, two, v_gs) == pytest.approx(2 * turn_on_delay(ds, one, v_gs), rel=1e-12)
        assert turn_off_delay(ds, two, v_gs) == pytest.approx(2 * turn_off_delay(ds, one, v_gs), rel=1e-12)


# ---------------------------------------------------------------------------
# Calibration
# ---------------------------------------------------------------------------

def test_calibrate_k_examples(make_ds):
    ds = make_ds(k=None)
    assert calibrate_k(ds, 0.5, OperatingPoint(2.0, 1.5)) == pytest.approx(1.0)
    assert calibrate_k(ds, 0.375, OperatingPoint(2.0, 0.5)) == pytest.approx(1.0)
    with pytest.raises(CalibrationError):
        calibrate_k(ds, 0.0, OperatingPoint(2.0, 1.5))
    with pytest.raises(CalibrationError):
        calibrate_k(ds, 1.0, OperatingPoint(0.5, 1.5))
    with pytest.raises(CalibrationError):
        calibrate_k(ds, 1.0, OperatingPoint(2.0, 0.0))


def test_calibrate_k_is_right_inverse(make_ds):
    rng = np.random.default_rng(21)
    for _ in range(200):
        v_th = rng.uniform(0.5, 3.0)
        v_gs = v_th + rng.uniform(0.1, 5.0)
        v_ds = rng.uniform(0.01, 8.0)
        ref = rng.uniform(0.01, 300.0)
        ds = make_ds(k=None, v_th=v_th, lambda_=rng.uniform(0.0, 0.05))
        op = OperatingPoint(v_gs, v_ds)
        k = calibrate_k(ds, ref, op)
        _, i_d = drain_current(make_ds(k=k, v_th=v_th, lambda_=ds.lambda_), op)
        assert i_d == pytest.approx(ref, rel=1e-12)


@pytest.mark.parametrize("name, v_gs, current", [
    ("SiRA04DP", 3.3, 35.0),
    ("SiRA04DP", 5.0, 235.0),
    ("SiA469DJ", 3.3, 15.0),
    ("SiA469DJ", 5.0, 90.0),
])
def test_profiles_reproduce_reference_currents(name, v_gs, current):
    ds = at_gate_voltage(load_datasheet(name), v_gs)
    assert ds.k is not None
    assert i_d_saturation(ds, OperatingPoint(v_gs, v_gs)) == pytest.approx(current, rel=1e-12)


def test_nmos_profile_k(nmos):
    assert at_gate_voltage(nmos, 3.3).k == pytest.approx(2 * 35.0 / 1.6 ** 2)


def test_nearest_profile_warns(nmos, caplog):
    with caplog.at_level(logging.WARNING, logger="greenlight.devices.calibration"):
        ds = at_gate_voltage(nmos, 4.0)
    assert ds.k == pytest.approx(at_gate_voltage(nmos, 3.3).k)
    assert "3.3 V profile" in caplog.text


def test_explicit_k_wins(nmos):
    fixed = dataclasses.replace(nmos, k=12.0)
    assert at_gate_voltage(fixed, 5.0).k == 12.0


def test_cutoff_needs_no_k(pmos):
    assert at_gate_voltage(pmos, 2.0).k is None


def test_no_profile_no_k(make_ds):
    with pytest.raises(CalibrationError):
        at_gate_voltage(make_ds(k=None), 3.0)


# ---------------------------------------------------------------------------
# AND-gate delay
# ---------------------------------------------------------------------------

def test_switching_cases_cover_three_input_states():
    assert [c.name for c in SWITCHING_CASES] == ["both-low", "one-high", "both-high"]
    for case in SWITCHING_CASES:
        assert len(case.nand.turning_on) == 2
        assert len(case.inv.turning_on) == len(case.inv.turning_off) == 1


def test_default_policy_with_symmetric_devices():
    d = 7e-9
    value, _ = resolve_policy("stage-worst-case").aggregate(DeviceDelays(d, d, d, d))
    assert value == pytest.approx(2 * d)


def test_other_policies_with_symmetric_devices():
    d = 7e-9
    delays = DeviceDelays(d, d, d, d)
    assert resolve_policy("on-plus-off").aggregate(delays)[0] == pytest.approx(4 * d)
    assert resolve_policy("serial-sum").aggregate(delays)[0] == pytest.approx(4 * d)


def test_default_policy_at_three_volts(nmos, pmos, drive):
    bd = and_gate_delay(nmos, pmos, drive, 3.3)
    assert bd.policy == "stage-worst-case"
    assert bd.nmos_on_s == pytest.approx(61.4e-9, rel=5e-3)
    assert bd.nmos_off_s == pytest.approx(10.5e-9, rel=1e-2)
    assert bd.pmos_on_s == pytest.approx(19.6e-9, rel=1e-2)
    assert bd.pmos_off_s == pytest.approx(12.9e-9, rel=1e-2)
    assert bd.and_delay_s == pytest.approx(2 * bd.nmos_on_s)
    assert bd.worst_case.startswith("nand:")


def test_fixed_policy(nmos, pmos, drive):
    bd = and_gate_delay(nmos, pmos, drive, 3.3, policy="fixed:80e-9")
    assert bd.and_delay_s == 80e-9
    assert bd.nmos_on_s > 0


@pytest.mark.parametrize("name", ["nope", "fixed:", "fixed:abc", "fixed:-1"])
def test_bad_policies(name):
    with pytest.raises(PolicyConfigError):
        resolve_policy(name)


def test_unknown_policy_lists_choices():
    with pytest.raises(PolicyConfigError, match="stage-worst-case"):
        resolve_policy("fastest")


def test_and_gate_needs_both_polarities(nmos, drive):
    with pytest.raises(DatasheetError):
        and_gate_delay(nmos, nmos, drive, 5.0)


def test_and_gate_below_plateau(nmos, pmos, drive):
    with pytest.raises(NoTurnOnError):
        and_gate_delay(nmos, pmos, drive, 2.5)


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

def test_power_sweep_cutoff_is_all_zero(pmos):
    samples = power_sweep(pmos, 2.5, (0.0, 5.0), 0.1)
    assert all(s.p == 0.0 and s.mode is Mode.CUTOFF for s in samples)


def test_power_sweep_shape(nmos):
    samples = power_sweep(nmos, 3.3, (0.0, 3.3), 0.01)
    assert samples[0].v_ds == 0.0
    assert samples[-1].v_ds == 3.3
    assert len(samples) == 331
    assert samples[-1].i_d == pytest.approx(35.0, rel=1e-9)
    assert {s.mode for s in samples} == {Mode.TRIODE, Mode.SATURATION}
    powers = [s.p for s in samples]
    assert all(a <= b for a, b in zip(powers, powers[1:]))


def test_power_sweep_keeps_uneven_endpoint(make_ds):
    samples = power_sweep(make_ds(), 2.0, (0.0, 1.05), 0.1)
    assert samples[-1].v_ds == 1.05


def test_power_sweep_errors(make_ds):
    with pytest.raises(DeviceDomainError):
        power_sweep(make_ds(), 2.0, (2.0, 1.0), 0.1)
    with pytest.raises(DeviceDomainError):
        power_sweep(make_ds(), 2.0, (0.0, 1.0), 0.0)


def test_delay_sweep_default_range(nmos, drive):
    samples, omitted = delay_sweep(nmos, drive)
    assert omitted == 0
    assert samples[0].v_gs == pytest.approx(2.7)
    assert samples[-1].v_gs == 10.0
    row = min(samples, key=lambda s: abs(s.v_gs - 5.0))
    assert row.t_on == pytest.approx(29.1e-9, rel=5e-3)


def test_delay_sweep_omits_rows_below_plateau(nmos, drive, caplog):
    with caplog.at_level(logging.WARNING, logger="greenlight.devices.sweeps"):
        samples, omitted = delay_sweep(nmos, drive, start=2.0, stop=3.0, step=0.25)
    assert omitted == 3
    assert all(s.v_gs > nmos.v_gp for s in samples)
    assert "omitted 3" in caplog.text


def test_power_summary(nmos, pmos):
    summary = power_summary(nmos, 3.3)
    assert summary.rail_mode == "saturation"
    assert summary.rail_w == pytest.approx(35.0 * 3.3)
    assert summary.mid_triode_v_ds == pytest.approx(0.8)
    assert summary.triode_dissipation_w > 0
    assert power_summary(pmos, 2.0).rail_w == 0.0
