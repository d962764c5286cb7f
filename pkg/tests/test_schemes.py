import math

import numpy as np
import pytest

from sui_metrology import (
    OpaParams,
    SchemeConfig,
    amplitude_channel,
    load_preset,
    resource_sharing_check,
    run_scheme,
    transfer_coefficients,
)
from sui_metrology import formulas as F
from sui_metrology.schemes import (
    ConfigError,
    fit_mismatch,
    load_catalogue,
    lock_pump_phase,
)

GAINS = (1.0, 2.5, 10.0, 100.0)


def cfg(kind, **kw):
    return SchemeConfig(kind=kind, **kw)


# --- configuration -----------------------------------------------------------


def test_unknown_kind_and_key():
    with pytest.raises(ConfigError) as exc:
        cfg("sagnac")
    assert exc.value.field == "kind"
    with pytest.raises(ConfigError) as exc:
        SchemeConfig.from_mapping({"kind": "classical_hd", "g1_gain": 2})
    assert exc.value.field == "g1_gain"


@pytest.mark.parametrize("field,value", [
    ("eta_transmission", 1.5), ("eta_det_s", -0.1), ("g1_power_gain", 0.5),
    ("i_ps_photons", 0.0), ("delta_rad", 0.5), ("seeding", "both"),
])
def test_bad_values(field, value):
    with pytest.raises(ConfigError) as exc:
        SchemeConfig.from_mapping({"kind": "dual_beam_sui", field: value})
    assert exc.value.field == field


def test_from_mapping_coercion_and_shorthands():
    c = SchemeConfig.from_mapping({"kind": "dual_beam_sui", "g1_power_gain": "2.5", "eta_det": "0.2",
                                   "pump_phase_2_rad": "lock", "target_classical_snr_db": "6.0206"})
    assert c.g1_power_gain == 2.5
    assert c.eta_det_s == c.eta_det_i == 0.2
    assert c.pump_phase_2_rad is None
    assert c.delta_rad == pytest.approx(1e-3, rel=1e-5)
    assert SchemeConfig.from_mapping({"kind": "dual_beam_sui", "pump_phase_2_rad": ""}).pump_phase_2_rad is None
    with pytest.raises(ConfigError):
        SchemeConfig.from_mapping({"kind": "classical_hd", "delta_rad": 1e-3, "target_classical_snr_db": 10})
    with pytest.raises(ConfigError):
        SchemeConfig.from_mapping({"kind": "classical_hd", "delta_rad": "abc"})


def test_mapping_round_trip():
    c = load_preset("experiment-2018")
    assert SchemeConfig.from_mapping(c.to_mapping()) == c


def test_absent_amplifiers_are_normalised():
    assert cfg("classical_hd", g1_power_gain=5, g2_power_gain=5).g1_power_gain == 1.0
    assert cfg("truncated_dual", g1_power_gain=5, g2_power_gain=5).g2_power_gain == 1.0
    with pytest.raises(ConfigError):
        cfg("single_beam_sui", seeding="balanced")


# --- classical benchmark ------------------------------------------------------


def test_classical_values():
    r = run_scheme(cfg("classical_hd", i_ps_photons=1e6, delta_rad=1e-3))
    assert r.snr("hd1") == pytest.approx(4.0, rel=1e-12)
    assert r.ports["hd1"].snr_db == pytest.approx(6.0206, abs=1e-4)
    assert r.improvement_db("hd1") == pytest.approx(0.0, abs=1e-12)
    assert run_scheme(cfg("classical_hd", delta_rad=0.0)).snr("hd1") == 0.0
    lossy = run_scheme(cfg("classical_hd", i_ps_photons=1e6, delta_rad=1e-3, eta_det_s=0.25))
    assert lossy.snr("hd1") == pytest.approx(0.75 * 4.0, rel=1e-12)


# --- single-beam interferometer -------------------------------------------------


def test_single_beam_limit():
    r = run_scheme(cfg("single_beam_sui", g1_power_gain=2.5, g2_power_gain=1e4))
    assert r.improvement("hd1") == pytest.approx(3.936492, rel=5e-3)
    assert r.improvement_db("hd1") == pytest.approx(5.95, abs=0.01)


def test_single_beam_unit_first_gain():
    # no squeezing: the second amplifier can only add noise, halving the classical SNR in the limit
    imps = [run_scheme(cfg("single_beam_sui", g1_power_gain=1.0, g2_power_gain=g2)).improvement("hd1")
            for g2 in (1.0, 12.0, 1e2, 1e4, 1e6)]
    assert imps[0] == pytest.approx(1.0, rel=1e-12)
    assert all(b < a for a, b in zip(imps, imps[1:]))
    assert imps[-1] == pytest.approx(0.5, rel=1e-6)
    r = run_scheme(cfg("single_beam_sui", g1_power_gain=1.0, g2_power_gain=1e4))
    assert r.snr("hd1") == pytest.approx(2 * 1e6 * 1e-6, rel=1e-4)


def test_zero_depth_means_zero_signal():
    for kind in ("single_beam_sui", "dual_beam_sui", "truncated_dual"):
        r = run_scheme(cfg(kind, g1_power_gain=2.5, g2_power_gain=12, delta_rad=0.0))
        assert not np.any(r.signals)
        assert r.improvement("hd1") is None


# --- dual-beam interferometer ---------------------------------------------------


def test_dual_beam_limit():
    r = run_scheme(cfg("dual_beam_sui", g1_power_gain=2.5, g2_power_gain=1e4))
    assert r.improvement("hd1") == pytest.approx(F.dual_beam_sui_snr(1, 1, 2.5) / 4, rel=5e-3)
    assert r.improvement_db("hd1") == pytest.approx(8.89, abs=0.01)


def test_dual_over_single_at_high_gain():
    kw = dict(g1_power_gain=100.0, g2_power_gain=1e4)
    ratio = run_scheme(cfg("dual_beam_sui", **kw)).snr("hd1") / run_scheme(cfg("single_beam_sui", **kw)).snr("hd1")
    assert ratio == pytest.approx(2.0, rel=0.05)


def test_dark_fringe_lock_finds_pi():
    c = cfg("dual_beam_sui", g1_power_gain=2.5, g2_power_gain=12, pump_phase_2_rad=None)
    phi = lock_pump_phase(c)
    assert math.cos(phi) == pytest.approx(-1.0, abs=1e-8)
    r = run_scheme(c)
    assert r.pump_phase_2_rad == pytest.approx(phi)
    fixed = run_scheme(c.replace(pump_phase_2_rad=math.pi))
    assert r.snr("hd1") == pytest.approx(fixed.snr("hd1"), rel=1e-8)


@pytest.mark.parametrize("kind,closed", [
    ("single_beam_sui", lambda g1: F.single_beam_sui_snr(1, 1, g1) / 4),
    ("dual_beam_sui", lambda g1: F.dual_beam_sui_snr(1, 1, g1) / 4),
])
@pytest.mark.parametrize("g1", GAINS)
def test_convergence_in_second_gain(kind, closed, g1):
    errs = []
    for g2 in (10.0, 1e2, 1e3, 1e4):
        imp = run_scheme(cfg(kind, g1_power_gain=g1, g2_power_gain=g2)).improvement("hd1")
        errs.append(abs(imp - closed(g1)) / closed(g1))
    assert all(b <= a for a, b in zip(errs, errs[1:])), errs
    assert errs[-1] < 1e-3


# --- truncated scheme and squeezed benchmark -----------------------------------


def test_truncated_lossless():
    r = run_scheme(cfg("truncated_dual", g1_power_gain=2.5, seeding="balanced"))
    assert r.improvement("jm") == pytest.approx(7.872983, rel=1e-6)
    assert r.improvement_db("jm") == pytest.approx(8.96, abs=0.01)
    # single detector sees thermal noise 4 and only part of the signal
    assert r.improvement("hd1") < 0.5


@pytest.mark.parametrize("eta", [0.1, 0.25, 0.5])
def test_truncated_detection_loss(eta):
    S = OpaParams.from_power_gain(2.5).squeezing
    r = run_scheme(cfg("truncated_dual", g1_power_gain=2.5, seeding="balanced", eta_det_s=eta, eta_det_i=eta))
    assert r.improvement("jm_opt") == pytest.approx(1 / F.lossy_squeezing(S, eta), rel=1e-9)
    assert r.closed_form_improvement == pytest.approx(r.improvement("jm_opt"), rel=1e-9)


def test_squeezed_benchmark():
    S = OpaParams.from_power_gain(2.5).squeezing
    assert run_scheme(cfg("squeezed_benchmark", g1_power_gain=2.5)).improvement() == pytest.approx(7.872983, rel=1e-6)
    assert run_scheme(cfg("squeezed_benchmark", g1_power_gain=1.0)).improvement() == pytest.approx(1.0, rel=1e-12)
    r = run_scheme(cfg("squeezed_benchmark", g1_power_gain=2.5, eta_det_s=0.25))
    assert r.improvement() == pytest.approx(1 / F.lossy_squeezing(S, 0.25), rel=1e-12)


@pytest.mark.parametrize("g1", GAINS)
def test_truncated_optimum_equals_squeezed_benchmark(g1):
    t = run_scheme(cfg("truncated_dual", g1_power_gain=g1, seeding="balanced")).improvement("jm_opt")
    s = run_scheme(cfg("squeezed_benchmark", g1_power_gain=g1)).improvement("hd1")
    assert t == pytest.approx(s, rel=1e-9)


def test_loss_tolerance():
    kw = dict(g1_power_gain=2.5, seeding="balanced")
    sui0 = run_scheme(cfg("dual_beam_sui", g2_power_gain=1e4, **kw)).improvement_db("hd1")
    sui = run_scheme(cfg("dual_beam_sui", g2_power_gain=1e4, eta_det_s=0.25, eta_det_i=0.25, **kw)).improvement_db("hd1")
    tr0 = run_scheme(cfg("truncated_dual", **kw)).improvement_db("jm_opt")
    tr = run_scheme(cfg("truncated_dual", eta_det_s=0.25, eta_det_i=0.25, **kw)).improvement_db("jm_opt")
    assert sui0 - sui < 0.2
    assert tr0 - tr > 2.0


# --- amplitude channel and resource sharing -------------------------------------


def test_amplitude_channel():
    c = cfg("dual_beam_sui", g1_power_gain=2.5, g2_power_gain=1e4, epsilon=1e-3)
    r = amplitude_channel(c)
    assert r.snr_linear == pytest.approx(0.5 * 1e6 * 1e-6, rel=5e-3)
    hi = amplitude_channel(c.replace(g1_power_gain=100.0))
    assert hi.snr_linear / r.snr_linear < 0.05
    with pytest.raises(ConfigError):
        amplitude_channel(c.replace(epsilon=0.0))


@pytest.mark.parametrize("g1", GAINS)
def test_resource_sharing(g1):
    closed, sim = resource_sharing_check(cfg("dual_beam_sui", g1_power_gain=g1, epsilon=1e-3))
    assert closed == pytest.approx(0.0, abs=1e-15)
    assert sim < 1e-3


def test_resource_sharing_unit_gain_halves():
    c = cfg("dual_beam_sui", g1_power_gain=1.0, g2_power_gain=1e6, epsilon=1e-3)
    pm = run_scheme(c).snr("hd1")
    am = amplitude_channel(c).snr_linear
    assert pm == pytest.approx(am, rel=1e-5)
    assert pm + am == pytest.approx(F.classical_hd_snr(1e6, 1e-3), rel=1e-5)


# --- transfer coefficients --------------------------------------------------------


def test_transfer_lossless():
    t = transfer_coefficients(cfg("dual_beam_sui", g1_power_gain=2.5, g2_power_gain=1e4))
    assert t.t_s == pytest.approx(0.984, abs=1e-3)
    assert t.t_i == pytest.approx(0.984, abs=1e-3)
    assert t.total == pytest.approx(1.968, abs=1e-3)
    unit = transfer_coefficients(cfg("dual_beam_sui", g1_power_gain=1.0, g2_power_gain=1e4))
    assert unit.t_s == pytest.approx(0.5, abs=1e-4)
    assert unit.t_i == pytest.approx(0.5, abs=1e-4)
    assert unit.total == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("g1", [1.01, 1.5, 2.5, 10.0, 100.0])
def test_tapping_bound(g1):
    total = transfer_coefficients(cfg("dual_beam_sui", g1_power_gain=g1, g2_power_gain=1e6)).total
    assert 1.0 < total <= 2.0


# --- presets ------------------------------------------------------------------------


def test_catalogue_loads():
    cat = load_catalogue()
    assert {"classical-2018", "experiment-2018", "experiment-2018-truncated", "experiment-2018-single"} <= set(cat)
    for name in cat:
        load_preset(name)
    with pytest.raises(ConfigError):
        load_preset("missing")


def test_classical_preset_calibration():
    r = run_scheme(load_preset("classical-2018"))
    assert r.ports["hd1"].snr_db == pytest.approx(17.8, abs=1e-9)
    assert r.config.delta_rad == pytest.approx(3.881e-4, abs=5e-7)


def test_committed_mismatch_matches_refit():
    c = load_preset("experiment-2018")
    assert fit_mismatch(c, 3.9) == pytest.approx(c.eta_mismatch, abs=1e-9)


def test_experiment_preset_reports_both_benchmarks():
    r = run_scheme(load_preset("experiment-2018"))
    rec = r.to_record()
    assert rec["improvement_db"] == pytest.approx(r.improvement_db("jm_opt"))
    assert rec["jm_opt_improvement_lossy_db"] == pytest.approx(3.9, abs=1e-6)
    assert r.benchmark_lossy_snr < r.benchmark_snr
