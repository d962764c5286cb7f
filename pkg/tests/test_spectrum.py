import math

import numpy as np
import pytest

from sui_metrology import SchemeConfig, load_preset, run_scheme
from sui_metrology.spectrum import SpectrumOptions, synthesize


def peak_and_floor(trace, freqs, f_mod):
    i = int(np.argmin(np.abs(freqs - f_mod)))
    others = np.delete(trace, i)
    return trace[i], others


def test_classical_peak_height():
    cols = synthesize(run_scheme(load_preset("classical-2018")))
    peak, floor = peak_and_floor(cols["hd1_db"], cols["frequency_hz"], 1.56e6)
    assert np.all(floor == 0.0)
    assert peak == pytest.approx(10 * math.log10(1 + 10**1.78), abs=1e-9)


def test_zero_modulation_is_flat():
    cols = synthesize(run_scheme(SchemeConfig(kind="dual_beam_sui", g1_power_gain=2.5, g2_power_gain=12,
                                              delta_rad=0.0)))
    for name in ("hd1_db", "hd2_db", "jm_db"):
        assert np.ptp(cols[name]) == 0.0


def test_truncated_joint_floor_below_joint_shot_noise():
    cols = synthesize(run_scheme(SchemeConfig(kind="truncated_dual", g1_power_gain=2.5)))
    gap = cols["snl_si_db"][0] - cols["jm_db"][0]
    G, g = math.sqrt(2.5), math.sqrt(1.5)
    assert gap == pytest.approx(10 * math.log10(2 / (2 * (G - g) ** 2)), abs=1e-9)
    assert gap == pytest.approx(8.96, abs=0.01)
    assert cols["snl_si_db"][0] == pytest.approx(3.0103, abs=1e-4)


def test_grid_and_options():
    opts = SpectrumOptions(span_hz=1e5, rbw_hz=1e4)
    f = opts.frequencies()
    assert len(f) == 11
    assert f[0] == pytest.approx(1.51e6)
    assert f[-1] == pytest.approx(1.61e6)
    for bad in (dict(rbw_hz=0.0), dict(span_hz=-1.0), dict(modulation_frequency_hz=5e6),
                dict(center_frequency_hz=1e5, modulation_frequency_hz=1e5, span_hz=1e6)):
        with pytest.raises(ValueError):
            SpectrumOptions(**bad)


def test_bad_normalisation_port():
    r = run_scheme(load_preset("classical-2018"))
    with pytest.raises(ValueError):
        synthesize(r, SpectrumOptions(normalization_port="hd2"))
