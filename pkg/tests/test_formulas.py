import math

import pytest

from sui_metrology import formulas as F
from sui_metrology.schemes import calibrate_modulation


def test_classical_value():
    assert F.classical_hd_snr(1, 1) == 4.0
    assert F.classical_hd_snr(1e6, 1e-3) == pytest.approx(4.0)


def test_unit_gain_reduces_to_classical():
    assert F.squeezed_snr(1e6, 1e-3, 1.0) == pytest.approx(F.classical_hd_snr(1e6, 1e-3))
    assert F.single_beam_sui_snr(1e6, 1e-3, 1.0) == pytest.approx(0.5 * F.classical_hd_snr(1e6, 1e-3))
    assert F.transfer_coefficient(1.0) == pytest.approx(0.5)


def test_frozen_values_at_power_gain_2p5():
    # (G+g)^2 with G = sqrt(2.5), g = sqrt(1.5), evaluated independently
    assert F.squeezed_snr(1, 1, 2.5) / 4 == pytest.approx(7.872983, rel=1e-6)
    assert F.single_beam_sui_snr(1, 1, 2.5) / 4 == pytest.approx(3.936492, rel=1e-6)
    assert F.dual_beam_sui_snr(1, 1, 2.5) / 4 == pytest.approx(7.747983, rel=1e-6)
    assert F.transfer_coefficient(2.5) == pytest.approx(0.984123, rel=1e-6)


def test_amplitude_channel_values():
    assert F.amplitude_snr(1.0, 1.0, 2.5) == pytest.approx(0.5)
    assert F.amplitude_snr(1.0, 0.0, 2.5) == 0.0
    assert F.amplitude_snr(1, 1, 100) / F.amplitude_snr(1, 1, 2.5) < 0.05


@pytest.mark.parametrize("g1", [1.0, 2.5, 10.0, 100.0])
def test_resource_sharing_closed_form_is_exact(g1):
    assert F.resource_residual(1e6, 1e-3, g1) == pytest.approx(0.0, abs=1e-15)


def test_resource_sharing_unit_gain_halves():
    assert F.dual_beam_sui_snr(1, 1, 1.0) == pytest.approx(2.0)
    assert F.amplitude_snr(1, 1, 1.0) == pytest.approx(2.0)


def test_loss_formulas():
    S = 1 / (math.sqrt(2.5) + math.sqrt(1.5)) ** 2
    assert F.lossy_squeezing(S, 0.0) == S
    assert F.lossy_squeezing(S, 0.25) == pytest.approx(S + 1 / 3)
    assert F.sui_lossy_squeezing(0.127, 0.25, 12) == pytest.approx(0.1409, abs=5e-5)
    with pytest.raises(ValueError):
        F.lossy_squeezing(S, 1.0)


def test_registry_lookup():
    assert F.formula("classical_hd_snr", i_ps=1, delta=1) == 4.0
    with pytest.raises(ValueError, match="unknown"):
        F.formula("nope")
    with pytest.raises(ValueError, match="missing"):
        F.formula("classical_hd_snr", i_ps=1)
    with pytest.raises(ValueError):
        F.formula("classical_hd_snr", i_ps=1, delta=1, extra=2)
    with pytest.raises(ValueError):
        F.squeezed_snr(1, 1, 0.5)


def test_calibration():
    assert calibrate_modulation(10 * math.log10(4.0), 1e6) == pytest.approx(1e-3, rel=1e-12)
    d = calibrate_modulation(17.8, 1e8)
    assert d == pytest.approx(3.881e-4, abs=5e-7)
    assert 10 * math.log10(F.classical_hd_snr(1e8, d)) == pytest.approx(17.8, abs=1e-12)
    for bad in (-math.inf, math.nan):
        with pytest.raises(ValueError):
            calibrate_modulation(bad, 1e8)
