"""Closed-form SNR expressions, kept free of any simulation code.

All SNRs are in shot-noise units. ``g1_power_gain`` is ``G1**2`` of the first
amplifier; the amplitude gains follow from ``G**2 - g**2 = 1``.
"""

from __future__ import annotations

import inspect
import math


def _gains(power_gain: float) -> tuple[float, float]:
    if not power_gain >= 1.0:
        raise ValueError(f"power gain must be >= 1, got {power_gain}")
    return math.sqrt(power_gain), math.sqrt(power_gain - 1.0)


def classical_hd_snr(i_ps, delta):
    """Coherent probe read by an ideal homodyne detector."""
    return 4.0 * i_ps * delta**2


def single_beam_sui_snr(i_ps, delta, g1_power_gain):
    """Single-beam SU(1,1) interferometer, infinite second-amplifier gain."""
    G, g = _gains(g1_power_gain)
    return 2.0 * i_ps * delta**2 * (G + g) ** 2


def squeezed_snr(i_ps, delta, g1_power_gain):
    G, g = _gains(g1_power_gain)
    return 4.0 * i_ps * delta**2 * (G + g) ** 2


def dual_beam_sui_snr(i_ps, delta, g1_power_gain):
    """Per-port phase SNR of the dual-beam interferometer; ``i_ps = (G1^2 + g1^2) |alpha|^2``."""
    G, g = _gains(g1_power_gain)
    return 2.0 * (G + g) ** 4 * i_ps * delta**2 / (G * G + g * g)


def amplitude_snr(i_ps, epsilon, g1_power_gain):
    """Amplitude-modulation SNR of the dual-beam interferometer (common-mode suppressed)."""
    G, g = _gains(g1_power_gain)
    return 2.0 * i_ps * epsilon**2 / (G * G + g * g)


def resource_sum(i_ps, delta, g1_power_gain):
    """Phase plus amplitude SNR of the dual-beam interferometer at ``epsilon = delta``."""
    return dual_beam_sui_snr(i_ps, delta, g1_power_gain) + amplitude_snr(i_ps, delta, g1_power_gain)


def resource_residual(i_ps, delta, g1_power_gain):
    """Relative gap between :func:`resource_sum` and the squeezed-state SNR."""
    ref = squeezed_snr(i_ps, delta, g1_power_gain)
    return abs(resource_sum(i_ps, delta, g1_power_gain) - ref) / ref


def transfer_coefficient(g1_power_gain):
    """Per-port transfer coefficient of the ideal tap."""
    G, g = _gains(g1_power_gain)
    return (G + g) ** 2 / (2.0 * (G * G + g * g))


def lossy_squeezing(squeezing, eta):
    """Effective noise ``S + eta/(1 - eta)`` of a squeezed probe behind a loss ``eta``."""
    if not 0.0 <= eta < 1.0:
        raise ValueError(f"loss must lie in [0, 1), got {eta}")
    return squeezing + eta / (1.0 - eta)


def sui_lossy_squeezing(squeezing, eta, g2_power_gain):
    """Effective noise ``S + eta / (2 G2^2 (1 - eta))`` with detection loss after the second amplifier."""
    if not 0.0 <= eta < 1.0:
        raise ValueError(f"loss must lie in [0, 1), got {eta}")
    return squeezing + eta / (2.0 * g2_power_gain * (1.0 - eta))


FORMULAS = {
    f.__name__: f
    for f in (
        classical_hd_snr,
        single_beam_sui_snr,
        squeezed_snr,
        dual_beam_sui_snr,
        amplitude_snr,
        resource_sum,
        resource_residual,
        transfer_coefficient,
        lossy_squeezing,
        sui_lossy_squeezing,
    )
}


def formula(name: str, **params) -> float:
    """Evaluate a closed form by name, e.g. ``formula("classical_hd_snr", i_ps=1, delta=1)``."""
    try:
        fn = FORMULAS[name]
    except KeyError:
        raise ValueError(f"unknown formula {name!r}; known: {sorted(FORMULAS)}") from None
    expected = set(inspect.signature(fn).parameters)
    missing = expected - set(params)
    extra = set(params) - expected
    if missing or extra:
        raise ValueError(f"{name} takes {sorted(expected)}; missing {sorted(missing)}, unexpected {sorted(extra)}")
    return float(fn(**params))
