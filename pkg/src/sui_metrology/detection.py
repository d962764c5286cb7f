"""Homodyne readout, photocurrent mixing and SNR bookkeeping."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy import optimize

from .components import loss_channel
from .gaussian import GaussianState, _check_mode

X_ANGLE = 0.0
Y_ANGLE = math.pi / 2


@dataclass(frozen=True)
class HomodyneSelection:
    """Quadrature ``cos(angle) X + sin(angle) Y`` of ``mode``, seen with a given efficiency."""

    mode: int
    angle: float = Y_ANGLE
    detection_efficiency: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.detection_efficiency <= 1.0:
            raise ValueError(f"detection efficiency must lie in [0, 1], got {self.detection_efficiency}")
        object.__setattr__(self, "angle", float(self.angle) % (2 * math.pi))


@dataclass(frozen=True)
class ReadoutMoments:
    means: np.ndarray
    cov: np.ndarray
    selections: tuple = ()

    def __post_init__(self):
        means = np.asarray(self.means, dtype=float).reshape(-1)
        cov = np.atleast_2d(np.asarray(self.cov, dtype=float))
        if cov.shape != (means.size, means.size):
            raise ValueError("readout covariance does not match number of selections")
        object.__setattr__(self, "means", means)
        object.__setattr__(self, "cov", cov)
        object.__setattr__(self, "selections", tuple(self.selections))


@dataclass(frozen=True)
class SnrReport:
    signal_power: float
    noise_power: float
    benchmark_snr_linear: Optional[float] = None

    def __post_init__(self):
        if self.signal_power < 0:
            raise ValueError("signal power must be non-negative")
        if not self.noise_power > 0:
            raise ValueError(f"noise power must be positive, got {self.noise_power}")

    @property
    def snr_linear(self) -> float:
        return self.signal_power / self.noise_power

    @property
    def snr_db(self) -> float:
        return to_db(self.snr_linear)

    @property
    def improvement_db(self) -> Optional[float]:
        if self.benchmark_snr_linear is None or self.benchmark_snr_linear <= 0:
            return None
        return self.snr_db - to_db(self.benchmark_snr_linear)

    def against(self, benchmark_snr_linear: Optional[float]) -> "SnrReport":
        return SnrReport(self.signal_power, self.noise_power, benchmark_snr_linear)

    def as_dict(self) -> dict:
        return {
            "signal_power": self.signal_power,
            "noise_power": self.noise_power,
            "snr_linear": self.snr_linear,
            "snr_db": self.snr_db,
            "benchmark_snr_linear": self.benchmark_snr_linear,
            "improvement_db": self.improvement_db,
        }


def to_db(x: float) -> float:
    return 10.0 * math.log10(x) if x > 0 else -math.inf


def quadrature_vector(angle: float) -> np.ndarray:
    return np.array([math.cos(angle), math.sin(angle)])


def read_moments(state: GaussianState, selections: Sequence[HomodyneSelection]) -> ReadoutMoments:
    """Means and covariance of the selected homodyne quadratures.

    Each selection's inefficiency is applied as a loss on its mode before the
    quadrature is projected out.
    """
    selections = tuple(selections)
    if not selections:
        raise ValueError("need at least one homodyne selection")
    modes = [sel.mode for sel in selections]
    if len(set(modes)) != len(modes):
        raise ValueError(f"homodyne selections must use distinct modes, got {modes}")
    for sel in selections:
        _check_mode(state, sel.mode)
        if sel.detection_efficiency < 1.0:
            state = loss_channel(state, sel.mode, 1.0 - sel.detection_efficiency)
    proj = np.zeros((len(selections), 2 * state.n_modes))
    for row, sel in enumerate(selections):
        proj[row, 2 * sel.mode : 2 * sel.mode + 2] = quadrature_vector(sel.angle)
    cov = proj @ state.cov @ proj.T
    return ReadoutMoments(proj @ state.mean, 0.5 * (cov + cov.T), selections)


def signal_extract(modulated: ReadoutMoments, baseline: ReadoutMoments) -> np.ndarray:
    """Per-selection signal: modulated mean minus unmodulated mean."""
    if modulated.selections != baseline.selections or modulated.means.shape != baseline.means.shape:
        raise ValueError("modulated and baseline readouts use different selections")
    return modulated.means - baseline.means


def _check_psd(cov: np.ndarray) -> None:
    lo = float(np.min(np.linalg.eigvalsh(cov)))
    if lo < -1e-10 * max(1.0, float(np.max(np.abs(cov)))):
        raise ValueError(f"readout covariance is not positive semidefinite (min eigenvalue {lo:.3e})")


def mix_currents(moments: ReadoutMoments, signals, gains, benchmark_snr_linear: Optional[float] = None) -> SnrReport:
    """SNR of the mixed photocurrent ``sum_j k_j i_j``."""
    s = np.asarray(signals, dtype=float).reshape(-1)
    k = np.asarray(gains, dtype=float).reshape(-1)
    if s.shape != moments.means.shape or k.shape != s.shape:
        raise ValueError("signals, gains and readout dimensions differ")
    if not np.any(k):
        raise ValueError("at least one mixer gain must be non-zero")
    _check_psd(moments.cov)
    return SnrReport(float(k @ s) ** 2, float(k @ moments.cov @ k), benchmark_snr_linear)


def optimal_snr(moments: ReadoutMoments, signals) -> float:
    """Best SNR over all real mixer gains, ``s^T V^-1 s``."""
    s = np.asarray(signals, dtype=float)
    return float(s @ np.linalg.solve(moments.cov, s))


def optimize_mixer_gain(moments: ReadoutMoments, signals) -> float:
    """Idler gain ``k`` maximising the SNR of ``i_1 + k i_2``."""
    if moments.means.size != 2:
        raise ValueError("mixer gain optimisation needs exactly two selections")
    s1, s2 = (float(v) for v in signals)
    if s1 == 0.0 and s2 == 0.0:
        raise ValueError("cannot optimise mixer gain without signal")
    v = moments.cov
    # amplified correlated noise leaves V ill-conditioned; only reject a genuinely negative one
    _check_psd(v)
    if not (v[0, 0] > 0 and v[1, 1] > 0):
        raise ValueError("readout noise matrix must be positive definite")
    v11, v12, v22 = v[0, 0], v[0, 1], v[1, 1]
    num = s2 * v11 - s1 * v12
    den = s1 * v22 - s2 * v12
    if abs(den) > 1e-12 * (abs(num) + abs(s1 * v22) + abs(s2 * v12)):
        return num / den

    def neg_snr(k):
        return -((s1 + k * s2) ** 2) / (v11 + 2 * k * v12 + k * k * v22)

    res = optimize.minimize_scalar(neg_snr, bracket=(-1.0, 1.0), method="golden")
    return float(res.x)
