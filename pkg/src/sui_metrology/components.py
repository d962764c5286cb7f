"""Optical elements: parametric amplifiers, modulators, phase shifters and loss."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .gaussian import GaussianState, SymplecticOp, _check_mode, apply

MODULATION_WARN_DEPTH = 0.01
MODULATION_MAX_DEPTH = 0.1


@dataclass(frozen=True)
class OpaParams:
    """Amplitude gains of a parametric amplifier, ``G**2 - g**2 == 1``.

    Use :meth:`from_power_gain` or :meth:`from_G` rather than filling both
    gains by hand.
    """

    G: float
    g: float
    pump_phase: float = 0.0

    def __post_init__(self):
        if not self.G >= 1.0:
            raise ValueError(f"amplitude gain G must be >= 1, got {self.G}")
        if self.g < 0:
            raise ValueError(f"amplitude gain g must be >= 0, got {self.g}")
        if abs((self.G - self.g) * (self.G + self.g) - 1.0) > 1e-10 * max(1.0, self.G * self.G):
            raise ValueError(f"G**2 - g**2 must equal 1 (G={self.G}, g={self.g})")

    @classmethod
    def from_G(cls, G: float, pump_phase: float = 0.0) -> "OpaParams":
        if not G >= 1.0:
            raise ValueError(f"amplitude gain G must be >= 1, got {G}")
        return cls(float(G), math.sqrt((G - 1.0) * (G + 1.0)), pump_phase)

    @classmethod
    def from_power_gain(cls, power_gain: float, pump_phase: float = 0.0) -> "OpaParams":
        if not power_gain >= 1.0:
            raise ValueError(f"power gain must be >= 1, got {power_gain}")
        return cls(math.sqrt(power_gain), math.sqrt(power_gain - 1.0), pump_phase)

    @property
    def power_gain(self) -> float:
        return self.G * self.G

    @property
    def squeezing(self) -> float:
        """Minimum quadrature variance ``1 / (G + g)**2`` of the squeezed vacuum."""
        return 1.0 / (self.G + self.g) ** 2


def _coupling(params: OpaParams) -> np.ndarray:
    c, s = math.cos(params.pump_phase), math.sin(params.pump_phase)
    return params.g * np.array([[c, s], [s, -c]])


def two_mode_squeezer(params: OpaParams, mode_a: int, mode_b: int) -> SymplecticOp:
    """Non-degenerate amplifier ``a -> G a + g exp(i phi) b^dag`` (and a <-> b).

    At ``pump_phase = 0`` this maps ``X_a -> G X_a + g X_b`` and
    ``Y_a -> G Y_a - g Y_b``.
    """
    if mode_a == mode_b:
        raise ValueError("two_mode_squeezer needs two distinct modes")
    eye = params.G * np.eye(2)
    c = _coupling(params)
    return SymplecticOp(np.block([[eye, c], [c, eye]]), None, (mode_a, mode_b))


def degenerate_squeezer(params: OpaParams, mode: int) -> SymplecticOp:
    """Single-mode amplifier ``a -> G a + g exp(i phi) a^dag``; squeezes Y at ``pump_phase = 0``."""
    return SymplecticOp(params.G * np.eye(2) + _coupling(params), None, (mode,))


def loss_channel(state: GaussianState, mode: int, eta: float) -> GaussianState:
    """Beam splitter of transmission ``1 - eta`` mixing ``mode`` with vacuum."""
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"loss eta must lie in [0, 1], got {eta}")
    mode = _check_mode(state, mode)
    t = math.sqrt(1.0 - eta)
    scale = np.ones(2 * state.n_modes)
    scale[2 * mode : 2 * mode + 2] = t
    cov = state.cov * np.outer(scale, scale)
    cov[2 * mode : 2 * mode + 2, 2 * mode : 2 * mode + 2] += eta * np.eye(2)
    return GaussianState(state.mean * scale, 0.5 * (cov + cov.T))


@dataclass(frozen=True)
class ModulationSignal:
    """Small-signal phase or amplitude modulation applied to ``applied_modes``."""

    kind: str
    depth: float
    applied_modes: tuple = (0,)

    def __post_init__(self):
        if self.kind not in ("phase", "amplitude"):
            raise ValueError(f"modulation kind must be 'phase' or 'amplitude', got {self.kind!r}")
        if not math.isfinite(self.depth) or abs(self.depth) > MODULATION_MAX_DEPTH:
            raise ValueError(f"modulation depth {self.depth} outside linear regime (|depth| <= {MODULATION_MAX_DEPTH})")
        if abs(self.depth) > MODULATION_WARN_DEPTH:
            warnings.warn(f"modulation depth {self.depth} > {MODULATION_WARN_DEPTH}; "
                          "second-order terms are neglected", stacklevel=2)
        object.__setattr__(self, "applied_modes", tuple(int(m) for m in self.applied_modes))


def modulate(state: GaussianState, signal: ModulationSignal) -> GaussianState:
    """Shift the mean by the first-order modulation; the covariance is left as is."""
    for m in signal.applied_modes:
        _check_mode(state, m)
    mean = state.mean.copy()
    d = signal.depth
    for m in signal.applied_modes:
        x, y = state.mean[2 * m], state.mean[2 * m + 1]
        if signal.kind == "phase":
            mean[2 * m] = x - d * y
            mean[2 * m + 1] = y + d * x
        else:
            mean[2 * m] = x * (1.0 + d)
            mean[2 * m + 1] = y * (1.0 + d)
    return GaussianState(mean, state.cov)


def rotation_matrix(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s], [s, c]])


def phase_shift(state: GaussianState, mode: int, theta: float) -> GaussianState:
    """Exact rotation ``a -> exp(i theta) a`` of one mode."""
    mode = _check_mode(state, mode)
    return apply(state, SymplecticOp(rotation_matrix(theta), None, (mode,)))


def apply_losses(state: GaussianState, losses: Sequence[tuple]) -> GaussianState:
    """Apply ``(mode, eta)`` pairs in order, skipping zero losses."""
    for mode, eta in losses:
        if eta:
            state = loss_channel(state, mode, eta)
    return state
