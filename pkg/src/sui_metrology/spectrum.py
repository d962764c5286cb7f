"""Synthetic power spectra built from readout moments.

Each trace is a flat noise floor (normalised to the shot noise of one
reference readout) with a single raised bin at the modulation frequency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .detection import to_db
from .schemes import SchemeResult


@dataclass(frozen=True)
class SpectrumOptions:
    modulation_frequency_hz: float = 1.56e6
    center_frequency_hz: float = 1.56e6
    span_hz: float = 1.0e6
    rbw_hz: float = 1.0e4
    normalization_port: str = "hd1"

    def __post_init__(self):
        for name in ("modulation_frequency_hz", "center_frequency_hz", "span_hz", "rbw_hz"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if not self.rbw_hz > 0:
            raise ValueError(f"rbw_hz must be positive, got {self.rbw_hz}")
        if not self.span_hz > 0:
            raise ValueError(f"span_hz must be positive, got {self.span_hz}")
        lo, hi = self.center_frequency_hz - self.span_hz / 2, self.center_frequency_hz + self.span_hz / 2
        if not lo <= self.modulation_frequency_hz <= hi:
            raise ValueError(f"modulation frequency {self.modulation_frequency_hz} Hz outside span [{lo}, {hi}] Hz")
        if self.center_frequency_hz - self.span_hz / 2 < 0:
            raise ValueError("span extends below 0 Hz")

    def frequencies(self) -> np.ndarray:
        n_bins = int(round(self.span_hz / self.rbw_hz)) + 1
        return self.center_frequency_hz - self.span_hz / 2 + self.rbw_hz * np.arange(n_bins)


def _shot_noise(result: SchemeResult, port: str) -> float:
    # vacuum readouts have unit variance; the mixed current sums its detectors
    if port in ("jm", "jm_opt"):
        k = result.config.k_i if port == "jm" else result.k_opt
        return 1.0 + (k or 0.0) ** 2
    return 1.0


def synthesize(result: SchemeResult, options: SpectrumOptions = SpectrumOptions()) -> dict:
    """Spectrum traces in dB keyed by column name; ``frequency_hz`` holds the grid.

    For two-detector schemes the ``snl_si_db`` column is the shot-noise level of
    the mixed current ``i_s + k_i i_i``.
    """
    if options.normalization_port not in result.ports:
        raise ValueError(f"normalization port {options.normalization_port!r} not in {sorted(result.ports)}")
    freqs = options.frequencies()
    peak = int(np.argmin(np.abs(freqs - options.modulation_frequency_hz)))
    ref = _shot_noise(result, options.normalization_port)
    columns = {"frequency_hz": freqs}
    for port in ("hd1", "hd2", "jm"):
        rep = result.ports.get(port)
        if rep is None:
            continue
        trace = np.full(freqs.shape, to_db(rep.noise_power / ref))
        if rep.signal_power > 0:
            trace[peak] += to_db(1.0 + rep.snr_linear)
        columns[f"{port}_db"] = trace
    if "jm" in result.ports:
        columns["snl_si_db"] = np.full(freqs.shape, to_db(_shot_noise(result, "jm") / ref))
    return columns
