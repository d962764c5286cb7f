"""End-to-end measurement schemes: classical homodyne, squeezed probe,
single- and dual-beam SU(1,1) interferometers and the truncated interferometer.

Mode 0 is the signal beam (read by HD1), mode 1 the idler beam (HD2).
All SNRs are in shot-noise units and improvements are quoted against a
coherent probe of the same photon number ``i_ps_photons`` and phase depth.
"""

from __future__ import annotations

import dataclasses
import json
import math
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

import numpy as np
from scipy import optimize

from . import formulas
from .components import ModulationSignal, OpaParams, degenerate_squeezer, two_mode_squeezer
from .detection import (
    X_ANGLE,
    Y_ANGLE,
    HomodyneSelection,
    ReadoutMoments,
    SnrReport,
    mix_currents,
    optimal_snr,
    optimize_mixer_gain,
    read_moments,
    signal_extract,
    to_db,
)
from .pipeline import Displace, Gate, Loss, Modulate, propagate

KINDS = ("classical_hd", "single_beam_sui", "dual_beam_sui", "truncated_dual", "squeezed_benchmark")
SEEDINGS = ("signal", "balanced")
SIGNAL, IDLER = 0, 1

# Stand-in for an infinitely strong second amplifier.
G2_LIMIT_PROXY = 1e4

PRESET_SCHEMA_VERSION = 1


class ConfigError(ValueError):
    """Invalid scheme configuration; ``field`` names the offending key."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


_FLOAT_FIELDS = (
    "g1_power_gain",
    "g2_power_gain",
    "i_ps_photons",
    "delta_rad",
    "epsilon",
    "eta_transmission",
    "eta_det_s",
    "eta_det_i",
    "eta_mismatch",
    "k_i",
)
_LOSS_FIELDS = ("eta_transmission", "eta_det_s", "eta_det_i", "eta_mismatch")


@dataclass(frozen=True)
class SchemeConfig:
    """Flat parameterisation of one measurement scheme.

    ``seeding="signal"`` injects the coherent seed into the signal input only,
    so ``i_ps_photons = (G1^2 + g1^2) |alpha|^2`` for the dual-beam schemes.
    ``seeding="balanced"`` seeds both inputs so the two probe beams carry equal
    amplitude; ``i_ps_photons`` is then the total photon number of the pair.
    ``pump_phase_2_rad=None`` locks the second amplifier to the dark fringe of
    the HD1 readout at run time.
    """

    kind: str
    g1_power_gain: float = 1.0
    g2_power_gain: float = 1.0
    pump_phase_2_rad: Optional[float] = math.pi
    i_ps_photons: float = 1e6
    delta_rad: float = 1e-3
    epsilon: float = 0.0
    eta_transmission: float = 0.0
    eta_det_s: float = 0.0
    eta_det_i: float = 0.0
    eta_mismatch: float = 0.0
    seeding: str = "signal"
    k_i: float = 1.0
    label: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigError("kind", f"unknown scheme {self.kind!r}; expected one of {KINDS}")
        for name in _FLOAT_FIELDS:
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ConfigError(name, f"expected a finite number, got {value!r}")
            object.__setattr__(self, name, float(value))
        for name in _LOSS_FIELDS:
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ConfigError(name, f"must lie in [0, 1], got {getattr(self, name)}")
        for name in ("g1_power_gain", "g2_power_gain"):
            if getattr(self, name) < 1.0:
                raise ConfigError(name, f"power gain must be >= 1, got {getattr(self, name)}")
        if not self.i_ps_photons > 0:
            raise ConfigError("i_ps_photons", f"must be positive, got {self.i_ps_photons}")
        for name in ("delta_rad", "epsilon"):
            if abs(getattr(self, name)) > 0.1:
                raise ConfigError(name, "modulation depth above 0.1 leaves the small-signal regime")
        if self.seeding not in SEEDINGS:
            raise ConfigError("seeding", f"expected one of {SEEDINGS}, got {self.seeding!r}")
        if self.pump_phase_2_rad is not None:
            if not math.isfinite(float(self.pump_phase_2_rad)):
                raise ConfigError("pump_phase_2_rad", "must be finite or null (lock)")
            object.__setattr__(self, "pump_phase_2_rad", float(self.pump_phase_2_rad))
        # Kind-specific normalisation: absent amplifiers have unit gain.
        if self.kind == "classical_hd":
            object.__setattr__(self, "g1_power_gain", 1.0)
            object.__setattr__(self, "g2_power_gain", 1.0)
        if self.kind in ("truncated_dual", "squeezed_benchmark"):
            object.__setattr__(self, "g2_power_gain", 1.0)
        if self.kind == "single_beam_sui" and self.seeding != "signal":
            raise ConfigError("seeding", "single-beam interferometer is seeded in the signal arm only")

    def replace(self, **changes) -> "SchemeConfig":
        return dataclasses.replace(self, **changes)

    def to_mapping(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_mapping(cls, data: dict) -> "SchemeConfig":
        """Build a config from flat key/value pairs (strings are coerced).

        ``target_classical_snr_db`` may replace ``delta_rad``: the phase depth is
        then calibrated so that the lossless classical readout hits the target.
        ``eta_det`` sets both detection losses.
        """
        known = {f.name for f in dataclasses.fields(cls)}
        data = dict(data)
        target = data.pop("target_classical_snr_db", None)
        if "eta_det" in data:
            both = data.pop("eta_det")
            data.setdefault("eta_det_s", both)
            data.setdefault("eta_det_i", both)
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(unknown[0], "unknown configuration key")
        if "kind" not in data:
            raise ConfigError("kind", "missing")
        kwargs = {}
        for key, value in data.items():
            if key in _FLOAT_FIELDS:
                kwargs[key] = _coerce_float(key, value)
            elif key == "pump_phase_2_rad":
                kwargs[key] = None if value in (None, "", "lock", "null") else _coerce_float(key, value)
            else:
                kwargs[key] = str(value)
        if target is not None:
            if "delta_rad" in data:
                raise ConfigError("target_classical_snr_db", "give either delta_rad or a calibration target")
            i_ps = kwargs.get("i_ps_photons", cls.i_ps_photons)
            try:
                kwargs["delta_rad"] = calibrate_modulation(_coerce_float("target_classical_snr_db", target), i_ps)
            except ValueError as exc:
                raise ConfigError("target_classical_snr_db", str(exc)) from None
        return cls(**kwargs)


def _coerce_float(key, value) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ConfigError(key, f"expected a number, got {value!r}") from None


@dataclass(frozen=True)
class TransferReport:
    """Signal splitting by the second amplifier viewed as an information tap."""

    snr_in: float
    snr_s: float
    snr_i: float

    @property
    def t_s(self) -> float:
        return self.snr_s / self.snr_in

    @property
    def t_i(self) -> float:
        return self.snr_i / self.snr_in

    @property
    def total(self) -> float:
        return self.t_s + self.t_i

    def as_dict(self) -> dict:
        return {"snr_in": self.snr_in, "snr_s": self.snr_s, "snr_i": self.snr_i,
                "t_s": self.t_s, "t_i": self.t_i, "t_sum": self.total}


@dataclass(frozen=True)
class SchemeResult:
    config: SchemeConfig
    ports: dict
    benchmark_snr: float
    benchmark_lossy_snr: float
    k_opt: Optional[float] = None
    pump_phase_2_rad: Optional[float] = None
    transfer: Optional[TransferReport] = None
    closed_form_improvement: Optional[float] = None
    moments: Optional[ReadoutMoments] = field(default=None, repr=False, compare=False)
    signals: Optional[np.ndarray] = field(default=None, repr=False, compare=False)

    def snr(self, port: str = "hd1") -> float:
        return self.ports[port].snr_linear

    def improvement(self, port: str = "hd1", lossy: bool = False) -> Optional[float]:
        """Linear SNR gain over the classical benchmark (``None`` without signal)."""
        ref = self.benchmark_lossy_snr if lossy else self.benchmark_snr
        if ref <= 0:
            return None
        return self.ports[port].snr_linear / ref

    def improvement_db(self, port: str = "hd1", lossy: bool = False) -> Optional[float]:
        imp = self.improvement(port, lossy)
        return None if imp is None else to_db(imp)

    def to_record(self) -> dict:
        rec = dict(self.config.to_mapping())
        rec["pump_phase_2_used_rad"] = self.pump_phase_2_rad
        rec["benchmark_snr_linear"] = self.benchmark_snr
        rec["benchmark_lossy_snr_linear"] = self.benchmark_lossy_snr
        for name in PORTS:
            rep = self.ports.get(name)
            rec[f"{name}_snr_linear"] = None if rep is None else rep.snr_linear
            rec[f"{name}_snr_db"] = None if rep is None else rep.snr_db
            rec[f"{name}_improvement_db"] = None if rep is None else self.improvement_db(name)
            rec[f"{name}_improvement_lossy_db"] = None if rep is None else self.improvement_db(name, lossy=True)
        rec["improvement_db"] = self.improvement_db(headline_port(self.config.kind))
        rec["k_opt"] = self.k_opt
        rec["closed_form_improvement"] = self.closed_form_improvement
        rec["closed_form_port"] = CLOSED_FORM_PORT[self.config.kind]
        tr = self.transfer.as_dict() if self.transfer else {}
        for key in ("snr_in", "t_s", "t_i", "t_sum"):
            rec[key] = tr.get(key)
        return rec


PORTS = ("hd1", "hd2", "jm", "jm_opt")


# Readout that closed_form_improvement describes.
CLOSED_FORM_PORT = {
    "classical_hd": "hd1",
    "squeezed_benchmark": "hd1",
    "single_beam_sui": "hd1",
    "dual_beam_sui": "hd1",
    "truncated_dual": "jm_opt",
}


def headline_port(kind: str) -> str:
    """Port whose improvement is reported as the scheme's headline number."""
    return "jm_opt" if kind in ("dual_beam_sui", "truncated_dual") else "hd1"


# ---------------------------------------------------------------------------
# pipeline construction


def _modulated_modes(cfg: SchemeConfig) -> tuple:
    return (SIGNAL, IDLER) if cfg.kind in ("dual_beam_sui", "truncated_dual") else (SIGNAL,)


def _n_modes(cfg: SchemeConfig) -> int:
    return 1 if cfg.kind in ("classical_hd", "squeezed_benchmark") else 2


def _source_steps(cfg: SchemeConfig) -> list:
    """Seed plus first amplifier, with the probe photon number fixed to ``i_ps_photons``."""
    opa1 = OpaParams.from_power_gain(cfg.g1_power_gain)
    G, g, n = opa1.G, opa1.g, cfg.i_ps_photons
    if cfg.kind == "classical_hd":
        return [Displace(SIGNAL, 2.0 * math.sqrt(n))]
    if cfg.kind == "squeezed_benchmark":
        return [Gate(degenerate_squeezer(opa1, SIGNAL)), Displace(SIGNAL, 2.0 * math.sqrt(n))]
    if cfg.kind == "single_beam_sui":
        # only the amplified signal beam senses the phase
        alpha = math.sqrt(n) / G
        steps = [Displace(SIGNAL, 2.0 * alpha)]
    elif cfg.seeding == "signal":
        alpha = math.sqrt(n / (G * G + g * g))
        steps = [Displace(SIGNAL, 2.0 * alpha)]
    else:
        alpha = math.sqrt(n / 2.0) / (G + g)
        steps = [Displace(SIGNAL, 2.0 * alpha), Displace(IDLER, 2.0 * alpha)]
    return steps + [Gate(two_mode_squeezer(opa1, SIGNAL, IDLER))]


def build_pipeline(cfg: SchemeConfig, depth: float, modulation: str = "phase", pump_phase_2=None):
    """Steps from source to the detectors, and the homodyne selections.

    Returns ``(n_modes, steps, selections)``. Amplitude modulation is read in
    X at HD2 (the port conjugate to the phase readout).
    """
    n = _n_modes(cfg)
    steps = _source_steps(cfg)
    steps.append(Modulate(ModulationSignal(modulation, depth, _modulated_modes(cfg))))
    for mode in range(n):
        steps.append(Loss(mode, cfg.eta_transmission))
    if cfg.kind in ("single_beam_sui", "dual_beam_sui"):
        for mode in range(n):
            steps.append(Loss(mode, cfg.eta_mismatch))
        phase = cfg.pump_phase_2_rad if pump_phase_2 is None else pump_phase_2
        if phase is None:
            raise ValueError("second-amplifier pump phase is unset; lock it first")
        opa2 = OpaParams.from_power_gain(cfg.g2_power_gain, phase)
        steps.append(Gate(two_mode_squeezer(opa2, SIGNAL, IDLER)))
    effs = (1.0 - cfg.eta_det_s, 1.0 - cfg.eta_det_i)
    if modulation == "amplitude":
        sels = [HomodyneSelection(n - 1, X_ANGLE, effs[n - 1])]
    else:
        sels = [HomodyneSelection(m, Y_ANGLE, effs[m]) for m in range(n)]
    return n, steps, sels


def readout(cfg: SchemeConfig, depth: float, modulation: str = "phase", pump_phase_2=None) -> ReadoutMoments:
    n, steps, sels = build_pipeline(cfg, depth, modulation, pump_phase_2)
    state = propagate(steps, n).check_physical()
    return read_moments(state, sels)


def lock_pump_phase(cfg: SchemeConfig, selection: int = 0, modulation: str = "phase") -> float:
    """Second-amplifier pump phase minimising the unmodulated noise at one readout."""
    if cfg.kind not in ("single_beam_sui", "dual_beam_sui"):
        raise ValueError(f"{cfg.kind} has no second amplifier to lock")

    def noise(phi):
        return readout(cfg, 0.0, modulation, pump_phase_2=phi).cov[selection, selection]

    grid = np.linspace(0.0, 2 * math.pi, 73)[:-1]
    best = grid[int(np.argmin([noise(p) for p in grid]))]
    step = grid[1] - grid[0]
    res = optimize.minimize_scalar(noise, bounds=(best - step, best + step), method="bounded",
                                   options={"xatol": 1e-10})
    return float(res.x) % (2 * math.pi)


# ---------------------------------------------------------------------------
# scheme runs


def _classical_snr(cfg: SchemeConfig, lossy: bool) -> float:
    ref = SchemeConfig(
        kind="classical_hd",
        i_ps_photons=cfg.i_ps_photons,
        delta_rad=cfg.delta_rad,
        eta_transmission=cfg.eta_transmission if lossy else 0.0,
        eta_det_s=cfg.eta_det_s if lossy else 0.0,
    )
    base, mod = readout(ref, 0.0), readout(ref, ref.delta_rad)
    return mix_currents(base, signal_extract(mod, base), [1.0]).snr_linear


def _evaluate(cfg: SchemeConfig) -> SchemeResult:
    phase = cfg.pump_phase_2_rad
    if phase is None and cfg.kind in ("single_beam_sui", "dual_beam_sui"):
        phase = lock_pump_phase(cfg)
    base = readout(cfg, 0.0, pump_phase_2=phase)
    mod = readout(cfg, cfg.delta_rad, pump_phase_2=phase)
    signals = signal_extract(mod, base)
    bench = _classical_snr(cfg, lossy=False)
    bench_lossy = _classical_snr(cfg, lossy=True)
    ports, k_opt = {}, None
    if len(signals) == 1:
        ports["hd1"] = mix_currents(base, signals, [1.0], bench)
    else:
        ports["hd1"] = mix_currents(base, signals, [1.0, 0.0], bench)
        ports["hd2"] = mix_currents(base, signals, [0.0, 1.0], bench)
        ports["jm"] = mix_currents(base, signals, [1.0, cfg.k_i], bench)
        if np.any(signals):
            k_opt = optimize_mixer_gain(base, signals)
            ports["jm_opt"] = mix_currents(base, signals, [1.0, k_opt], bench)
        else:
            ports["jm_opt"] = ports["jm"]
    return SchemeResult(
        config=cfg,
        ports=ports,
        benchmark_snr=bench,
        benchmark_lossy_snr=bench_lossy,
        k_opt=k_opt,
        pump_phase_2_rad=phase if cfg.kind in ("single_beam_sui", "dual_beam_sui") else None,
        closed_form_improvement=closed_form_improvement(cfg),
        moments=base,
        signals=signals,
    )


def _require(cfg: SchemeConfig, kind: str) -> None:
    if cfg.kind != kind:
        raise ConfigError("kind", f"expected {kind!r}, got {cfg.kind!r}")


def run_classical_hd(cfg: SchemeConfig) -> SchemeResult:
    _require(cfg, "classical_hd")
    return _evaluate(cfg)


def run_squeezed_benchmark(cfg: SchemeConfig) -> SchemeResult:
    _require(cfg, "squeezed_benchmark")
    return _evaluate(cfg)


def run_single_beam_sui(cfg: SchemeConfig) -> SchemeResult:
    _require(cfg, "single_beam_sui")
    return _evaluate(cfg)


def run_truncated_dual(cfg: SchemeConfig) -> SchemeResult:
    _require(cfg, "truncated_dual")
    return _evaluate(cfg)


def run_dual_beam_sui(cfg: SchemeConfig, with_transfer: bool = True) -> SchemeResult:
    _require(cfg, "dual_beam_sui")
    result = _evaluate(cfg)
    if with_transfer and np.any(result.signals):
        result = dataclasses.replace(result, transfer=_transfer_from(result))
    return result


_RUNNERS = {
    "classical_hd": run_classical_hd,
    "squeezed_benchmark": run_squeezed_benchmark,
    "single_beam_sui": run_single_beam_sui,
    "truncated_dual": run_truncated_dual,
    "dual_beam_sui": run_dual_beam_sui,
}


def run_scheme(cfg: SchemeConfig) -> SchemeResult:
    return _RUNNERS[cfg.kind](cfg)


def amplitude_channel(cfg: SchemeConfig) -> SnrReport:
    """Amplitude-modulation SNR of the dual-beam interferometer, X read at HD2.

    The benchmark is a coherent probe of equal photon number read in X.
    """
    _require(cfg, "dual_beam_sui")
    if not cfg.epsilon > 0:
        raise ConfigError("epsilon", "amplitude channel needs epsilon > 0")
    phase = cfg.pump_phase_2_rad
    if phase is None:
        phase = lock_pump_phase(cfg, modulation="amplitude")
    base = readout(cfg, 0.0, "amplitude", phase)
    mod = readout(cfg, cfg.epsilon, "amplitude", phase)
    bench = formulas.classical_hd_snr(cfg.i_ps_photons, cfg.epsilon)
    return mix_currents(base, signal_extract(mod, base), [1.0], bench)


def resource_sharing_check(cfg: SchemeConfig, g2_power_gain: float = 1e6) -> tuple:
    """Relative gap between phase + amplitude SNR and the squeezed-state SNR.

    Returns ``(closed_form_residual, simulated_residual)``; the simulation runs
    the dual-beam interferometer at ``g2_power_gain`` as a stand-in for
    infinite gain.
    """
    _require(cfg, "dual_beam_sui")
    if cfg.delta_rad != cfg.epsilon:
        raise ConfigError("epsilon", "resource sharing compares equal phase and amplitude depths")
    closed = formulas.resource_residual(cfg.i_ps_photons, cfg.delta_rad, cfg.g1_power_gain)
    sim_cfg = cfg.replace(g2_power_gain=g2_power_gain)
    pm = run_dual_beam_sui(sim_cfg, with_transfer=False).snr("hd1")
    am = amplitude_channel(sim_cfg).snr_linear
    ref = formulas.squeezed_snr(cfg.i_ps_photons, cfg.delta_rad, cfg.g1_power_gain)
    return closed, abs(pm + am - ref) / ref


def tap_input_snr(cfg: SchemeConfig) -> float:
    """Joint-measurement SNR of the phase-encoded pair arriving at the tap.

    Transmission loss up to the second amplifier is kept; detection loss is
    corrected away and coupling (mismatch) loss counts as a tap imperfection.
    The reference pair is the equal-amplitude probe of the same total photon
    number, which reaches the squeezed-state SNR when lossless.
    """
    ref = SchemeConfig(
        kind="truncated_dual",
        g1_power_gain=cfg.g1_power_gain,
        i_ps_photons=cfg.i_ps_photons,
        delta_rad=cfg.delta_rad,
        eta_transmission=cfg.eta_transmission,
        seeding="balanced",
    )
    base, mod = readout(ref, 0.0), readout(ref, ref.delta_rad)
    return optimal_snr(base, signal_extract(mod, base))


def _transfer_from(result: SchemeResult) -> TransferReport:
    snr_in = tap_input_snr(result.config)
    if not snr_in > 0:
        raise ValueError("tap input carries no signal")
    return TransferReport(snr_in, result.snr("hd1"), result.snr("hd2"))


def transfer_coefficients(cfg: SchemeConfig) -> TransferReport:
    _require(cfg, "dual_beam_sui")
    result = run_dual_beam_sui(cfg, with_transfer=False)
    return _transfer_from(result)


def calibrate_modulation(target_classical_snr_db: float, i_ps: float) -> float:
    """Phase depth giving ``target_classical_snr_db`` for a lossless coherent probe."""
    if not math.isfinite(target_classical_snr_db):
        raise ValueError(f"target SNR must be finite, got {target_classical_snr_db}")
    if not i_ps > 0:
        raise ValueError(f"photon number must be positive, got {i_ps}")
    return math.sqrt(10.0 ** (target_classical_snr_db / 10.0) / (4.0 * i_ps))


def closed_form_improvement(cfg: SchemeConfig) -> Optional[float]:
    """Closed-form improvement over the lossless classical probe, where one applies.

    Interferometer limits assume an infinitely strong second amplifier.
    """
    opa1 = OpaParams.from_power_gain(cfg.g1_power_gain)
    S = opa1.squeezing
    total_loss = 1.0 - (1.0 - cfg.eta_transmission) * (1.0 - cfg.eta_det_s)
    no_transit = cfg.eta_transmission == 0 and cfg.eta_mismatch == 0
    lossless = no_transit and cfg.eta_det_s == 0 and cfg.eta_det_i == 0
    if cfg.kind == "classical_hd":
        return 1.0 - total_loss
    if total_loss >= 1.0:
        return None
    if cfg.kind == "squeezed_benchmark":
        return 1.0 / formulas.lossy_squeezing(S, total_loss)
    if cfg.kind == "truncated_dual":
        if cfg.seeding == "balanced" and cfg.eta_det_s == cfg.eta_det_i:
            return 1.0 / formulas.lossy_squeezing(S, total_loss)
        return None
    if cfg.kind == "single_beam_sui":
        return formulas.single_beam_sui_snr(1.0, 1.0, cfg.g1_power_gain) / 4.0 if lossless else None
    if cfg.kind == "dual_beam_sui":
        if cfg.seeding == "signal":
            return formulas.dual_beam_sui_snr(1.0, 1.0, cfg.g1_power_gain) / 4.0 if lossless else None
        if no_transit and cfg.eta_det_s < 1.0:
            return 1.0 / formulas.sui_lossy_squeezing(S, cfg.eta_det_s, cfg.g2_power_gain)
    return None


def fit_mismatch(cfg: SchemeConfig, target_improvement_db: float, port: str = "jm_opt",
                 lossy: bool = True, bounds=(0.0, 0.5)) -> float:
    """Mismatch loss at the second amplifier that reproduces a measured improvement."""
    _require(cfg, "dual_beam_sui")

    def gap(eta_m):
        res = run_dual_beam_sui(cfg.replace(eta_mismatch=eta_m), with_transfer=False)
        return res.improvement_db(port, lossy) - target_improvement_db

    lo, hi = bounds
    if gap(lo) * gap(hi) > 0:
        raise ValueError(f"no mismatch loss in {bounds} reaches {target_improvement_db} dB")
    return float(optimize.brentq(gap, lo, hi, xtol=1e-12))


# ---------------------------------------------------------------------------
# presets


def load_catalogue() -> dict:
    text = resources.files(__package__).joinpath("presets.json").read_text()
    cat = json.loads(text)
    if cat.get("schema_version") != PRESET_SCHEMA_VERSION:
        raise ValueError(f"unsupported preset schema version {cat.get('schema_version')!r}")
    return cat["presets"]


def load_preset(name: str) -> SchemeConfig:
    presets = load_catalogue()
    if name not in presets:
        raise ConfigError("preset", f"unknown preset {name!r}; known: {sorted(presets)}")
    return SchemeConfig.from_mapping(presets[name]["config"])
