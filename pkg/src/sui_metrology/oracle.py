"""Monte Carlo cross-check of the moment engine.

Quadrature draws are pushed row by row through the same optical steps as the
engine, but loss is realised as a real beam splitter with freshly sampled
vacuum ancillas instead of covariance mixing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .components import (
    ModulationSignal,
    OpaParams,
    degenerate_squeezer,
    rotation_matrix,
    two_mode_squeezer,
)
from .detection import HomodyneSelection, ReadoutMoments, quadrature_vector, read_moments
from .gaussian import GaussianState, SymplecticOp, _quad_index, vacuum
from .pipeline import Displace, Gate, Loss, Modulate, Step, propagate

DEFAULT_SEED = 20180611
CHUNK_ROWS = 1 << 17


@dataclass(frozen=True)
class SampleBatch:
    values: np.ndarray
    rng_seed: int
    generation: int = 0

    @property
    def n_samples(self) -> int:
        return self.values.shape[0]

    def _rng(self) -> np.random.Generator:
        seq = np.random.SeedSequence(self.rng_seed, spawn_key=(self.generation,))
        return np.random.default_rng(seq)


@dataclass(frozen=True)
class EstimatedMoments(ReadoutMoments):
    mean_se: np.ndarray = None
    cov_se: np.ndarray = None
    n_samples: int = 0


def _chunked_normals(seed: int, spawn_key: tuple, n: int, dim: int) -> np.ndarray:
    """Standard normals drawn chunk by chunk from independent child streams."""
    out = np.empty((n, dim))
    root = np.random.SeedSequence(seed, spawn_key=spawn_key)
    n_chunks = -(-n // CHUNK_ROWS)
    for i, child in enumerate(root.spawn(n_chunks)):
        lo, hi = i * CHUNK_ROWS, min(n, (i + 1) * CHUNK_ROWS)
        out[lo:hi] = np.random.default_rng(child).standard_normal((hi - lo, dim))
    return out


def sample(state: GaussianState, n: int, seed: int = DEFAULT_SEED) -> SampleBatch:
    """Draw ``n`` quadrature vectors from the state's normal distribution."""
    if n < 1:
        raise ValueError("need at least one sample")
    w, v = np.linalg.eigh(state.cov)
    scale = max(1.0, float(np.max(np.abs(state.cov))))
    if w.min() < -1e-10 * scale:
        raise ValueError(f"covariance not positive semidefinite (min eigenvalue {w.min():.3e})")
    root = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.T
    z = _chunked_normals(seed, (), int(n), state.cov.shape[0])
    return SampleBatch(state.mean + z @ root, int(seed), 1)


def _beam_splitter_loss(values: np.ndarray, mode: int, eta: float, rng: np.random.Generator) -> np.ndarray:
    if not 0.0 <= eta <= 1.0:
        raise ValueError(f"loss eta must lie in [0, 1], got {eta}")
    out = values.copy()
    ancilla = rng.standard_normal((values.shape[0], 2))
    cols = slice(2 * mode, 2 * mode + 2)
    out[:, cols] = math.sqrt(1.0 - eta) * values[:, cols] + math.sqrt(eta) * ancilla
    return out


def push(batch: SampleBatch, op) -> SampleBatch:
    """Push every draw through one optical element.

    ``op`` may be a :class:`SymplecticOp` or any pipeline step.
    """
    values = batch.values
    if isinstance(op, Gate):
        op = op.op
    if isinstance(op, SymplecticOp):
        if max(op.acted_modes) >= values.shape[1] // 2:
            raise ValueError("op acts on a mode the batch does not have")
        idx = _quad_index(op.acted_modes)
        values = values.copy()
        values[:, idx] = values[:, idx] @ op.matrix.T + op.displacement
    elif isinstance(op, Loss):
        values = _beam_splitter_loss(values, op.mode, op.eta, batch._rng())
    elif isinstance(op, Displace):
        values = values.copy()
        values[:, 2 * op.mode] += op.dx
        values[:, 2 * op.mode + 1] += op.dy
    elif isinstance(op, Modulate):
        # first-order modulation moves the mean only: shift all draws alike
        sig = op.signal
        values = values.copy()
        centre = batch.values.mean(axis=0)
        for m in sig.applied_modes:
            x, y = centre[2 * m], centre[2 * m + 1]
            if sig.kind == "phase":
                values[:, 2 * m] -= sig.depth * y
                values[:, 2 * m + 1] += sig.depth * x
            else:
                values[:, 2 * m] += sig.depth * x
                values[:, 2 * m + 1] += sig.depth * y
    else:
        raise TypeError(f"cannot push {op!r}")
    return SampleBatch(values, batch.rng_seed, batch.generation + 1)


def push_all(batch: SampleBatch, steps: Sequence[Step]) -> SampleBatch:
    for step in steps:
        batch = push(batch, step)
    return batch


def estimate(batch: SampleBatch, selections: Sequence[HomodyneSelection]) -> EstimatedMoments:
    """Empirical readout moments with Gaussian standard errors."""
    if batch.n_samples < 2:
        raise ValueError("need at least two samples to estimate a covariance")
    selections = tuple(selections)
    modes = [s.mode for s in selections]
    if len(set(modes)) != len(modes):
        raise ValueError(f"homodyne selections must use distinct modes, got {modes}")
    for sel in selections:
        if sel.detection_efficiency < 1.0:
            batch = push(batch, Loss(sel.mode, 1.0 - sel.detection_efficiency))
    cols = []
    for sel in selections:
        quad = batch.values[:, 2 * sel.mode : 2 * sel.mode + 2]
        cols.append(quad @ quadrature_vector(sel.angle))
    data = np.column_stack(cols)
    n = data.shape[0]
    means = data.mean(axis=0)
    cov = np.atleast_2d(np.cov(data, rowvar=False))
    diag = np.diag(cov)
    mean_se = np.sqrt(diag / n)
    cov_se = np.sqrt((np.outer(diag, diag) + cov**2) / n)
    return EstimatedMoments(means, cov, selections, mean_se=mean_se, cov_se=cov_se, n_samples=n)


# ---------------------------------------------------------------------------
# randomized agreement suite


@dataclass(frozen=True)
class Agreement:
    max_mean_z: float
    max_cov_z: float
    n_se: float
    engine: ReadoutMoments = field(repr=False)
    oracle: EstimatedMoments = field(repr=False)

    @property
    def ok(self) -> bool:
        return self.max_mean_z <= self.n_se and self.max_cov_z <= self.n_se


def compare(steps: Sequence[Step], n_modes: int, selections: Sequence[HomodyneSelection],
            n: int = 10**6, seed: int = DEFAULT_SEED, n_se: float = 5.0) -> Agreement:
    """Run ``steps`` through both the moment engine and the sampler and compare readouts."""
    engine = read_moments(propagate(steps, n_modes), selections)
    batch = push_all(sample(vacuum(n_modes), n, seed), steps)
    est = estimate(batch, selections)
    mean_z = np.abs(est.means - engine.means) / est.mean_se
    cov_z = np.abs(est.cov - engine.cov) / est.cov_se
    return Agreement(float(mean_z.max()), float(cov_z.max()), n_se, engine, est)


def random_pipeline(rng: np.random.Generator, n_modes: int = 4, max_len: int = 10,
                    max_power_gain: float = 100.0):
    """A random sequence of displacements, amplifiers, rotations, modulations and losses.

    Returns ``(steps, selections)``.
    """
    steps: list = [Displace(int(rng.integers(n_modes)), *rng.uniform(-20, 20, size=2))]
    for _ in range(int(rng.integers(1, max_len + 1))):
        kind = rng.choice(["tms", "squeeze", "rotate", "loss", "modulate", "displace"])
        m = int(rng.integers(n_modes))
        if kind == "tms":
            a, b = rng.choice(n_modes, size=2, replace=False)
            params = OpaParams.from_power_gain(rng.uniform(1.0, max_power_gain), rng.uniform(0, 2 * np.pi))
            steps.append(Gate(two_mode_squeezer(params, int(a), int(b))))
        elif kind == "squeeze":
            params = OpaParams.from_power_gain(rng.uniform(1.0, max_power_gain), rng.uniform(0, 2 * np.pi))
            steps.append(Gate(degenerate_squeezer(params, m)))
        elif kind == "rotate":
            steps.append(Gate(SymplecticOp(rotation_matrix(rng.uniform(0, 2 * np.pi)), None, (m,))))
        elif kind == "loss":
            steps.append(Loss(m, float(rng.uniform(0.0, 0.99))))
        elif kind == "modulate":
            depth = float(rng.uniform(-0.01, 0.01))
            modes = tuple(int(x) for x in rng.choice(n_modes, size=int(rng.integers(1, n_modes + 1)), replace=False))
            steps.append(Modulate(ModulationSignal(str(rng.choice(["phase", "amplitude"])), depth, modes)))
        else:
            steps.append(Displace(m, *rng.uniform(-20, 20, size=2)))
    n_sel = int(rng.integers(1, n_modes + 1))
    modes = rng.choice(n_modes, size=n_sel, replace=False)
    selections = [HomodyneSelection(int(mm), float(rng.uniform(0, 2 * np.pi)), float(rng.uniform(0.5, 1.0)))
                  for mm in modes]
    return steps, selections


def agreement_suite(n_pipelines: int = 50, n: int = 10**6, seed: int = DEFAULT_SEED,
                    n_modes: int = 4, n_se: float = 5.0) -> list:
    """Oracle-versus-engine agreement over randomized pipelines (deterministic per seed)."""
    rng = np.random.default_rng(seed)
    results = []
    for k in range(n_pipelines):
        steps, sels = random_pipeline(rng, n_modes)
        results.append(compare(steps, n_modes, sels, n=n, seed=seed + 1 + k, n_se=n_se))
    return results
