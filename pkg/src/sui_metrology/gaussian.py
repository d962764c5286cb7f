"""Multimode Gaussian states in the quadrature picture.

Quadratures are ordered ``(X1, Y1, X2, Y2, ...)`` with ``X = a + a^dag`` and
``Y = -i (a - a^dag)``, so the vacuum has unit variance in every quadrature and
a coherent amplitude ``alpha`` (real) shows up as ``<X> = 2 alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

SYMMETRY_ATOL = 1e-12
SYMPLECTIC_ATOL = 1e-10


class PhysicalityError(ValueError):
    """Raised when a covariance matrix violates the uncertainty bound."""


def symplectic_form(n_modes: int) -> np.ndarray:
    """Block-diagonal symplectic form with 2x2 blocks ``[[0, 1], [-1, 0]]``."""
    return np.kron(np.eye(n_modes), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def _quad_index(modes: Sequence[int]) -> np.ndarray:
    return np.array([[2 * m, 2 * m + 1] for m in modes], dtype=int).reshape(-1)


@dataclass(frozen=True)
class GaussianState:
    """First and second moments of an ``n_modes``-mode Gaussian state.

    Instances are treated as values: every operation in this package returns
    a new state and leaves its input untouched.
    """

    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self):
        mean = np.array(self.mean, dtype=float).reshape(-1)
        cov = np.array(self.cov, dtype=float)
        if mean.size == 0 or mean.size % 2:
            raise ValueError("mean must have even, non-zero length 2*n_modes")
        if cov.shape != (mean.size, mean.size):
            raise ValueError(f"cov shape {cov.shape} does not match mean length {mean.size}")
        scale = max(1.0, float(np.max(np.abs(cov))))
        if not np.allclose(cov, cov.T, rtol=0, atol=SYMMETRY_ATOL * scale):
            raise ValueError("cov is not symmetric")
        mean.setflags(write=False)
        cov.setflags(write=False)
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)

    @property
    def n_modes(self) -> int:
        return self.mean.size // 2

    def quad_var(self, mode: int, quadrature: str = "X") -> float:
        i = 2 * mode + (0 if quadrature.upper() == "X" else 1)
        return float(self.cov[i, i])

    def photon_number(self, mode: int) -> float:
        """Bright-beam photon number ``(<X>^2 + <Y>^2) / 4``; vacuum photons are ignored."""
        x, y = self.mean[2 * mode : 2 * mode + 2]
        return float(x * x + y * y) / 4.0

    def uncertainty_margin(self) -> float:
        """Smallest eigenvalue of ``cov + i*Omega`` scaled by the largest covariance entry.

        Non-negative (up to rounding) for every physical state.
        """
        herm = self.cov + 1j * symplectic_form(self.n_modes)
        lo = float(np.min(np.linalg.eigvalsh(herm)))
        return lo / max(1.0, float(np.max(np.abs(self.cov))))

    def is_physical(self, rtol: float = 1e-9) -> bool:
        return self.uncertainty_margin() >= -rtol

    def check_physical(self, rtol: float = 1e-9) -> "GaussianState":
        margin = self.uncertainty_margin()
        if margin < -rtol:
            raise PhysicalityError(f"uncertainty bound violated (relative margin {margin:.3e})")
        return self

    def to_dict(self) -> dict:
        return {"schema_version": 1, "mean": self.mean.tolist(), "cov": self.cov.tolist()}

    @classmethod
    def from_dict(cls, data: dict) -> "GaussianState":
        if data.get("schema_version") != 1:
            raise ValueError(f"unsupported state schema version {data.get('schema_version')!r}")
        return cls(np.asarray(data["mean"]), np.asarray(data["cov"]))


@dataclass(frozen=True)
class SymplecticOp:
    """Affine map ``x -> matrix @ x + displacement`` acting on ``acted_modes``.

    ``matrix`` and ``displacement`` are expressed on the quadratures of
    ``acted_modes`` only, in the order given.
    """

    matrix: np.ndarray
    displacement: np.ndarray = None
    acted_modes: tuple = field(default=None)

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] % 2:
            raise ValueError("matrix must be square with even dimension")
        n = matrix.shape[0] // 2
        disp = np.zeros(2 * n) if self.displacement is None else np.array(self.displacement, dtype=float)
        if disp.shape != (2 * n,):
            raise ValueError("displacement length does not match matrix")
        modes = tuple(range(n)) if self.acted_modes is None else tuple(int(m) for m in self.acted_modes)
        if len(modes) != n or len(set(modes)) != n or min(modes) < 0:
            raise ValueError(f"acted_modes {modes} inconsistent with a {n}-mode matrix")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "displacement", disp)
        object.__setattr__(self, "acted_modes", modes)

    @classmethod
    def identity(cls, acted_modes: Sequence[int]) -> "SymplecticOp":
        n = len(acted_modes)
        return cls(np.eye(2 * n), np.zeros(2 * n), tuple(acted_modes))

    def is_symplectic(self, atol: float = SYMPLECTIC_ATOL) -> bool:
        omega = symplectic_form(len(self.acted_modes))
        return bool(np.allclose(self.matrix @ omega @ self.matrix.T, omega, rtol=0, atol=atol))

    def embed(self, n_modes: int) -> "SymplecticOp":
        """The same op written on all ``n_modes`` modes."""
        if max(self.acted_modes) >= n_modes:
            raise ValueError(f"op acts on mode {max(self.acted_modes)} but state has {n_modes} modes")
        idx = _quad_index(self.acted_modes)
        full = np.eye(2 * n_modes)
        full[np.ix_(idx, idx)] = self.matrix
        disp = np.zeros(2 * n_modes)
        disp[idx] = self.displacement
        return SymplecticOp(full, disp, tuple(range(n_modes)))

    def then(self, other: "SymplecticOp") -> "SymplecticOp":
        """Composite op: ``self`` first, then ``other``."""
        n = max(max(self.acted_modes), max(other.acted_modes)) + 1
        a, b = self.embed(n), other.embed(n)
        return SymplecticOp(b.matrix @ a.matrix, b.matrix @ a.displacement + b.displacement, tuple(range(n)))


def vacuum(n_modes: int) -> GaussianState:
    if int(n_modes) != n_modes or n_modes < 1:
        raise ValueError(f"n_modes must be a positive integer, got {n_modes!r}")
    n_modes = int(n_modes)
    return GaussianState(np.zeros(2 * n_modes), np.eye(2 * n_modes))


def _check_mode(state: GaussianState, mode: int) -> int:
    if int(mode) != mode or not 0 <= mode < state.n_modes:
        raise IndexError(f"mode {mode!r} out of range for {state.n_modes}-mode state")
    return int(mode)


def displace(state: GaussianState, mode: int, dx: float, dy: float) -> GaussianState:
    mode = _check_mode(state, mode)
    mean = state.mean.copy()
    mean[2 * mode] += dx
    mean[2 * mode + 1] += dy
    return GaussianState(mean, state.cov)


def apply(state: GaussianState, op: SymplecticOp) -> GaussianState:
    """Push first and second moments through an affine symplectic map."""
    if max(op.acted_modes) >= state.n_modes:
        raise ValueError(f"op acts on mode {max(op.acted_modes)} but state has {state.n_modes} modes")
    idx = _quad_index(op.acted_modes)
    s = op.matrix
    mean = state.mean.copy()
    mean[idx] = s @ state.mean[idx] + op.displacement
    cov = state.cov.copy()
    cov[idx, :] = s @ state.cov[idx, :]
    cov[:, idx] = cov[:, idx] @ s.T
    return GaussianState(mean, 0.5 * (cov + cov.T))


def marginal(state: GaussianState, modes: Sequence[int]) -> GaussianState:
    modes = list(modes)
    if not modes:
        raise ValueError("marginal needs at least one mode")
    if len(set(modes)) != len(modes):
        raise ValueError(f"duplicate modes in {modes}")
    for m in modes:
        _check_mode(state, m)
    idx = _quad_index(modes)
    return GaussianState(state.mean[idx], state.cov[np.ix_(idx, idx)])
