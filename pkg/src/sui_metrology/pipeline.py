"""Optical pipelines as plain step lists.

A pipeline is data: the moment engine (:func:`propagate`) and the Monte Carlo
oracle each walk the same steps with their own arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .components import ModulationSignal, loss_channel, modulate
from .gaussian import GaussianState, SymplecticOp, apply, displace, vacuum


@dataclass(frozen=True)
class Displace:
    mode: int
    dx: float
    dy: float = 0.0


@dataclass(frozen=True)
class Loss:
    mode: int
    eta: float


@dataclass(frozen=True)
class Modulate:
    signal: ModulationSignal


@dataclass(frozen=True)
class Gate:
    op: SymplecticOp


Step = Union[Displace, Loss, Modulate, Gate]


def propagate(steps: Sequence[Step], n_modes: int, state: GaussianState = None) -> GaussianState:
    state = vacuum(n_modes) if state is None else state
    for step in steps:
        if isinstance(step, Gate):
            state = apply(state, step.op)
        elif isinstance(step, Loss):
            if step.eta:
                state = loss_channel(state, step.mode, step.eta)
        elif isinstance(step, Modulate):
            state = modulate(state, step.signal)
        elif isinstance(step, Displace):
            state = displace(state, step.mode, step.dx, step.dy)
        else:
            raise TypeError(f"unknown pipeline step {step!r}")
    return state
