"""Gaussian-state simulation of dual-beam SU(1,1) interferometer phase metrology."""

from .gaussian import (
    GaussianState,
    SymplecticOp,
    apply,
    displace,
    marginal,
    symplectic_form,
    vacuum,
)
from .components import (
    ModulationSignal,
    OpaParams,
    degenerate_squeezer,
    loss_channel,
    modulate,
    phase_shift,
    two_mode_squeezer,
)
from .detection import (
    HomodyneSelection,
    ReadoutMoments,
    SnrReport,
    mix_currents,
    optimize_mixer_gain,
    read_moments,
    signal_extract,
)
from .schemes import (
    SchemeConfig,
    SchemeResult,
    amplitude_channel,
    calibrate_modulation,
    load_preset,
    resource_sharing_check,
    run_scheme,
    transfer_coefficients,
)
from . import formulas

__version__ = "0.1.0"
