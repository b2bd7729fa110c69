"""Variable bandpass filter tuned by allpass frequency warping and coefficient decimation."""

from .allpass import AllpassState, allpass_phase, allpass_phase_delay, allpass_response, allpass_step
from .analyzer import BandpassMeasurement, ResponseCurve, measure, sweep
from .cdm import decimate_coefficients, predicted_stretch
from .errors import (
    DomainError,
    InfeasibleSpecError,
    NotBandpassError,
    NyquistError,
    TuningInfeasibleError,
)
from .prototype import FilterSpec, PrototypeFilter, design_bandpass, overdesign_margin
from .tuner import VdfConfig, alpha_for_center, center_after_tuning, choose_m
from .vdf import VariableFilter
from .warped import WarpedEngine, warped_impulse_response, warped_response, warped_step

__version__ = "0.1.0"
