"""First-order allpass section A(z) = (-alpha + z^-1) / (1 - alpha z^-1).

Frequencies here are in radians per sample, omega in [0, pi].
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# |alpha| beyond this makes the allpass tail impractically long
ALPHA_GUARD = 0.9999


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not np.isfinite(alpha) or abs(alpha) > ALPHA_GUARD:
        raise DomainError(f"warping coefficient must satisfy |alpha| <= {ALPHA_GUARD}, got {alpha!r}")
    return alpha


def _atan_term(alpha, omega):
    return np.arctan2(alpha * np.sin(omega), 1.0 - alpha * np.cos(omega))


def allpass_response(alpha: float, omega):
    """Complex frequency response A(e^{j omega})."""
    alpha = check_alpha(alpha)
    z1 = np.exp(-1j * np.asarray(omega, dtype=float))
    return (-alpha + z1) / (1.0 - alpha * z1)


def allpass_phase(alpha: float, omega):
    """Unwrapped phase of A(e^{j omega}); runs from 0 at DC to -pi at Nyquist."""
    alpha = check_alpha(alpha)
    omega = np.asarray(omega, dtype=float)
    return -omega - 2.0 * _atan_term(alpha, omega)


def warp_map(alpha: float, omega):
    """Prototype-domain frequency seen at output frequency omega, i.e. -phase."""
    return -allpass_phase(alpha, omega)


def allpass_phase_delay(alpha: float, omega):
    """Phase delay -phase/omega in samples.

    At omega = 0 the analytic limit (1 + alpha) / (1 - alpha) is returned.
    """
    alpha = check_alpha(alpha)
    omega = np.asarray(omega, dtype=float)
    if np.any(omega < 0):
        raise DomainError("phase delay is defined for omega >= 0")
    dc = (1.0 + alpha) / (1.0 - alpha)
    with np.errstate(divide="ignore", invalid="ignore"):
        tau = 1.0 + 2.0 * _atan_term(alpha, omega) / omega
    # 1 + (2/w) atan(.) loses precision as w -> 0; switch to the limit there
    tau = np.where(omega < 1e-7, dc, tau)
    return tau if tau.ndim else float(tau)


@dataclass
class AllpassState:
    """Single-multiplier allpass section with one delay element ``w``."""

    alpha: float
    w: float = 0.0

    def __post_init__(self):
        self.alpha = check_alpha(self.alpha)

    def reset(self) -> None:
        self.w = 0.0


def allpass_step(state: AllpassState, x: float) -> tuple[AllpassState, float]:
    """Advance one sample: y = -alpha x + w, w' = x + alpha y."""
    y = -state.alpha * x + state.w
    return AllpassState(state.alpha, x + state.alpha * y), y


def allpass_impulse_response(alpha: float, n: int) -> np.ndarray:
    state = AllpassState(alpha)
    out = np.empty(n)
    x = 1.0
    for i in range(n):
        state, out[i] = allpass_step(state, x)
        x = 0.0
    return out
