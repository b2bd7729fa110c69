"""Warped FIR filter: transposed direct form with every unit delay replaced by A(z)."""
from __future__ import annotations

import numpy as np
from scipy.signal import lfilter

from .allpass import allpass_response, check_alpha, warp_map


def fir_response(coeffs, omega):
    """Plain FIR response sum_k h_k e^{-j k omega} (Horner on e^{-j omega})."""
    coeffs = np.asarray(coeffs, dtype=float)
    return np.polyval(coeffs[::-1], np.exp(-1j * np.asarray(omega, dtype=float)))


def warped_response(coeffs, alpha: float, omega):
    """G(e^{j omega}) = sum_k h_k A(e^{j omega})^k, by Horner's scheme on A."""
    coeffs = np.asarray(coeffs, dtype=float)
    a = allpass_response(alpha, omega)
    return np.polyval(coeffs[::-1], a)


def warped_response_substituted(coeffs, alpha: float, omega):
    """Same response written as the prototype FIR evaluated at the warped frequency."""
    return fir_response(coeffs, warp_map(alpha, omega))


class WarpedEngine:
    """Streaming warped FIR filter.

    Stage k (1 <= k < L) holds the delay element of the allpass section that
    replaces the k-th delay of the transposed-direct-form chain.
    """

    def __init__(self, coeffs, alpha: float = 0.0):
        coeffs = np.array(coeffs, dtype=float)
        if coeffs.ndim != 1 or coeffs.size == 0:
            raise ValueError("coeffs must be a non-empty 1-D sequence")
        coeffs.setflags(write=False)
        self.coeffs = coeffs
        self.alpha = check_alpha(alpha)
        self.stages = np.zeros(coeffs.size - 1)

    def __repr__(self):
        return f"WarpedEngine(taps={self.coeffs.size}, alpha={self.alpha!r})"

    def reset(self) -> None:
        self.stages[:] = 0.0

    def set_alpha(self, alpha: float) -> None:
        """Change the warping coefficient, keeping the stage states."""
        self.alpha = check_alpha(alpha)

    def step(self, x: float) -> float:
        c, a, w = self.coeffs, self.alpha, self.stages
        if w.size == 0:
            return c[0] * x
        # s_k = -a*(c_k x + s_{k+1}) + w_k, evaluated from the tail of the chain
        v = w - a * c[1:] * x
        if a == 0.0:
            s = v
        else:
            s = lfilter([1.0], [1.0, a], v[::-1])[::-1]
        y = c[0] * x + s[0]
        u = c[1:] * x
        u[:-1] += s[1:]
        self.stages = u + a * s
        return float(y)

    def process(self, samples) -> np.ndarray:
        samples = np.asarray(samples, dtype=float)
        out = np.empty(samples.shape)
        for i, x in enumerate(samples):
            out[i] = self.step(x)
        return out

    def impulse_response(self, n: int) -> np.ndarray:
        """Response to a unit impulse from reset state; leaves this engine untouched."""
        if n < 1:
            raise ValueError("n must be >= 1")
        probe = WarpedEngine(self.coeffs, self.alpha)
        x = np.zeros(n)
        x[0] = 1.0
        return probe.process(x)

    def response(self, omega):
        return warped_response(self.coeffs, self.alpha, omega)


def warped_step(engine: WarpedEngine, x: float) -> tuple[WarpedEngine, float]:
    y = engine.step(x)
    return engine, y


def warped_impulse_response(engine: WarpedEngine, n: int) -> np.ndarray:
    return engine.impulse_response(n)
