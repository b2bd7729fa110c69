"""Coefficient decimation: keep every M-th prototype tap to stretch the response by M."""
from __future__ import annotations

import numpy as np

from .errors import NyquistError

M_MAX = 8


def select_every(coeffs, m: int) -> np.ndarray:
    """[h_0, h_m, h_2m, ...] with no gain correction."""
    if int(m) != m or m < 1:
        raise ValueError(f"decimation factor must be a positive integer, got {m!r}")
    return np.asarray(coeffs, dtype=float)[:: int(m)].copy()


def check_m(proto, m: int, m_max: int = M_MAX) -> int:
    """Validate M against the configured cap and the prototype's upper stopband edge."""
    if int(m) != m or not 1 <= m <= m_max:
        raise NyquistError(f"decimation factor must be an integer in [1, {m_max}], got {m!r}")
    top = proto.spec.upper_edge
    if m * top >= 1.0:
        raise NyquistError(f"M={m} stretches the band edge {top:g} to {m * top:g}, past Nyquist")
    return int(m)


def decimate_coefficients(proto, m: int, m_max: int = M_MAX) -> np.ndarray:
    """Decimated taps scaled by M.

    Decimation divides the passband gain by M (one alias term of M survives),
    so scaling by M restores the prototype's 0 dB passband.
    """
    m = check_m(proto, m, m_max)
    taps = select_every(proto.coeffs, m)
    if m > 1:
        taps *= m
    return taps


def predicted_stretch(proto_center: float, proto_bw: float, m: int) -> tuple[float, float]:
    if m * proto_center >= 1.0:
        raise NyquistError(f"m * center = {m * proto_center:g} must be < 1")
    return m * proto_center, m * proto_bw

