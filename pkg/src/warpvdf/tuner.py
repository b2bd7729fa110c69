"""Map desired center frequency / bandwidth to the two runtime knobs (alpha, M).

Public functions take normalized frequencies (1.0 = Nyquist); internally
omega = pi * f.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .allpass import ALPHA_GUARD, check_alpha
from .errors import DomainError, TuningInfeasibleError


@dataclass(frozen=True)
class VdfConfig:
    alpha: float
    m: int
    target_center: float
    target_bandwidth: float

    def __post_init__(self):
        if not abs(self.alpha) < 1.0:
            raise TuningInfeasibleError(f"|alpha| must be < 1, got {self.alpha}")
        if int(self.m) != self.m or self.m < 1:
            raise TuningInfeasibleError(f"decimation factor must be a positive integer, got {self.m}")
        lo = self.target_center - self.target_bandwidth / 2
        hi = self.target_center + self.target_bandwidth / 2
        if not (0.0 < lo and hi < 1.0 and self.target_bandwidth > 0):
            raise TuningInfeasibleError(
                f"target band [{lo:.6g}, {hi:.6g}] must lie strictly inside (0, 1)"
            )


def eq6_residual(proto_center: float, target_center: float, alpha: float, m: int) -> float:
    """m*w_c0 - (w_ca + 2 atan(alpha sin w_ca / (1 - alpha cos w_ca)))."""
    wc0, wca = math.pi * proto_center, math.pi * target_center
    return m * wc0 - (wca + 2.0 * math.atan(alpha * math.sin(wca) / (1.0 - alpha * math.cos(wca))))


def alpha_for_center(proto_center: float, target_center: float, m: int = 1) -> float:
    """Warping coefficient that moves the (decimated) prototype center to target_center."""
    if not (0.0 < proto_center < 1.0 and 0.0 < target_center < 1.0):
        raise DomainError("center frequencies must lie in (0, 1)")
    if m < 1 or m * proto_center >= 1.0:
        raise TuningInfeasibleError(f"m * proto_center = {m * proto_center:g} must be < 1")
    wc0, wca = math.pi * proto_center, math.pi * target_center
    x = (m * wc0 - wca) / 2.0
    # the atan term in the phase is confined to (-pi/2, pi/2)
    if abs(x) >= math.pi / 2 * (1 - 1e-12):
        raise TuningInfeasibleError(f"tangent singularity: x = {x:g}")
    t = math.tan(x)
    denom = math.sin(wca) + t * math.cos(wca)
    if denom == 0.0:
        raise TuningInfeasibleError("tangent singularity in alpha formula")
    alpha = t / denom
    if not abs(alpha) <= ALPHA_GUARD:
        raise TuningInfeasibleError(
            f"target {target_center:g} needs alpha = {alpha:.6g}, outside |alpha| <= {ALPHA_GUARD}"
        )
    return alpha


def bisect(func, lo: float, hi: float, tol: float = 1e-14, maxiter: int = 200) -> float:
    """Root of an increasing function bracketed by [lo, hi]."""
    flo = func(lo)
    if flo * func(hi) > 0.0:
        raise ValueError("root is not bracketed")
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        fmid = func(mid)
        if fmid == 0.0:
            return mid
        if (fmid < 0.0) == (flo < 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
        if hi - lo < tol:
            break
    return 0.5 * (lo + hi)


def center_after_tuning(proto_center: float, alpha: float, m: int = 1) -> float:
    """Output frequency where the warped, decimated prototype frequency proto_center lands.

    Solves w + 2 atan(alpha sin w / (1 - alpha cos w)) = m * pi * proto_center
    for w in (0, pi).  Also used to map band edges.
    """
    alpha = check_alpha(alpha)
    target = m * math.pi * proto_center
    if not 0.0 < target < math.pi:
        raise TuningInfeasibleError(f"m * proto_center = {m * proto_center:g} outside (0, 1)")

    def phi(w):
        return w + 2.0 * math.atan2(alpha * math.sin(w), 1.0 - alpha * math.cos(w)) - target

    return bisect(phi, 0.0, math.pi) / math.pi


def choose_m(proto_bw: float, target_bw: float, m_max: int = 8) -> int:
    """Nearest integer bandwidth ratio (ties to even), clamped to [1, m_max]."""
    if proto_bw <= 0:
        raise DomainError("prototype bandwidth must be positive")
    return max(1, min(m_max, round(target_bw / proto_bw)))
