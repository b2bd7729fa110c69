"""Fixed-coefficient bandpass prototype design (Kaiser window)."""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.signal import firwin, kaiser_beta, kaiserord

from .analyzer import ResponseCurve, measure
from .errors import InfeasibleSpecError, NotBandpassError

MAX_ORDER = 4096
CHECK_GRID = 16384


@dataclass(frozen=True)
class FilterSpec:
    """Bandpass requirements in normalized frequency (1.0 = Nyquist).

    ``bandwidth`` is the -3 dB width centred on ``center``; the passband and
    stopband edges sit half a transition width inside and outside the ideal
    cutoffs that produce it.
    """

    center: float = 0.14
    bandwidth: float = 0.02
    passband_ripple_db: float = 0.002
    stopband_atten_db: float = 90.0
    transition_width: float = 0.02

    def __post_init__(self):
        for name in ("center", "bandwidth", "passband_ripple_db", "stopband_atten_db", "transition_width"):
            if not getattr(self, name) > 0:
                raise InfeasibleSpecError(f"{name} must be positive")
        lo = self.center - self.bandwidth / 2 - self.transition_width
        hi = self.center + self.bandwidth / 2 + self.transition_width
        if not (0.0 < lo and hi < 1.0):
            raise InfeasibleSpecError(
                f"band edges [{lo:.6g}, {hi:.6g}] (center +/- bandwidth/2 +/- transition) must lie inside (0, 1)"
            )

    @property
    def upper_edge(self) -> float:
        return self.center + self.bandwidth / 2 + self.transition_width

    def check_decimation(self, max_m: int) -> None:
        """Decimating by max_m must keep the stretched upper band edge below Nyquist."""
        if max_m * self.upper_edge >= 1.0:
            raise InfeasibleSpecError(
                f"upper band edge {self.upper_edge:g} times max M={max_m} is {max_m * self.upper_edge:g}, "
                "past Nyquist"
            )

    def with_margin(self, extra_db: float) -> "FilterSpec":
        return FilterSpec(
            self.center, self.bandwidth, self.passband_ripple_db,
            self.stopband_atten_db + extra_db, self.transition_width,
        )


@dataclass(frozen=True, eq=False)
class PrototypeFilter:
    coeffs: np.ndarray
    spec: FilterSpec
    passband: tuple[float, float]
    stopband: tuple[float, float]

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float)
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def to_json(self) -> str:
        return json.dumps(
            {
                "order": self.order,
                "coeffs": [float(c) for c in self.coeffs],
                "spec": asdict(self.spec),
                "passband": list(self.passband),
                "stopband": list(self.stopband),
            },
            indent=1,
        )

    @classmethod
    def from_json(cls, text: str) -> "PrototypeFilter":
        d = json.loads(text)
        coeffs = np.array(d["coeffs"], dtype=float)
        if "order" in d and d["order"] != coeffs.size - 1:
            raise ValueError(f"order {d['order']} does not match {coeffs.size} coefficients")
        spec = FilterSpec(**d["spec"])
        # files without explicit edges fall back to the nominal band
        pb = d.get("passband", (spec.center - spec.bandwidth / 2, spec.center + spec.bandwidth / 2))
        sb = d.get("stopband", (pb[0] - spec.transition_width, pb[1] + spec.transition_width))
        return cls(coeffs, spec, tuple(pb), tuple(sb))

    def to_text(self) -> str:
        return "".join(f"{c!r}\n" for c in self.coeffs.tolist())


def _ripple_delta(ripple_db: float) -> float:
    g = 10.0 ** (ripple_db / 20.0)
    return (g - 1.0) / (g + 1.0)


def _point_response(h: np.ndarray, f: float) -> complex:
    n = np.arange(h.size)
    return complex(np.dot(h, np.exp(-1j * math.pi * f * n)))


def _kaiser_bandpass(numtaps: int, center: float, half: float, beta: float) -> np.ndarray:
    lo, hi = max(center - half, 1e-9), min(center + half, 1 - 1e-9)
    return firwin(numtaps, [lo, hi], window=("kaiser", beta), pass_zero=False, scale=False)


def _calibrate(numtaps: int, spec: FilterSpec, beta: float) -> tuple[np.ndarray, float]:
    """Ideal-cutoff half-width whose -3 dB points land at center +/- bandwidth/2."""
    edge = spec.center + spec.bandwidth / 2
    target = 1.0 / math.sqrt(2.0)

    def rel_gain(half):
        h = _kaiser_bandpass(numtaps, spec.center, half, beta)
        return abs(_point_response(h, edge)) / abs(_point_response(h, spec.center)) - target

    lo = max(spec.bandwidth / 2 - spec.transition_width, spec.bandwidth / 8)
    hi = spec.bandwidth / 2 + spec.transition_width
    if rel_gain(lo) * rel_gain(hi) > 0:
        half = spec.bandwidth / 2
    else:
        glo = rel_gain(lo)
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            gm = rel_gain(mid)
            if (gm < 0) == (glo < 0):
                lo, glo = mid, gm
            else:
                hi = mid
            if hi - lo < 1e-13:
                break
        half = 0.5 * (lo + hi)
    return _kaiser_bandpass(numtaps, spec.center, half, beta), half


def check_curve(h: np.ndarray, grid_size: int = CHECK_GRID) -> ResponseCurve:
    """Prototype response on a uniform grid, via zero-padded FFT."""
    values = np.fft.rfft(h, n=2 * (grid_size - 1))
    return ResponseCurve(np.linspace(0.0, 1.0, grid_size), values)


def meets_spec(proto: PrototypeFilter, grid_size: int = CHECK_GRID) -> bool:
    try:
        m = measure(check_curve(proto.coeffs, grid_size), passband=proto.passband, stopband=proto.stopband)
    except NotBandpassError:
        return False
    return (
        m.passband_ripple_db <= proto.spec.passband_ripple_db
        and m.stopband_atten_db >= proto.spec.stopband_atten_db
    )


def estimate_order(spec: FilterSpec) -> tuple[int, float]:
    """Kaiser order estimate (rounded up to even) and window beta."""
    delta = min(_ripple_delta(spec.passband_ripple_db), 10.0 ** (-spec.stopband_atten_db / 20.0))
    atten = -20.0 * math.log10(delta)
    numtaps, _ = kaiserord(atten, spec.transition_width)
    order = numtaps - 1
    order += order % 2
    return max(order, 2), float(kaiser_beta(atten))


def design_bandpass(spec: FilterSpec, max_order: int = MAX_ORDER) -> PrototypeFilter:
    """Linear-phase bandpass meeting ``spec``, of the smallest even order found.

    Starts from the Kaiser estimate and grows the order by two until the
    measured ripple and attenuation both pass.
    """
    order, beta = estimate_order(spec)
    tw = spec.transition_width
    while order <= max_order:
        h, half = _calibrate(order + 1, spec, beta)
        h = h / abs(_point_response(h, spec.center))
        h = 0.5 * (h + h[::-1])
        pass_half = max(half - tw / 2, 0.0)
        proto = PrototypeFilter(
            h,
            spec,
            passband=(spec.center - pass_half, spec.center + pass_half),
            stopband=(spec.center - half - tw / 2, spec.center + half + tw / 2),
        )
        if meets_spec(proto):
            return proto
        order += 2
    raise InfeasibleSpecError(f"spec needs order above the cap of {max_order}")


def overdesign_margin(desired_atten_db: float, max_m: int) -> float:
    """Extra stopband attenuation (dB) to design in so CDM up to ``max_m`` still meets spec."""
    if max_m < 1:
        raise ValueError("max_m must be >= 1")
    if max_m == 1:
        return 0.0
    if max_m <= 5:
        return 10.0
    return float(math.ceil(20.0 * math.log10(max_m)))
