"""Variable bandpass filter: fixed prototype + coefficient decimation + allpass warping.

The hardware multiplexer network that picks every M-th tap is modelled by
re-slicing the prototype coefficient vector.
"""
from __future__ import annotations

from functools import cached_property

import numpy as np

from .analyzer import DEFAULT_GRID, BandpassMeasurement, ResponseCurve, measure, sweep
from .cdm import M_MAX, check_m, decimate_coefficients
from .prototype import PrototypeFilter
from .tuner import VdfConfig, alpha_for_center, center_after_tuning, choose_m
from .warped import WarpedEngine


def _map_edge(f: float, alpha: float, m: int) -> float:
    if m * f >= 1.0:
        return 1.0
    if f <= 0.0:
        return 0.0
    return center_after_tuning(f, alpha, m)


class VariableFilter:
    """Bandpass filter retuned online through (alpha, M) only.

    Changing M resets the allpass states (the stage count changes); an
    alpha-only change keeps them.
    """

    def __init__(self, proto: PrototypeFilter, config: VdfConfig, m_max: int = M_MAX):
        self.proto = proto
        self.m_max = m_max
        check_m(proto, config.m, m_max)
        self.config = config
        self.engine = WarpedEngine(decimate_coefficients(proto, config.m, m_max), config.alpha)

    def __repr__(self):
        c = self.config
        return f"VariableFilter(alpha={c.alpha:.6g}, m={c.m}, center={c.target_center:.6g})"

    # -- construction and tuning -------------------------------------------------

    @staticmethod
    def plan(proto: PrototypeFilter, target_center: float, target_bw: float, m_max: int = M_MAX) -> VdfConfig:
        """(alpha, M) for a target, without touching any filter state."""
        m = choose_m(proto.spec.bandwidth, target_bw, m_max)
        check_m(proto, m, m_max)
        alpha = alpha_for_center(proto.spec.center, target_center, m)
        return VdfConfig(alpha, m, target_center, target_bw)

    @classmethod
    def build(cls, proto: PrototypeFilter, target_center: float, target_bw: float, m_max: int = M_MAX):
        return cls(proto, cls.plan(proto, target_center, target_bw, m_max), m_max)

    @classmethod
    def from_params(cls, proto: PrototypeFilter, alpha: float, m: int, m_max: int = M_MAX):
        """Filter with explicit knobs; targets are the predicted center and M-stretched bandwidth."""
        check_m(proto, m, m_max)
        center = center_after_tuning(proto.spec.center, alpha, m)
        return cls(proto, VdfConfig(alpha, m, center, m * proto.spec.bandwidth), m_max)

    def retune(self, target_center: float, target_bw: float) -> "VariableFilter":
        config = self.plan(self.proto, target_center, target_bw, self.m_max)
        self._apply(config)
        return self

    def set_params(self, alpha: float, m: int) -> "VariableFilter":
        check_m(self.proto, m, self.m_max)
        center = center_after_tuning(self.proto.spec.center, alpha, m)
        self._apply(VdfConfig(alpha, m, center, m * self.proto.spec.bandwidth))
        return self

    def _apply(self, config: VdfConfig) -> None:
        if config.m != self.config.m:
            self.engine = WarpedEngine(decimate_coefficients(self.proto, config.m, self.m_max), config.alpha)
        else:
            self.engine.set_alpha(config.alpha)
        self.config = config
        self.__dict__.pop("report", None)

    # -- processing ----------------------------------------------------------------

    @property
    def alpha(self) -> float:
        return self.config.alpha

    @property
    def m(self) -> int:
        return self.config.m

    @property
    def coeffs(self) -> np.ndarray:
        return self.engine.coeffs

    def reset(self) -> None:
        self.engine.reset()

    def process(self, samples) -> np.ndarray:
        return self.engine.process(samples)

    # -- analysis ------------------------------------------------------------------

    def predicted_center(self) -> float:
        return center_after_tuning(self.proto.spec.center, self.alpha, self.m)

    def mapped_edges(self) -> tuple[tuple[float, float], tuple[float, float]]:
        """Prototype passband and stopband edges carried through decimation and warping."""
        pb = tuple(_map_edge(f, self.alpha, self.m) for f in self.proto.passband)
        sb = tuple(_map_edge(f, self.alpha, self.m) for f in self.proto.stopband)
        return pb, sb

    def response(self, grid_size: int = DEFAULT_GRID) -> ResponseCurve:
        return sweep(self.engine.coeffs, self.alpha, grid_size)

    def measure(self, grid_size: int = DEFAULT_GRID) -> BandpassMeasurement:
        pb, sb = self.mapped_edges()
        return measure(self.response(grid_size), passband=pb, stopband=sb)

    @cached_property
    def report(self) -> dict:
        meas = self.measure()
        c = self.config
        return {
            "alpha": c.alpha,
            "m": c.m,
            "target_center": c.target_center,
            "target_bandwidth": c.target_bandwidth,
            "predicted_center": self.predicted_center(),
            "measured_center": meas.center,
            "measured_bandwidth": meas.bandwidth_3db,
            "passband_ripple_db": meas.passband_ripple_db,
            "stopband_atten_db": meas.stopband_atten_db,
            "peak_db": meas.peak_db,
            "taps": int(self.engine.coeffs.size),
        }
