"""Frequency-response sweeps and bandpass metric extraction."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass

import numpy as np

from .errors import NotBandpassError
from .warped import warped_response

DEFAULT_GRID = 8192
_TINY = 1e-300


@dataclass
class ResponseCurve:
    """Complex response sampled on a uniform grid of normalized frequencies [0, 1]."""

    freqs: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        self.freqs = np.asarray(self.freqs, dtype=float)
        self.values = np.asarray(self.values, dtype=complex)
        if self.freqs.shape != self.values.shape or self.freqs.ndim != 1:
            raise ValueError("freqs and values must be 1-D arrays of equal length")
        if self.freqs.size < 2 or self.freqs[0] != 0.0 or self.freqs[-1] != 1.0:
            raise ValueError("grid must run from 0 to 1 inclusive")
        if np.any(np.diff(self.freqs) <= 0):
            raise ValueError("freqs must be strictly increasing")

    @property
    def mag_db(self) -> np.ndarray:
        return 20.0 * np.log10(np.maximum(np.abs(self.values), _TINY))

    @property
    def phase(self) -> np.ndarray:
        return np.angle(self.values)

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("freq,mag_db,phase_rad\n")
        for f, m, p in zip(self.freqs.tolist(), self.mag_db.tolist(), self.phase.tolist()):
            buf.write(f"{f!r},{m!r},{p!r}\n")
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "ResponseCurve":
        rows = list(csv.DictReader(io.StringIO(text)))
        freqs = np.array([float(r["freq"]) for r in rows])
        mag = 10.0 ** (np.array([float(r["mag_db"]) for r in rows]) / 20.0)
        phase = np.array([float(r["phase_rad"]) for r in rows])
        return cls(freqs, mag * np.exp(1j * phase))


@dataclass
class BandpassMeasurement:
    center: float
    bandwidth_3db: float
    passband_ripple_db: float
    stopband_atten_db: float
    peak_db: float

    def to_json(self) -> str:
        return json.dumps({k: float(v) for k, v in asdict(self).items()}, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "BandpassMeasurement":
        return cls(**json.loads(text))


def uniform_grid(grid_size: int = DEFAULT_GRID) -> np.ndarray:
    if grid_size < 16:
        raise ValueError("grid_size must be >= 16")
    return np.linspace(0.0, 1.0, grid_size)


def sweep(coeffs, alpha: float = 0.0, grid_size: int = DEFAULT_GRID) -> ResponseCurve:
    """Evaluate the warped response of ``coeffs`` (or anything with ``.coeffs``/``.alpha``)."""
    if hasattr(coeffs, "coeffs"):
        alpha = getattr(coeffs, "alpha", alpha)
        coeffs = coeffs.coeffs
    freqs = uniform_grid(grid_size)
    return ResponseCurve(freqs, warped_response(coeffs, alpha, np.pi * freqs))


def _crossing(f0, f1, d0, d1, level):
    # linear interpolation of the dB curve between two grid points
    if d1 == d0:
        return f0
    return f0 + (level - d0) * (f1 - f0) / (d1 - d0)


def measure(
    curve: ResponseCurve,
    guard: float = 0.04,
    passband: tuple[float, float] | None = None,
    stopband: tuple[float, float] | None = None,
) -> BandpassMeasurement:
    """Extract center, -3 dB bandwidth, ripple and stopband attenuation.

    Attenuation is taken outside ``stopband`` = (lower, upper) stopband edges
    when given, otherwise outside the -3 dB band widened by ``guard`` on each
    side.  Ripple is taken over ``passband`` when given, otherwise between the
    -3 dB edges.
    """
    f = curve.freqs
    db = curve.mag_db
    ipk = int(np.argmax(db))
    peak = float(db[ipk])
    if ipk == 0 or ipk == f.size - 1:
        raise NotBandpassError("response peaks at DC or Nyquist")
    level = peak - 3.0
    below = db < level
    lo_idx = np.nonzero(below[:ipk])[0]
    hi_idx = np.nonzero(below[ipk:])[0]
    if lo_idx.size == 0 or hi_idx.size == 0:
        raise NotBandpassError("no -3 dB crossing on one side of the peak")
    i = lo_idx[-1]
    j = ipk + hi_idx[0]
    lower = _crossing(f[i], f[i + 1], db[i], db[i + 1], level)
    upper = _crossing(f[j - 1], f[j], db[j - 1], db[j], level)

    if passband is None:
        inband = db[i + 1 : j]
    else:
        inband = db[(f >= passband[0]) & (f <= passband[1])]
    ripple = float(inband.max() - inband.min()) if inband.size else 0.0

    if stopband is None:
        stopband = (lower - guard, upper + guard)
    outside = (f < stopband[0]) | (f > stopband[1])
    if not np.any(outside):
        raise NotBandpassError("stopband region is empty")
    atten = peak - float(db[outside].max())

    return BandpassMeasurement(
        center=float(0.5 * (lower + upper)),
        bandwidth_3db=float(upper - lower),
        passband_ripple_db=ripple,
        stopband_atten_db=atten,
        peak_db=peak,
    )
