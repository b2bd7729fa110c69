"""Signal files: one real per line (text) or raw little-endian float64 (binary)."""
from __future__ import annotations

from pathlib import Path

import numpy as np


def read_signal(path, binary: bool = False) -> np.ndarray:
    path = Path(path)
    if binary:
        data = np.fromfile(path, dtype="<f8")
    else:
        lines = [ln.strip() for ln in path.read_text().splitlines()]
        data = np.array([float(ln) for ln in lines if ln and not ln.startswith("#")])
    if data.size == 0:
        raise ValueError(f"{path}: empty signal")
    if not np.all(np.isfinite(data)):
        raise ValueError(f"{path}: non-finite samples")
    return data


def write_signal(path, samples, binary: bool = False) -> None:
    samples = np.asarray(samples, dtype=float)
    path = Path(path)
    if binary:
        samples.astype("<f8").tofile(path)
    else:
        path.write_text("".join(f"{x!r}\n" for x in samples.tolist()))
