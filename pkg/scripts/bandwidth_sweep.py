"""Measured -3 dB bandwidth versus center frequency for each decimation factor.

Shows that warping alone (M=1) drags the bandwidth along with the center,
and how each M shifts the family of achievable bandwidths.
"""
import argparse
import csv
import sys

import numpy as np

from warpvdf.errors import TuningInfeasibleError
from warpvdf.prototype import FilterSpec, design_bandpass
from warpvdf.vdf import VariableFilter


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=19)
    ap.add_argument("--max-m", type=int, default=5)
    args = ap.parse_args()

    proto = design_bandpass(FilterSpec(0.14, 0.02, 0.002, 100.0, 0.02))
    w = csv.writer(sys.stdout)
    w.writerow(["m", "target_center", "alpha", "measured_center", "bandwidth_3db", "atten_db"])
    for m in range(1, args.max_m + 1):
        for center in np.linspace(0.05, 0.95, args.points):
            try:
                vdf = VariableFilter.from_params(proto, 0.0, m)
                vdf.retune(float(center), m * 0.02)
                if abs(vdf.alpha) > 0.8:
                    continue
                meas = vdf.measure()
            except (TuningInfeasibleError, ValueError):
                continue
            w.writerow([m, f"{center:.3f}", f"{vdf.alpha:.5f}", f"{meas.center:.5f}",
                        f"{meas.bandwidth_3db:.5f}", f"{meas.stopband_atten_db:.1f}"])


if __name__ == "__main__":
    main()
