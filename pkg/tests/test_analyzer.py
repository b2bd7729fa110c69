import json

import numpy as np
import pytest

from warpvdf.analyzer import BandpassMeasurement, ResponseCurve, measure, sweep, uniform_grid
from warpvdf.errors import NotBandpassError
from warpvdf.warped import WarpedEngine


def synthetic(lo, hi, floor_db=-100.0, n=8192):
    f = uniform_grid(n)
    db = np.full(n, floor_db)
    db[(f >= lo) & (f <= hi)] = 0.0
    return ResponseCurve(f, 10 ** (db / 20))


def test_sweep_trivial():
    c = sweep([1.0], 0.4, 64)
    assert np.all(c.values == 1)
    assert c.freqs[0] == 0 and c.freqs[-1] == 1


def test_sweep_moving_average_null():
    c = sweep([0.5, 0.5], 0.0, 64)
    assert abs(c.values[-1]) < 1e-15


def test_sweep_accepts_engine():
    eng = WarpedEngine([0.5, 0.5], -0.3)
    assert np.array_equal(sweep(eng, grid_size=32).values, sweep([0.5, 0.5], -0.3, 32).values)


def test_sweep_grid_size_guard():
    with pytest.raises(ValueError):
        sweep([1.0], 0.0, 8)


def test_synthetic_box():
    m = measure(synthetic(0.30, 0.32))
    step = 1 / 8191
    assert m.center == pytest.approx(0.31, abs=step)
    assert m.bandwidth_3db == pytest.approx(0.02, abs=2 * step)
    assert m.stopband_atten_db == pytest.approx(100.0)
    assert m.peak_db == 0.0


def test_example_prototype_metrics(example_proto):
    m = measure(sweep(example_proto.coeffs), passband=example_proto.passband)
    assert m.center == pytest.approx(0.14, abs=0.002)
    assert m.bandwidth_3db == pytest.approx(0.02, rel=0.15)
    assert m.passband_ripple_db <= 0.002
    assert m.stopband_atten_db >= 90


def test_default_ripple_spans_3db_band(example_proto):
    m = measure(sweep(example_proto.coeffs))
    assert 2.5 < m.passband_ripple_db <= 3.0


def test_grid_refinement(example_proto):
    a = measure(sweep(example_proto.coeffs, 0.0, 8192))
    b = measure(sweep(example_proto.coeffs, 0.0, 16384))
    assert abs(a.center - b.center) < 2 / 16384
    assert abs(a.bandwidth_3db - b.bandwidth_3db) < 4 / 16384


@pytest.mark.parametrize("coeffs", [[1.0, 1.0], [1.0, -1.0], [1.0]])
def test_not_bandpass(coeffs):
    with pytest.raises(NotBandpassError):
        measure(sweep(coeffs, 0.0, 256))


def test_curve_validation():
    with pytest.raises(ValueError):
        ResponseCurve([0.0, 0.5], [1, 2, 3])
    with pytest.raises(ValueError):
        ResponseCurve([0.1, 1.0], [1, 1])
    with pytest.raises(ValueError):
        ResponseCurve([0.0, 0.7, 0.6, 1.0], [1, 1, 1, 1])


def test_csv_roundtrip(example_proto):
    c = sweep(example_proto.coeffs, -0.2, 257)
    text = c.to_csv()
    assert text.splitlines()[0] == "freq,mag_db,phase_rad"
    assert len(text.splitlines()) == 258
    back = ResponseCurve.from_csv(text)
    assert np.array_equal(back.freqs, c.freqs)
    assert np.allclose(back.values, c.values, rtol=1e-14, atol=0)


def test_measurement_json():
    m = BandpassMeasurement(0.31, 0.02, 0.001, 95.0, 0.0)
    doc = json.loads(m.to_json())
    assert set(doc) == {"center", "bandwidth_3db", "passband_ripple_db", "stopband_atten_db", "peak_db"}
    assert BandpassMeasurement.from_json(m.to_json()) == m
