import hashlib
import math

import numpy as np
import pytest

from warpvdf.allpass import warp_map
from warpvdf.errors import NyquistError, TuningInfeasibleError
from warpvdf.vdf import VariableFilter
from warpvdf.warped import fir_response

from .oracles import tone_amplitude


def _digest(a):
    return hashlib.sha256(np.ascontiguousarray(a).tobytes()).hexdigest()


def test_identity_tuning(example_proto):
    v = VariableFilter.build(example_proto, 0.14, 0.02)
    assert (v.m, v.alpha) == (1, 0.0)
    assert v.coeffs.tobytes() == example_proto.coeffs.tobytes()


def test_build_031(example_proto):
    v = VariableFilter.build(example_proto, 0.31, 0.02)
    assert v.m == 1
    assert v.alpha == pytest.approx(-0.4064, abs=2e-4)
    assert v.measure().center == pytest.approx(0.31, abs=0.005)


def test_build_071(example_proto):
    v = VariableFilter.build(example_proto, 0.71, 0.04)
    assert v.m == 2
    assert v.alpha == pytest.approx(-0.6253, abs=1e-4)
    meas = v.measure()
    assert meas.center == pytest.approx(0.71, abs=0.005)
    assert meas.bandwidth_3db == pytest.approx(0.04, rel=0.15)


def test_report_fields(example_proto):
    r = VariableFilter.build(example_proto, 0.71, 0.04).report
    for key in ("alpha", "m", "predicted_center", "measured_center", "measured_bandwidth"):
        assert key in r
    assert r["predicted_center"] == pytest.approx(0.71, abs=1e-12)


def test_retune_keeps_prototype(example_proto):
    before = _digest(example_proto.coeffs)
    v = VariableFilter.build(example_proto, 0.31, 0.02)
    coeffs_obj = v.proto.coeffs
    for c, b in [(0.71, 0.04), (0.5, 0.06), (0.2, 0.02), (0.71, 0.10), (0.31, 0.02)]:
        v.retune(c, b)
        assert v.proto.coeffs is coeffs_obj
    assert _digest(example_proto.coeffs) == before


def test_retune_same_target(example_proto):
    v = VariableFilter.build(example_proto, 0.31, 0.02)
    cfg = v.config
    v.retune(0.31, 0.02)
    assert (v.alpha, v.m) == (cfg.alpha, cfg.m)


def test_retune_values_match_build(example_proto):
    v = VariableFilter.build(example_proto, 0.31, 0.02).retune(0.71, 0.04)
    ref = VariableFilter.build(example_proto, 0.71, 0.04)
    assert (v.alpha, v.m) == (ref.alpha, ref.m)


@pytest.mark.parametrize("center, bw", [(0.99, 0.02), (0.5, 0.14)])
def test_failed_retune_leaves_filter_unchanged(example_proto, center, bw):
    v = VariableFilter.build(example_proto, 0.31, 0.02)
    engine, cfg = v.engine, v.config
    with pytest.raises(TuningInfeasibleError):
        v.retune(center, bw)
    assert v.engine is engine and v.config == cfg


def test_nyquist_error_is_tuning_error(example_proto):
    with pytest.raises(NyquistError):
        VariableFilter.from_params(example_proto, 0.0, 6)


def test_state_policy(example_proto, rng):
    v = VariableFilter.build(example_proto, 0.31, 0.02)
    v.process(rng.normal(size=50))
    st = v.engine.stages.copy()
    v.retune(0.33, 0.02)  # alpha only
    assert v.m == 1 and np.array_equal(v.engine.stages, st)
    v.retune(0.33, 0.04)  # new M
    assert v.m == 2 and not v.engine.stages.any()


def test_zero_in_zero_out(example_proto):
    v = VariableFilter.build(example_proto, 0.31, 0.02)
    assert not v.process(np.zeros(300)).any()


def test_process_continues_state(example_proto, rng):
    x = rng.normal(size=400)
    a = VariableFilter.build(example_proto, 0.5, 0.04).process(x)
    v = VariableFilter.build(example_proto, 0.5, 0.04)
    b = np.concatenate([v.process(x[:123]), v.process(x[123:])])
    assert np.array_equal(a, b)


def test_impulse_matches_engine(example_proto):
    v = VariableFilter.build(example_proto, 0.71, 0.04)
    x = np.zeros(8192)
    x[0] = 1.0
    assert np.array_equal(v.process(x), v.engine.impulse_response(8192))


def test_two_tone_rejection(example_proto):
    v = VariableFilter.build(example_proto, 0.31, 0.02)
    n = np.arange(6000)
    f_in, f_out = 0.31, 0.51
    x = np.sin(np.pi * f_in * n) + np.sin(np.pi * f_out * n)
    y = v.process(x)[3000:]
    a_in, a_out = tone_amplitude(y, f_in), tone_amplitude(y, f_out)
    assert 20 * math.log10(a_in / a_out) >= 60


def test_fir_reduction(example_proto, rng):
    x = rng.normal(size=1000)
    y = VariableFilter.build(example_proto, 0.14, 0.02).process(x)
    assert np.max(np.abs(y - np.convolve(x, example_proto.coeffs)[: x.size])) < 1e-12


def _fine_peak(fn, lo, hi):
    f = np.linspace(lo, hi, 200001)
    return f[np.argmax(np.abs(fn(np.pi * f)))]


@pytest.mark.parametrize("center, bw", [(0.31, 0.02), (0.71, 0.04), (0.71, 0.08), (0.45, 0.06)])
def test_peak_location_law(example_proto, center, bw):
    v = VariableFilter.build(example_proto, center, bw)
    m = v.m
    # peak of the decimated FIR over its passband, then where the warped filter puts it
    lo, hi = (m * f for f in example_proto.passband)
    nu = _fine_peak(lambda w: fir_response(v.coeffs, w), lo, hi)
    (plo, phi), _ = v.mapped_edges()
    w_hat = _fine_peak(v.engine.response, plo, phi)
    step = 1 / 8191
    assert warp_map(v.alpha, math.pi * w_hat) / math.pi == pytest.approx(nu, abs=2 * step)
    assert abs(warp_map(v.alpha, math.pi * w_hat) / math.pi - m * 0.14) < m * 0.01


def test_warping_alone_changes_bandwidth(example_proto):
    base = VariableFilter.build(example_proto, 0.14, 0.02).measure().bandwidth_3db
    for target in (0.05, 0.25, 0.31):
        v = VariableFilter.build(example_proto, target, 0.02)
        assert v.m == 1 and abs(v.alpha) >= 0.2
        assert abs(v.measure().bandwidth_3db / base - 1) > 0.01
