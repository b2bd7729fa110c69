import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from warpvdf.cdm import check_m, decimate_coefficients, predicted_stretch, select_every
from warpvdf.errors import NyquistError
from warpvdf.vdf import VariableFilter
from warpvdf.warped import fir_response

from .oracles import aliasing_sum


def test_m1_is_identity(example_proto):
    out = decimate_coefficients(example_proto, 1)
    assert out.tobytes() == example_proto.coeffs.tobytes()


def test_selection_indices():
    assert select_every([1, 2, 3, 4, 5, 6, 7], 2).tolist() == [1, 3, 5, 7]
    assert select_every(np.arange(10), 3).tolist() == [0, 3, 6, 9]


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_length(example_proto, m):
    assert decimate_coefficients(example_proto, m).size == example_proto.order // m + 1


def test_gain_restored(example_proto):
    for m in range(2, 6):
        taps = decimate_coefficients(example_proto, m)
        peak = abs(fir_response(taps, np.pi * m * 0.14))
        assert 20 * np.log10(peak) == pytest.approx(0.0, abs=1e-3)


def test_nyquist_guard(example_proto):
    with pytest.raises(NyquistError):
        decimate_coefficients(example_proto, 6)
    with pytest.raises(NyquistError):
        check_m(example_proto, 0)
    with pytest.raises(NyquistError):
        check_m(example_proto, 5, m_max=4)


@settings(deadline=None)
@given(
    arrays(np.float64, st.integers(2, 64), elements=st.floats(-1, 1)),
    st.integers(2, 5),
)
def test_aliasing_identity(coeffs, m):
    w = np.linspace(0, np.pi, 512)
    got = fir_response(select_every(coeffs, m), w)
    assert np.max(np.abs(got - aliasing_sum(coeffs, m, w))) < 1e-9


def test_predicted_stretch():
    assert predicted_stretch(0.14, 0.02, 1) == (0.14, 0.02)
    assert predicted_stretch(0.14, 0.02, 2) == pytest.approx((0.28, 0.04))
    assert predicted_stretch(0.14, 0.02, 5) == pytest.approx((0.70, 0.10))
    with pytest.raises(NyquistError):
        predicted_stretch(0.3, 0.02, 4)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_measured_stretch(example_proto, m):
    meas = VariableFilter.from_params(example_proto, 0.0, m).measure()
    center, bw = predicted_stretch(0.14, 0.02, m)
    assert meas.center == pytest.approx(center, abs=0.005)
    assert meas.bandwidth_3db == pytest.approx(bw, rel=0.15)
