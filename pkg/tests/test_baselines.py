import numpy as np
import pytest

from spectra_aug import baselines as bl
from spectra_aug.errors import DimensionMismatchError
from spectra_aug.fourier import decompose, fft2, fftshift, ifft2, recombine
from spectra_aug.rng import RngStream


@pytest.fixture
def img():
    return np.random.default_rng(0).random((16, 16, 3)) * 0.6 + 0.2


@pytest.fixture
def other():
    return np.random.default_rng(1).random((16, 16, 3)) * 0.6 + 0.2


def amps(image):
    return [decompose(fft2(image[:, :, c])).amplitude for c in range(image.shape[2])]


def test_aj_identity_and_linearity(img):
    assert np.max(np.abs(bl.amplitude_jitter(img, 0.0, RngStream()) - img)) <= 1e-5
    small = img * 0.4
    doubled = bl.jitter_spectra(small, 2.0)
    for c, ap in enumerate(doubled):
        np.testing.assert_allclose(ifft2(recombine(ap)), 2 * small[:, :, c], atol=1e-12)
    np.testing.assert_allclose(bl.amplitude_jitter(small, 0.3, RngStream(), jitter=2.0), 2 * small, atol=1e-12)


def test_aj_determinism(img):
    a = bl.amplitude_jitter(img, 0.5, RngStream(5, 1))
    assert np.array_equal(a, bl.amplitude_jitter(img, 0.5, RngStream(5, 1)))


def test_am_endpoints(img, other):
    cfg = bl.MixupConfig()
    assert np.max(np.abs(bl.amplitude_mixup(img, other, cfg, RngStream(), lam=1.0) - img)) <= 1e-5
    for lam in (0.0, 0.3, 0.9):
        assert np.max(np.abs(bl.amplitude_mixup(img, img, cfg, RngStream(), lam=lam) - img)) <= 1e-5
    src_phase = [decompose(fft2(img[:, :, c])).phase for c in range(3)]
    for c, ap in enumerate(bl.mixup_spectra(img, other, 0.0)):
        np.testing.assert_allclose(ap.amplitude, amps(other)[c], atol=1e-6)
        np.testing.assert_array_equal(ap.phase, src_phase[c])


def test_am_amplitude_between_inputs(img, other):
    a, b = amps(img), amps(other)
    for c, ap in enumerate(bl.mixup_spectra(img, other, 0.37)):
        lo, hi = np.minimum(a[c], b[c]), np.maximum(a[c], b[c])
        assert np.all(ap.amplitude >= lo - 1e-9) and np.all(ap.amplitude <= hi + 1e-9)


def test_am_lambda_drawn_in_range(img, other):
    cfg = bl.MixupConfig(0.6, 0.8)
    with pytest.raises(ValueError):
        bl.MixupConfig(0.9, 0.2)
    out = bl.amplitude_mixup(img, other, cfg, RngStream(1, 1))
    lam = RngStream(1, 1).uniform(0.6, 0.8)
    np.testing.assert_array_equal(out, bl.amplitude_mixup(img, other, cfg, RngStream(), lam=lam))


def test_mismatch_raises(img):
    with pytest.raises(DimensionMismatchError):
        bl.apr_swap(img, img[:8])
    with pytest.raises(DimensionMismatchError):
        bl.fda_swap(img, img[:, :8], bl.FdaConfig(0.1))
    with pytest.raises(DimensionMismatchError):
        bl.amplitude_mixup(img, img[:, :, :1], bl.MixupConfig(), RngStream())


def test_fda_endpoints(img, other):
    assert np.max(np.abs(bl.fda_swap(img, other, bl.FdaConfig(0.0)) - img)) <= 1e-5
    assert np.max(np.abs(bl.fda_swap(img, img, bl.FdaConfig(0.4)) - img)) <= 1e-5
    target = amps(other)
    for c, ap in enumerate(bl.fda_spectra(img, other, 1.0)):
        np.testing.assert_allclose(ap.amplitude, target[c], atol=1e-6)


@pytest.mark.parametrize("shape,fraction", [((16, 16), 0.25), ((15, 20), 0.3), ((9, 9), 0.5)])
def test_fda_changes_only_the_square(shape, fraction):
    rng = np.random.default_rng(3)
    a, b = rng.random(shape + (1,)), rng.random(shape + (1,))
    rows, cols = bl.fda_region(shape[0], shape[1], fraction)
    side = int(np.floor(fraction * min(shape)))
    assert rows.stop - rows.start == side == cols.stop - cols.start
    out = fftshift(bl.fda_spectra(a, b, fraction)[0].amplitude)
    src, trg = fftshift(amps(a)[0]), fftshift(amps(b)[0])
    inside = np.zeros(shape, bool)
    inside[rows, cols] = True
    assert inside[shape[0] // 2, shape[1] // 2]
    np.testing.assert_array_equal(out[~inside], src[~inside])
    np.testing.assert_array_equal(out[inside], trg[inside])


def test_apr_identity_and_involution(img, other):
    assert np.max(np.abs(bl.apr_swap(img, img) - img)) <= 1e-5
    # unclamped check of the involution: swap amplitudes twice at the spectrum level
    first = bl.apr_spectra(img, other)
    swapped = np.stack([ifft2(recombine(ap)) for ap in first], axis=-1)
    back = np.stack([ifft2(recombine(ap)) for ap in bl.apr_spectra(swapped, img)], axis=-1)
    assert np.max(np.abs(back - img)) <= 1e-5
    twice = bl.apr_swap(bl.apr_swap(img, other), img)
    assert twice.shape == img.shape


def test_apr_constant_donor_on_impulse():
    src = np.zeros((6, 6, 1))
    src[0, 0, 0] = 1.0
    donor = np.full((6, 6, 1), 0.5)
    out = bl.apr_swap(src, donor)
    np.testing.assert_allclose(out, 0.5, atol=1e-12)


def test_frequency_baselines_keep_phase(img, other):
    phase = [decompose(fft2(img[:, :, c])).phase for c in range(3)]
    for aps in (bl.jitter_spectra(img, 1.7), bl.mixup_spectra(img, other, 0.6), bl.fda_spectra(img, other, 0.5), bl.apr_spectra(img, other)):
        for c, ap in enumerate(aps):
            spec = recombine(ap).cells
            pos = ap.amplitude > 1e-9
            diff = np.angle(np.exp(1j * (np.angle(spec) - phase[c])))
            assert np.max(np.abs(diff[pos])) <= 1e-9


def test_pd_skip_all_is_identity(img):
    assert np.max(np.abs(bl.apply_photometric_plan(img, bl.PhotometricPlan()) - img)) <= 1e-5
    never = bl.PhotometricConfig(prob=0.0)
    assert np.max(np.abs(bl.photometric_distortion(img, RngStream(3, 3), never) - img)) <= 1e-5


def test_pd_brightness_only_shift(img):
    d = 0.1
    out = bl.apply_photometric_plan(img, bl.PhotometricPlan(brightness=d), clamp=False)
    np.testing.assert_allclose(out - img, d, atol=1e-15)


def test_pd_neutral_hsv_roundtrip(img):
    plan = bl.PhotometricPlan(saturation=1.0, hue_degrees=0.0)
    assert np.max(np.abs(bl.apply_photometric_plan(img, plan) - img)) <= 1 / 255


def test_pd_channel_swap_and_hue():
    rgb = np.zeros((1, 1, 3))
    rgb[0, 0] = [1.0, 0.0, 0.0]
    green = bl.apply_photometric_plan(rgb, bl.PhotometricPlan(hue_degrees=120.0))
    np.testing.assert_allclose(green[0, 0], [0, 1, 0], atol=1e-12)
    swapped = bl.apply_photometric_plan(rgb, bl.PhotometricPlan(channel_order=(2, 0, 1)))
    np.testing.assert_allclose(swapped[0, 0], [0, 1, 0])


def test_pd_determinism_and_range(img):
    a = bl.photometric_distortion(img, RngStream(8, 2))
    assert np.array_equal(a, bl.photometric_distortion(img, RngStream(8, 2)))
    assert a.min() >= 0 and a.max() <= 1


def test_pd_plan_ranges():
    cfg = bl.PhotometricConfig(prob=1.0)
    for i in range(50):
        p = bl.sample_photometric_plan(RngStream(0, i), cfg)
        assert abs(p.brightness) <= 32 / 255
        assert 0.5 <= p.contrast_first <= 1.5 and 0.5 <= p.contrast_last <= 1.5
        assert 0.5 <= p.saturation <= 1.5 and abs(p.hue_degrees) <= 18
        assert sorted(p.channel_order) == [0, 1, 2]


def test_pd_requires_three_channels():
    with pytest.raises(ValueError):
        bl.photometric_distortion(np.zeros((4, 4, 1)), RngStream())
