from __future__ import annotations

import numpy as np
import pytest

from aca.synth import (
    AttributeProfile,
    build_attribute_profile,
    generate_attributes,
    measure_profile_accuracy,
)
from aca.synth.attributes import base_curve
from aca.synth.bundle import read_attribute_bits, write_attribute_bits
from oracles import glrt_accuracy


def test_base_curve_shape():
    base = base_curve()
    assert base.shape == (100,)
    assert base[0] == pytest.approx(0.8)
    # decays with circular distance from the peak
    assert np.all(np.diff(base[:51]) < 0)
    assert np.all(np.diff(base[50:]) > 0)
    assert 25 <= (base > 0.3).sum() <= 35


def test_target_half_picks_zero_shift():
    profile = build_attribute_profile(0.5, np.random.default_rng(1))
    assert profile.shift == 0
    assert 0.45 <= profile.measured_accuracy <= 0.55


def test_target_ninety_calibrates():
    profile = build_attribute_profile(0.9, np.random.default_rng(2))
    acc = glrt_accuracy(profile.class_probs(0), profile.class_probs(1),
                        np.random.default_rng(99))
    assert 0.85 <= acc <= 0.95


def test_target_seventy_beats_zero_shift():
    profile = build_attribute_profile(0.7, np.random.default_rng(3))
    zero = AttributeProfile(profile.base_probs, 0, 0.5, 0.5)
    rng = np.random.default_rng(4)
    assert measure_profile_accuracy(profile, rng) >= measure_profile_accuracy(zero, rng)


def test_unreachable_target_errors():
    from aca.synth import CalibrationError
    with pytest.raises(CalibrationError, match="best"):
        # with a flat curve no shift separates the classes
        build_attribute_profile(0.99, np.random.default_rng(5), peak=0.5, decay=0.0)


def test_generate_attributes_one_hot_block():
    labels = np.array([0, 1, 0, 1, 1])
    profile = AttributeProfile(base_curve(), 3, 0.7, 0.7)
    attrs = generate_attributes(labels, profile, np.random.default_rng(6))
    assert attrs.shape == (5, 105)
    one_hot = attrs[:, 100:]
    assert np.array_equal(one_hot, np.eye(5, dtype=np.uint8))


def test_generate_attributes_degenerate_probabilities():
    labels = np.array([0, 1, 0])
    profile = AttributeProfile(np.zeros(100), 0, 0.5, 0.5)
    attrs = generate_attributes(labels, profile, np.random.default_rng(7))
    assert attrs[:, :100].sum() == 0
    assert np.array_equal(attrs[:, 100:], np.eye(3, dtype=np.uint8))


def test_zero_shift_class_frequencies_close():
    n = 4000
    labels = (np.arange(n) % 2).astype(np.int64)
    profile = AttributeProfile(base_curve(), 0, 0.5, 0.5)
    attrs = generate_attributes(labels, profile, np.random.default_rng(8))[:, :100]
    f0 = attrs[labels == 0].mean(axis=0)
    f1 = attrs[labels == 1].mean(axis=0)
    sigma = np.sqrt(profile.base_probs * (1 - profile.base_probs) * (1 / 2000 + 1 / 2000))
    assert np.all(np.abs(f0 - f1) < 5 * np.maximum(sigma, 1e-3))


def test_attr_bits_roundtrip(tmp_path):
    rng = np.random.default_rng(9)
    mat = (rng.random((13, 37)) < 0.4).astype(np.uint8)
    path = tmp_path / "attrs.bin"
    write_attribute_bits(path, mat)
    back = read_attribute_bits(path)
    assert np.array_equal(mat, back)
    raw = path.read_bytes()
    assert raw[:4] == b"ATTR"
