"""Calibrated binary node attributes.

Each class draws 100 attributes from an exponentially decaying probability
curve centered on a class-specific peak; shifting class 1's peak controls
how separable the classes are. The shift is calibrated so a generalized
likelihood ratio test (independent per-attribute Bernoulli parameters,
estimated from 200 cases per class) hits a requested accuracy.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

NUM_ATTRS = 100
PEAK_PROB = 0.8
DECAY = 0.065
MAX_SHIFT = 50
TOLERANCE = 0.05
TRAIN_CASES = 200
EVAL_CASES = 2000  # per class


class CalibrationError(RuntimeError):
    pass


@dataclass
class AttributeProfile:
    base_probs: np.ndarray  # probability curve for class 0, peak at index 0
    shift: int              # circular offset of class 1's peak
    measured_accuracy: float
    target_accuracy: float

    def class_probs(self, label: int) -> np.ndarray:
        return np.roll(self.base_probs, self.shift) if label == 1 else self.base_probs


def base_curve(peak: float = PEAK_PROB, decay: float = DECAY,
               num_attrs: int = NUM_ATTRS) -> np.ndarray:
    """Probabilities decaying exponentially with circular distance from index 0."""
    idx = np.arange(num_attrs)
    dist = np.minimum(idx, num_attrs - idx)
    return peak * np.exp(-decay * dist)


def _glrt_accuracy(p0: np.ndarray, p1: np.ndarray, rng: np.random.Generator) -> float:
    train0 = rng.random((TRAIN_CASES, len(p0))) < p0
    train1 = rng.random((TRAIN_CASES, len(p1))) < p1
    est0 = (train0.sum(axis=0) + 1.0) / (TRAIN_CASES + 2.0)
    est1 = (train1.sum(axis=0) + 1.0) / (TRAIN_CASES + 2.0)
    w_on = np.log(est1) - np.log(est0)
    w_off = np.log1p(-est1) - np.log1p(-est0)
    correct = 0
    for truth, p in ((0, p0), (1, p1)):
        cases = rng.random((EVAL_CASES, len(p))) < p
        llr = cases @ w_on + (~cases) @ w_off
        correct += int(((llr > 0).astype(int) == truth).sum())
    return correct / (2 * EVAL_CASES)


def measure_profile_accuracy(profile: AttributeProfile, rng: np.random.Generator) -> float:
    """Re-estimate the GLRT accuracy of a profile on fresh simulated cases."""
    return _glrt_accuracy(profile.class_probs(0), profile.class_probs(1), rng)


def build_attribute_profile(target_accuracy: float, rng: np.random.Generator,
                            peak: float = PEAK_PROB, decay: float = DECAY) -> AttributeProfile:
    """Scan circular shifts and keep the one whose GLRT accuracy is closest.

    Shift 0 gives both classes the same curve, pinning accuracy near 0.5;
    larger shifts separate the classes smoothly. Raises if no shift lands
    within +-0.05 of the target.
    """
    if not 0.0 < target_accuracy < 1.0:
        raise ValueError("target accuracy must be in (0, 1)")
    base = base_curve(peak=peak, decay=decay)
    seeds = rng.integers(0, 2**63 - 1, size=MAX_SHIFT + 1)
    best_shift, best_acc = 0, None
    for s in range(MAX_SHIFT + 1):
        acc = _glrt_accuracy(base, np.roll(base, s), np.random.default_rng(seeds[s]))
        if best_acc is None or abs(acc - target_accuracy) < abs(best_acc - target_accuracy):
            best_shift, best_acc = s, acc
    assert best_acc is not None
    if abs(best_acc - target_accuracy) > TOLERANCE:
        raise CalibrationError(
            f"no shift within {TOLERANCE} of target {target_accuracy}; "
            f"best was shift={best_shift} with accuracy {best_acc:.3f}")
    return AttributeProfile(base_probs=base, shift=best_shift,
                            measured_accuracy=best_acc, target_accuracy=target_accuracy)


def generate_attributes(labels, profile: AttributeProfile,
                        rng: np.random.Generator) -> np.ndarray:
    """Per-node binary attribute rows plus a one-hot node-index block."""
    lab = np.asarray(labels, dtype=np.int64)
    n = len(lab)
    probs = np.where(lab[:, None] == 1, profile.class_probs(1)[None, :],
                     profile.class_probs(0)[None, :])
    generated = (rng.random((n, probs.shape[1])) < probs).astype(np.uint8)
    one_hot = np.eye(n, dtype=np.uint8)
    return np.concatenate([generated, one_hot], axis=1)
