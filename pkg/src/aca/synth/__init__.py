from .attributes import (
    AttributeProfile,
    CalibrationError,
    build_attribute_profile,
    generate_attributes,
    measure_profile_accuracy,
)
from .bundle import read_attribute_bits, write_bundle
from .labels import (
    ReduceReport,
    SwapExhausted,
    laplacian_bisection,
    reduce_homophily,
    swap_to_reduce,
)
from .models import SynthConfig, generate, sample_model

__all__ = [
    "AttributeProfile",
    "CalibrationError",
    "ReduceReport",
    "SwapExhausted",
    "SynthConfig",
    "build_attribute_profile",
    "generate",
    "generate_attributes",
    "laplacian_bisection",
    "measure_profile_accuracy",
    "read_attribute_bits",
    "reduce_homophily",
    "sample_model",
    "swap_to_reduce",
    "write_bundle",
]
