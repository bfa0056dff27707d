"""Exact counting, enumeration and bijections for corridor lattice paths."""

from .bijection import BijectionCase, NotApplicable, Variant, alt_flip_reverse, alt_full_reverse, correspond
from .closed_form import cf_count_endpoint, cf_count_window, dyck_prefix_count, grossman_dyck_count, mohanty_count
from .core import (
    DOWN,
    UP,
    EnumerationTooLarge,
    Instance,
    Path,
    Validity,
    Window,
    dp_count_endpoint,
    dp_count_vector,
    dp_count_window,
    enumerate_paths,
    validate_instance,
)
from .ta import DecodeError, NegativeWindowError, TAWord, ta_decode, ta_encode
from .transfer import mat_pow, step_matrix, tm_count_vector, tm_count_window
from .verify import SweepReport, check_bijections, check_engines, check_identities

__version__ = "0.1.0"

__all__ = [
    "BijectionCase", "DOWN", "DecodeError", "EnumerationTooLarge", "Instance", "NegativeWindowError",
    "NotApplicable", "Path", "SweepReport", "TAWord", "UP", "Validity", "Variant", "Window",
    "alt_flip_reverse", "alt_full_reverse", "cf_count_endpoint", "cf_count_window", "check_bijections",
    "check_engines", "check_identities", "correspond", "dp_count_endpoint", "dp_count_vector",
    "dp_count_window", "dyck_prefix_count", "enumerate_paths", "grossman_dyck_count", "mat_pow",
    "mohanty_count", "step_matrix", "ta_decode", "ta_encode", "tm_count_vector", "tm_count_window",
    "validate_instance",
]
