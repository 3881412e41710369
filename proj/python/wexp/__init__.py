from ._wexp import (
    ConfigError,
    InvariantViolation,
    exp_action,
    gr_window_size,
    hecke_mul,
    length,
    reduced_word,
    root_datum,
    spherical_mul,
    structure_constants,
)

__all__ = [
    "ConfigError",
    "InvariantViolation",
    "exp_action",
    "gr_window_size",
    "hecke_mul",
    "length",
    "reduced_word",
    "root_datum",
    "spherical_mul",
    "structure_constants",
]
