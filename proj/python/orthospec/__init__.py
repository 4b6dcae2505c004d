"""Orthospectrum identity checks for surface group representations."""

from ._core import (
    ConfigError,
    DegenerateQuadruple,
    InvariantViolation,
    LoxodromyError,
    Representation,
    basmajian_term,
    explicit_representation,
    from_config,
    fuchsian_one_holed_torus,
    fuchsian_pants,
    hilbert_distance_disk,
    irreducible_embed,
    n3_closed_form,
    run,
    sym_power,
)

__all__ = [
    "ConfigError",
    "DegenerateQuadruple",
    "InvariantViolation",
    "LoxodromyError",
    "Representation",
    "basmajian_term",
    "explicit_representation",
    "from_config",
    "fuchsian_one_holed_torus",
    "fuchsian_pants",
    "hilbert_distance_disk",
    "irreducible_embed",
    "n3_closed_form",
    "run",
    "sym_power",
]
