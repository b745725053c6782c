"""Billiard knots in cylinders, flat solid tori and cubes."""

from ._core import (
    ConsistencyError,
    DegenerateProjectionError,
    DomainError,
    NoValidPhaseError,
    ParameterError,
    SingularPhaseError,
    UnsupportedLinkError,
    __version__,
    alexander,
    classify_stability,
    decompose,
    default_cylinder_beta,
    deformation_csv,
    diagram,
    invariants,
    invariants_of,
    perfect_square_root,
    sawtooth,
    sawtooth_float,
    x_l,
)

__all__ = [
    "ConsistencyError",
    "DegenerateProjectionError",
    "DomainError",
    "NoValidPhaseError",
    "ParameterError",
    "SingularPhaseError",
    "UnsupportedLinkError",
    "__version__",
    "alexander",
    "classify_stability",
    "decompose",
    "default_cylinder_beta",
    "deformation_csv",
    "diagram",
    "invariants",
    "invariants_of",
    "perfect_square_root",
    "sawtooth",
    "sawtooth_float",
    "x_l",
]
