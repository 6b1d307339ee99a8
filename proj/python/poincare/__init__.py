"""Betti numbers and Poincare series of local Artinian algebras."""

from ._core import (
    Error,
    InputError,
    ResourceLimit,
    betti,
    expand,
    family,
    fit,
    golod,
    invariants,
    netclass,
    normalize,
    pipeline,
    run,
    transform_socle,
    transform_tate,
    verify,
    verify_family,
)

__all__ = [
    "Error",
    "InputError",
    "ResourceLimit",
    "betti",
    "expand",
    "family",
    "fit",
    "golod",
    "invariants",
    "netclass",
    "normalize",
    "pipeline",
    "run",
    "transform_socle",
    "transform_tate",
    "verify",
    "verify_family",
]
