"""Structured-light phase-space toolkit.

Laguerre-Gauss mode spheres, their SU(2) rotations, closed-form Wigner
functions, mode overlaps, and angular-momentum accounting. The heavy lifting
lives in the compiled extension; this package re-exports its public surface.
"""

from ._core import (
    AmplitudeSet,
    BeamFrame,
    ModeIndex,
    PolarizationVector,
    SphereState,
    build_generators,
    dispersion_k0,
    expectation_L,
    hg_position,
    laguerre,
    lg_momentum,
    lg_position,
    oam_per_energy,
    orbital_z,
    overlap,
    overlap_tau,
    paraxial_energy,
    polarization,
    quadratic_forms,
    rotate,
    rotation_matrix,
    spin_z,
    suite_names,
    synthesize_field,
    transfer_matrix,
    verify_report,
    wigner_closed,
    wigner_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "AmplitudeSet",
    "BeamFrame",
    "ModeIndex",
    "PolarizationVector",
    "SphereState",
    "build_generators",
    "dispersion_k0",
    "expectation_L",
    "hg_position",
    "laguerre",
    "lg_momentum",
    "lg_position",
    "oam_per_energy",
    "orbital_z",
    "overlap",
    "overlap_tau",
    "paraxial_energy",
    "polarization",
    "quadratic_forms",
    "rotate",
    "rotation_matrix",
    "spin_z",
    "suite_names",
    "synthesize_field",
    "transfer_matrix",
    "verify_report",
    "wigner_closed",
    "wigner_oracle",
]
