"""Multifractal spectrum and multifractal dimension of Dempster-Shafer mass functions."""

from __future__ import annotations

from .core import (
    FocalElement,
    FrameOfDiscernment,
    MassFunction,
    ProfileBand,
    cardinality_profile,
    is_bayesian,
    max_deng_mass,
    max_deng_profile,
    uniform_powerset_mass,
    uniform_powerset_profile,
    uniform_singleton_mass,
    uniform_singleton_profile,
    vacuous_mass,
    vacuous_profile,
    validate_mass_function,
)
from .entropy import (
    EntropyOrder,
    ProbabilityDistribution,
    deng_entropy,
    deng_entropy_from_profile,
    max_deng_entropy_value,
    renyi_entropy,
    renyi_information_dimension,
    shannon_entropy,
)
from .multifractal import (
    DimensionResult,
    QuadraticEnvelope,
    Spectrum,
    SpectrumPoint,
    asymptotic_anchor_points,
    dimension_from_profile,
    dimension_sweep,
    dimension_sweep_from_profile,
    multifractal_dimension,
    quadratic_envelope,
    spectrum,
    spectrum_from_profile,
    y_coordinate,
)
from .oracle import ExactMass, oracle_deng_entropy, oracle_dimension

__version__ = "0.1.0"

__all__ = [
    "EntropyOrder",
    "ExactMass",
    "DimensionResult",
    "FocalElement",
    "FrameOfDiscernment",
    "MassFunction",
    "ProbabilityDistribution",
    "ProfileBand",
    "QuadraticEnvelope",
    "Spectrum",
    "SpectrumPoint",
    "asymptotic_anchor_points",
    "cardinality_profile",
    "deng_entropy",
    "deng_entropy_from_profile",
    "dimension_from_profile",
    "dimension_sweep",
    "dimension_sweep_from_profile",
    "is_bayesian",
    "max_deng_entropy_value",
    "max_deng_mass",
    "max_deng_profile",
    "multifractal_dimension",
    "oracle_deng_entropy",
    "oracle_dimension",
    "quadratic_envelope",
    "renyi_entropy",
    "renyi_information_dimension",
    "shannon_entropy",
    "spectrum",
    "spectrum_from_profile",
    "uniform_powerset_mass",
    "uniform_powerset_profile",
    "uniform_singleton_mass",
    "uniform_singleton_profile",
    "vacuous_mass",
    "vacuous_profile",
    "validate_mass_function",
    "y_coordinate",
]
