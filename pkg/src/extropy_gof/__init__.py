"""Exponentiality testing with the extropy of upper k-record values."""

from extropy_gof.distributions import Exponential, Uniform, Weibull
from extropy_gof.errors import (
    DegenerateSampleError,
    DomainError,
    ExtropyError,
    IngestionError,
    QuadratureError,
    SimulationError,
    ValidationError,
)
from extropy_gof.estimators import (
    DeltaStatistic,
    SortedSample,
    c_coefficients,
    delta22_fused,
    delta_estimate,
    extropy_estimate,
    record_extropy_estimate,
    sort_sample,
    spacing,
)
from extropy_gof.oracles import (
    RecordSpec,
    coefficient,
    cre_numeric,
    cre_upper_record_exp,
    delta_true,
    extropy_exponential,
    extropy_lower_record_exp,
    extropy_numeric,
    extropy_upper_record_exp,
    record_cdf,
    record_pdf,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateSampleError",
    "DeltaStatistic",
    "DomainError",
    "Exponential",
    "ExtropyError",
    "IngestionError",
    "QuadratureError",
    "RecordSpec",
    "SimulationError",
    "SortedSample",
    "Uniform",
    "ValidationError",
    "Weibull",
    "c_coefficients",
    "coefficient",
    "cre_numeric",
    "cre_upper_record_exp",
    "delta22_fused",
    "delta_estimate",
    "delta_true",
    "extropy_estimate",
    "extropy_exponential",
    "extropy_lower_record_exp",
    "extropy_numeric",
    "extropy_upper_record_exp",
    "record_cdf",
    "record_extropy_estimate",
    "record_pdf",
    "sort_sample",
    "spacing",
]
