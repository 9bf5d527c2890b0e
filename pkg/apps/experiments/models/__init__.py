from apps.experiments.models.experiment_config import (
    CertifyOptions,
    CorollaryOptions,
    DistanceOptions,
    EstimateOptions,
    ExperimentConfig,
    ExponentOptions,
    GraphOptions,
    SampleOptions,
    ScanOptions,
    StabilityOptions,
)

__all__ = [
    "CertifyOptions",
    "CorollaryOptions",
    "DistanceOptions",
    "EstimateOptions",
    "ExperimentConfig",
    "ExponentOptions",
    "GraphOptions",
    "SampleOptions",
    "ScanOptions",
    "StabilityOptions",
]
