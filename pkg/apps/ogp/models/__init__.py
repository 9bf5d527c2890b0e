from apps.ogp.models.correlation_set import CorrelationSet
from apps.ogp.models.exponent_params import ExponentParams
from apps.ogp.models.interpolation_path import InterpolationPath

__all__ = ["CorrelationSet", "ExponentParams", "InterpolationPath"]
