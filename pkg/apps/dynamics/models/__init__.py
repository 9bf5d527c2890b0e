from apps.dynamics.models.algorithm_spec import AlgorithmSpec
from apps.dynamics.models.correlated_pair import CorrelatedPair
from apps.dynamics.models.geometry import ModelGeometry

__all__ = ["AlgorithmSpec", "CorrelatedPair", "ModelGeometry"]
