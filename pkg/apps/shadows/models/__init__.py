from apps.shadows.models.estimator_spec import EstimatorSpec

__all__ = ["EstimatorSpec"]
