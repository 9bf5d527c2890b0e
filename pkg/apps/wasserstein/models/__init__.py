from apps.wasserstein.models.cost_mode import CostMode
from apps.wasserstein.models.mixture import DiagonalMixture

__all__ = ["CostMode", "DiagonalMixture"]
