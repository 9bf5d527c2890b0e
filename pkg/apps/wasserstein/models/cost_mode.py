from pydantic import BaseModel, ConfigDict, Field

from apps.wasserstein.models.choices import SiteCost


class CostMode(BaseModel):
    """
    Per-site cost and the order p of the distance (per-site costs enter as c^(1/p)).
    """

    model_config = ConfigDict(frozen=True)

    kind: SiteCost
    order: float = Field(default=1.0, ge=1.0)

    def tag(self) -> str:
        return f"{self.kind.value}/p={self.order:g}"
