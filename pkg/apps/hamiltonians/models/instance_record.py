from pydantic import BaseModel, Field

from apps.hamiltonians.models.model_spec import ModelSpec

INSTANCE_SCHEMA_VERSION = 1


class InstanceRecord(BaseModel):
    """
    Archival form of a DisorderInstance: run-length encoded mask, couplings as float.hex.
    """

    schema_version: int = Field(default=INSTANCE_SCHEMA_VERSION)
    spec: ModelSpec
    seed: int
    trial: int = 0
    mask_first: int = Field(..., ge=0, le=1, description="Value of the first mask bit")
    mask_runs: list[int] = Field(default_factory=list, description="Lengths of alternating runs")
    couplings: list[str] = Field(default_factory=list, description="float.hex strings")
