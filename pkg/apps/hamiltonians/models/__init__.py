from apps.hamiltonians.models.instance import DisorderInstance
from apps.hamiltonians.models.instance_record import INSTANCE_SCHEMA_VERSION, InstanceRecord
from apps.hamiltonians.models.model_spec import ModelSpec

__all__ = ["DisorderInstance", "INSTANCE_SCHEMA_VERSION", "InstanceRecord", "ModelSpec"]
