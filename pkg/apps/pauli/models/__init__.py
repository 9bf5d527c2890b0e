from apps.pauli.models.pauli_string import PauliString
from apps.pauli.models.shadow_state import ShadowState

__all__ = ["PauliString", "ShadowState"]
