from enum import Enum


# <<------------------------------------Estimator Choices---------------------------------------->>
class EstimatorVariant(str, Enum):
    PAULI_UNIFORM = "pauli_uniform"
    DERANDOMIZED = "derandomized"


# <<------------------------------------Shadow Norm Choices---------------------------------------->>
class ShadowNormMethod(str, Enum):
    EXACT = "exact"
    BASIS_SUP_BOUND = "basis_sup_bound"


# <<------------------------------------State Source Choices---------------------------------------->>
class StateSource(str, Enum):
    HAAR = "haar"
    GROUND_STATE = "ground_state"
    PRODUCT = "product"
