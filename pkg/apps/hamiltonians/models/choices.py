from enum import Enum


# <<------------------------------------Model Choices---------------------------------------->>
class ModelVariant(str, Enum):
    K_SPIN = "k_spin"
    PK_SPIN_GLASS = "pk_spin_glass"
    GENERIC = "generic"


# <<------------------------------------Eigen Choices---------------------------------------->>
class EigenPath(str, Enum):
    DENSE = "dense"
    SPARSE = "sparse"
