from enum import Enum


# <<----Choices---->>
class CorollaryVariant(str, Enum):
    # (P,k)-spin glass, Q = ceil(2 d_max^2 / eps^2)
    PK = "pk"
    # (P,k)-spin glass with |P| polynomial in k, Q = ceil(2 d_max^2 k^0.999 ln(k)^2 / eps^2)
    PK_SPARSE = "pk_sparse"
    # quantum k-spin model, chaos property only, Q = 1
    KSPIN = "kspin"


# <<----Choices---->>
class InequalityName(str, Enum):
    DEGREE = "degree"
    KAPPA = "kappa"
    DEPLETION = "depletion"
    REPLICA_BUDGET = "replica_budget"
    STABILITY = "stability"
    PROBABILITY = "probability_log2"
    APPROXIMATION = "approximation"
