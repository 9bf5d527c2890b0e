from enum import Enum


# <<----Choices---->>
class CommandName(str, Enum):
    SAMPLE = "sample"
    ESTIMATE = "estimate"
    DISTANCE = "distance"
    STABILITY = "stability"
    OGP_SCAN = "ogp-scan"
    OVERLAP_GRAPH = "overlap-graph"
    EXPONENT = "exponent"
    CERTIFY = "certify"


# <<----Choices---->>
class ExponentSweep(str, Enum):
    # explicit (m, eta) grid around the configured parameter block
    GRID = "grid"
    # random admissible tuples of the k-spin block
    KSPIN_SAMPLES = "kspin_samples"
    # random admissible tuples of the (P,k) block
    PK_SAMPLES = "pk_samples"
