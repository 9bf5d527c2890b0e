from enum import Enum


# <<------------------------------------Cost Choices---------------------------------------->>
class SiteCost(str, Enum):
    # 1 for any differing (frame, outcome) letter
    HAMMING6 = "hamming6"
    # single-qubit trace distance: 1 across outcomes, 1/sqrt(2) across frames
    EXACT_SITE_W1 = "exact_site_w1"
