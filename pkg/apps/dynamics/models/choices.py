from enum import Enum


# <<----Choices---->>
class AlgorithmVariant(str, Enum):
    TROTTER_ANNEALING = "trotter_annealing"
    PHASE_ESTIMATION = "phase_estimation"
    LINDBLADIAN = "lindbladian"


# <<----Choices---->>
class InitialState(str, Enum):
    # |+>^n is the top eigenstate of the transverse mixing field
    PLUS = "plus"
    ZERO = "zero"
    HAAR = "haar"
