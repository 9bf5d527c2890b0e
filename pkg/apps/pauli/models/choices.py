from enum import IntEnum


# <<------------------------------------Pauli Choices---------------------------------------->>
class PauliCode(IntEnum):
    I = 0
    X = 1
    Y = 2
    Z = 3


# <<------------------------------------Frame Choices---------------------------------------->>
class Frame(IntEnum):
    X = 1
    Y = 2
    Z = 3


PAULI_LETTERS = "IXYZ"
FRAME_LETTERS = {1: "X", 2: "Y", 3: "Z"}
LETTER_TO_FRAME = {"X": 1, "Y": 2, "Z": 3}

# Single-site alphabet of B_6: letter = 2 * (frame - 1) + outcome
SHADOW_ALPHABET_SIZE = 6
