from dataclasses import dataclass


@dataclass(frozen=True)
class ModelGeometry:
    """
    Inputs of the Lipschitz formulas: register size n, locality d, degree cap,
    number of commuting blocks K and the commutator Lipschitz constant.
    """

    n: int
    locality: int | None = None
    degree_cap: int | None = None
    blocks: int | None = None
    commutator_lipschitz: float | None = None
