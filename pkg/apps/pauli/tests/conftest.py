from apps.pauli.models import PauliString, ShadowState


def random_pauli(rng, n: int) -> PauliString:
    return PauliString.from_codes(rng.integers(0, 4, size=n))


def random_shadow_state(rng, n: int) -> ShadowState:
    return ShadowState(frames=tuple(rng.integers(1, 4, size=n)), outcomes=tuple(rng.integers(0, 2, size=n)))
