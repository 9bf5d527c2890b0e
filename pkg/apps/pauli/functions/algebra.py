from _library.error_codes import LENGTH_MISMATCH_ERROR
from _library.exceptions import ShapeMismatchError
from apps.pauli.models import PauliString, ShadowState


def _check_sizes(left: int, right: int):
    if left != right:
        raise ShapeMismatchError(LENGTH_MISMATCH_ERROR, left=left, right=right)


def support(pauli: PauliString) -> frozenset[int]:
    return frozenset(site for site, code in enumerate(pauli.codes) if code)


def locality(pauli: PauliString) -> int:
    return pauli.weight


def anticommuting_sites(first: PauliString, second: PauliString) -> int:
    """
    Number of sites where both words act nontrivially with different Paulis.
    """
    _check_sizes(first.n, second.n)
    return ((first.x_mask & second.z_mask) ^ (first.z_mask & second.x_mask)).bit_count()


def commutes(first: PauliString, second: PauliString) -> bool:
    return anticommuting_sites(first, second) % 2 == 0


def expectation(state: ShadowState, pauli: PauliString) -> int:
    """
    <b;s| P |b;s> in {-1, 0, +1}.
    """
    _check_sizes(state.n, pauli.n)
    value = 1
    for site, code in enumerate(pauli.codes):
        if not code:
            continue
        if state.frames[site] != code:
            return 0
        if state.outcomes[site]:
            value = -value
    return value
