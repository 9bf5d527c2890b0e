import logging
from typing import NamedTuple

import numpy as np
from scipy import sparse
from scipy.sparse.linalg import expm_multiply

from _library.error_codes import STATEVECTOR_CAP_ERROR
from _library.exceptions import CapExceededError
from _library.functions.rng import make_generator
from apps.dynamics.functions.blocks import partition_commuting_blocks
from apps.dynamics.models import AlgorithmSpec
from apps.dynamics.models.choices import AlgorithmVariant, InitialState
from apps.hamiltonians.functions.spectrum import sparse_hamiltonian
from apps.hamiltonians.functions.terms import model_terms
from apps.hamiltonians.models import DisorderInstance
from apps.pauli.functions.matrices import apply_pauli, sparse_matrix
from apps.pauli.models import PauliString
from apps.shadows.functions.quality import haar_state
from config import settings

logger = logging.getLogger(__name__)


class PhaseEstimationResult(NamedTuple):
    state: np.ndarray
    outcome: int
    probabilities: np.ndarray


class LindbladianResult(NamedTuple):
    # exact reduced density matrix, or None past the dense cap
    density: np.ndarray | None
    joint_state: np.ndarray


def check_statevector_cap(qubits: int):
    if qubits > settings.STATEVECTOR_CAP:
        raise CapExceededError(STATEVECTOR_CAP_ERROR, qubits=qubits, cap=settings.STATEVECTOR_CAP)


def rotate(state: np.ndarray, word: PauliString, angle: float) -> np.ndarray:
    """
    exp(-i angle P) state = cos(angle) state - i sin(angle) P state.
    """
    if angle == 0.0:
        return state
    return np.cos(angle) * state - 1j * np.sin(angle) * apply_pauli(word, state)


def initial_state(recipe: InitialState, n: int, seed: int = 0) -> np.ndarray:
    dim = 1 << n
    if recipe == InitialState.PLUS:
        return np.full(dim, dim**-0.5, dtype=complex)
    if recipe == InitialState.ZERO:
        state = np.zeros(dim, dtype=complex)
        state[0] = 1.0
        return state
    return haar_state(n, make_generator(seed, 0, "initial_state"))


def _register_word(text: str, offset: int, total: int) -> PauliString:
    return PauliString.from_text("I" * offset + text + "I" * (total - offset - len(text)))


def _sum_matrix(words: list[PauliString], dim: int) -> sparse.csr_matrix:
    matrix = sparse.csr_matrix((dim, dim), dtype=complex)
    for word in words:
        matrix = matrix + sparse_matrix(word)
    return matrix


# -------------------------
# Cost layers
# -------------------------
def apply_cost_layer(
    state: np.ndarray, instance: DisorderInstance, blocks: tuple[tuple[int, ...], ...], gammas: tuple[float, ...]
) -> np.ndarray:
    """
    prod_{i=K..1} exp(-i gamma_i H_C^(i) / sqrt(n)): block 1 acts first.

    Within a block every word commutes, so each realized term is one Pauli rotation.
    """
    words = model_terms(instance.spec)
    coefficients = instance.coefficients
    for block, gamma in zip(blocks, gammas, strict=True):
        angle = gamma / np.sqrt(instance.n)
        for index in block:
            if instance.mask[index] and coefficients[index] != 0.0:
                state = rotate(state, words[index], angle * coefficients[index])
    return state


def apply_mixing_layer(state: np.ndarray, n: int, beta: float, fields: tuple[float, ...] | None) -> np.ndarray:
    fields = (1.0,) * n if fields is None else fields
    for site, field in enumerate(fields):
        state = rotate(state, PauliString.on_sites(n, (site,), (1,)), beta * field)
    return state


# -------------------------
# Algorithms
# -------------------------
def run_trotter_annealing(instance: DisorderInstance, spec: AlgorithmSpec, seed: int = 0, initial=None) -> np.ndarray:
    """
    prod_{l=p..1} exp(-i beta_l H_M) prod_{i=K..1} exp(-i gamma_l^(i) H_C^(i) / sqrt(n)) |psi_0>.
    """
    check_statevector_cap(instance.n)
    blocks = partition_commuting_blocks(instance.spec)
    state = initial_state(spec.initial_state, instance.n, seed) if initial is None else np.asarray(initial, dtype=complex)

    for layer in range(spec.depth):
        state = apply_cost_layer(state, instance, blocks, spec.layer_gammas(layer, len(blocks)))
        state = apply_mixing_layer(state, instance.n, spec.betas[layer], spec.mixing_fields)
    return state


def phase_estimation_branches(instance: DisorderInstance, spec: AlgorithmSpec, seed: int = 0, initial=None) -> np.ndarray:
    """
    (2^A, 2^n) unnormalized system branches, one per Fourier-basis ancilla outcome y.

    Ancilla value a evolves the system by exp(-i t a H_C); outcome y collects
    2^-A sum_a exp(2 pi i a y / 2^A) exp(-i t a H_C) |rho_0>, so an eigenvalue
    lambda peaks at y / 2^A = t lambda / (2 pi) mod 1.
    """
    check_statevector_cap(instance.n + spec.ancillas)
    state = initial_state(spec.initial_state, instance.n, seed) if initial is None else np.asarray(initial, dtype=complex)
    values = 1 << spec.ancillas
    if spec.ancillas == 0:
        return state[None, :]

    hamiltonian = sparse_hamiltonian(instance)
    evolved = expm_multiply(-1j * spec.time * hamiltonian, state, start=0, stop=values - 1, num=values, endpoint=True)
    # ifft carries the 1/2^A; the |+>^A amplitudes and the Fourier basis each add 2^(-A/2)
    return np.fft.ifft(evolved, axis=0)


def run_phase_estimation(
    instance: DisorderInstance, spec: AlgorithmSpec, seed: int = 0, initial=None
) -> PhaseEstimationResult:
    """
    Sample the Fourier-basis ancilla outcome and return the collapsed system state.
    """
    branches = phase_estimation_branches(instance, spec, seed, initial)
    probabilities = np.einsum("yi,yi->y", branches.conj(), branches).real
    probabilities = probabilities / probabilities.sum()

    rng = make_generator(seed, 0, "phase_estimation")
    outcome = int(rng.choice(probabilities.size, p=probabilities))
    state = branches[outcome] / np.linalg.norm(branches[outcome])
    return PhaseEstimationResult(state=state, outcome=outcome, probabilities=probabilities)


def lindbladian_joint_state(instance: DisorderInstance, spec: AlgorithmSpec, seed: int = 0, initial=None) -> np.ndarray:
    """
    |psi_p> on system (leading) plus bath qubits:
    prod_{l=p..1} exp(-i beta_l H_B) exp(-i delta_l H_I) prod_{i=K..1} exp(-i gamma_l^(i) H_C^(i) / sqrt(n)) |psi_0>.
    """
    n, bath = instance.n, spec.bath_qubits
    total = n + bath
    check_statevector_cap(total)
    dim = 1 << total

    system = initial_state(spec.initial_state, n, seed) if initial is None else np.asarray(initial, dtype=complex)
    bath_zero = np.zeros(1 << bath, dtype=complex)
    bath_zero[0] = 1.0
    state = np.kron(system, bath_zero)

    bath_texts = spec.bath_terms or tuple("I" * j + "Z" + "I" * (bath - j - 1) for j in range(bath))
    bath_matrix = _sum_matrix([_register_word(text, n, total) for text in bath_texts], dim)
    if spec.interaction_terms is None:
        couplings = [PauliString.on_sites(total, (i, n + i % bath), (1, 1)) for i in range(n)]
    else:
        couplings = [PauliString.from_text(text) for text in spec.interaction_terms]
    interaction_matrix = _sum_matrix(couplings, dim)
    blocks = partition_commuting_blocks(instance.spec)

    for layer in range(spec.depth):
        state = apply_cost_layer(state, instance, blocks, spec.layer_gammas(layer, len(blocks)))
        if spec.deltas[layer]:
            state = expm_multiply(-1j * spec.deltas[layer] * interaction_matrix, state)
        if spec.betas[layer]:
            state = expm_multiply(-1j * spec.betas[layer] * bath_matrix, state)
    return state


def trace_bath(joint_state: np.ndarray, n: int) -> np.ndarray:
    amplitudes = joint_state.reshape(1 << n, -1)
    return amplitudes @ amplitudes.conj().T


def run_lindbladian(instance: DisorderInstance, spec: AlgorithmSpec, seed: int = 0, initial=None) -> LindbladianResult:
    """
    Bath-traced output. The density matrix is exact up to n + N = DENSE_CAP;
    past it only the joint state is returned and callers sample the reduced
    state from it.
    """
    joint = lindbladian_joint_state(instance, spec, seed, initial)
    if instance.n + spec.bath_qubits > settings.DENSE_CAP:
        logger.warning(
            f"WARNING:-------->> n + N = {instance.n + spec.bath_qubits} exceeds the dense cap, "
            "returning the joint state only"
        )
        return LindbladianResult(density=None, joint_state=joint)
    return LindbladianResult(density=trace_bath(joint, instance.n), joint_state=joint)


def sample_purification_branch(joint_state: np.ndarray, n: int, rng: np.random.Generator) -> np.ndarray:
    """
    Measure the bath in the computational basis and return the collapsed system state.
    """
    amplitudes = joint_state.reshape(1 << n, -1)
    weights = np.einsum("ib,ib->b", amplitudes.conj(), amplitudes).real
    branch = int(rng.choice(weights.size, p=weights / weights.sum()))
    return amplitudes[:, branch] / np.linalg.norm(amplitudes[:, branch])


def run_algorithm(instance: DisorderInstance, spec: AlgorithmSpec, seed: int = 0) -> tuple[np.ndarray, int]:
    """
    Output as (statevector, system qubits): the statevector may carry a bath
    register after the system qubits.
    """
    if spec.variant == AlgorithmVariant.TROTTER_ANNEALING:
        return run_trotter_annealing(instance, spec, seed), instance.n
    if spec.variant == AlgorithmVariant.PHASE_ESTIMATION:
        return run_phase_estimation(instance, spec, seed).state, instance.n
    return lindbladian_joint_state(instance, spec, seed), instance.n
