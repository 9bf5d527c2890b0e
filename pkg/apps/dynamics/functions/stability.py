import logging
import math

import numpy as np

from _library.functions.number_utils import validate_probability
from _library.functions.parallel import ordered_map
from _library.functions.rng import derive_seed, make_generator
from apps.dynamics.functions.bounds import commutator_opnorm, lipschitz_bound, model_geometry
from apps.dynamics.functions.evolution import run_algorithm
from apps.dynamics.models import AlgorithmSpec, CorrelatedPair
from apps.dynamics.models.choices import AlgorithmVariant
from apps.hamiltonians.functions.sampling import draw_couplings, draw_mask, sample_conditioned_mask
from apps.hamiltonians.functions.terms import term_supports
from apps.hamiltonians.models import DisorderInstance, ModelSpec
from apps.shadows.functions.sampling import sample_shadow_batch
from apps.shadows.models import EstimatorSpec
from apps.wasserstein.functions.mixtures import mixture_from_shadows
from apps.wasserstein.functions.transport import ot_distance
from apps.wasserstein.models import CostMode
from apps.wasserstein.models.choices import SiteCost

logger = logging.getLogger(__name__)


# -------------------------
# Correlated disorder
# -------------------------
def preserved_term_mask(spec: ModelSpec, preserved: frozenset[int]) -> np.ndarray:
    """
    True for terms whose support lies inside the preserved qubits.
    """
    outside = np.ones(spec.n, dtype=bool)
    outside[list(preserved)] = False
    return ~(term_supports(spec) & outside).any(axis=1)


def sample_correlated_pair(
    spec: ModelSpec, kappa: float, degree_cap: int | None, seed: int, trial: int = 0
) -> CorrelatedPair:
    """
    X and Y share S (degree-conditioned when degree_cap is set); J is
    resampled exactly on terms whose support leaves the first floor(kappa n) qubits.
    """
    validate_probability(kappa, "kappa")
    if degree_cap is None:
        mask = draw_mask(spec, make_generator(seed, trial, "mask"))
    else:
        mask, _ = sample_conditioned_mask(spec, seed, degree_cap, trial=trial)

    preserved = frozenset(range(math.floor(kappa * spec.n)))
    resampled = ~preserved_term_mask(spec, preserved)
    base_couplings = draw_couplings(spec, make_generator(seed, trial, "couplings"))
    fresh = draw_couplings(spec, make_generator(seed, trial, "couplings/partner"))
    partner_couplings = np.where(resampled, fresh, base_couplings)

    base = DisorderInstance(spec=spec, mask=mask, couplings=base_couplings, seed=seed, trial=trial)
    return CorrelatedPair(
        base=base,
        partner=base.with_couplings(partner_couplings),
        preserved=preserved,
        kappa=kappa,
        degree_cap=degree_cap,
        resampled=resampled,
    )


def estimate_commutator_lipschitz(
    spec: ModelSpec, pairs: int, seed: int, kappa: float = 0.5, degree_cap: int | None = None, threads=None
) -> dict:
    """
    Empirical L = max ||[H(X), H(Y)]||_op / ||X - Y||_1 over sampled pairs.

    Holds only on the sampled pairs; pairs with X = Y are skipped.
    """

    def ratio(trial: int) -> float | None:
        pair = sample_correlated_pair(spec, kappa, degree_cap, seed, trial)
        distance = pair.l1_diff
        if distance == 0.0:
            return None
        return commutator_opnorm(pair.base, pair.partner) / distance

    ratios = [value for value in ordered_map(ratio, range(pairs), threads) if value is not None]
    return {
        "commutator_lipschitz": max(ratios, default=0.0),
        "pairs": pairs,
        "used": len(ratios),
    }


# -------------------------
# Stability experiment
# -------------------------
def fit_stability_line(l1_diffs: np.ndarray, distances: np.ndarray) -> tuple[float, float]:
    """
    Least-squares (f, L) for distance = f + L l1_diff with f clamped at 0.
    """
    l1_diffs = np.asarray(l1_diffs, dtype=float)
    distances = np.asarray(distances, dtype=float)
    if l1_diffs.size == 0:
        return 0.0, 0.0
    if np.ptp(l1_diffs) == 0.0:
        return max(float(distances.mean()), 0.0), 0.0

    design = np.column_stack([np.ones_like(l1_diffs), l1_diffs])
    (intercept, slope), *_ = np.linalg.lstsq(design, distances, rcond=None)
    if intercept < 0.0:
        intercept, slope = 0.0, float(l1_diffs @ distances / (l1_diffs @ l1_diffs))
    return float(intercept), float(slope)


def pair_distances(
    algorithm: AlgorithmSpec, pair: CorrelatedPair, shadows: int, seed: int, trial: int, mode: CostMode
) -> tuple[float, float]:
    """
    (alpha = 1 distance, alpha = 2 lower bound) between the shadow mixtures of
    A(X, omega) and A(Y, omega); omega and the measurement stream are shared.
    """
    omega = derive_seed(seed, trial, "omega")
    estimator = EstimatorSpec.pauli_uniform(1)
    mixtures = []
    for instance in (pair.base, pair.partner):
        state, sites = run_algorithm(instance, algorithm, omega)
        rng = make_generator(seed, trial, "shadows")
        frames, outcomes = sample_shadow_batch(state, estimator, rng, shadows, n_sites=sites)
        mixtures.append(mixture_from_shadows(frames, outcomes))

    w1, _ = ot_distance(mixtures[0], mixtures[1], mode, alpha=1.0)
    w2_lower, _ = ot_distance(mixtures[0], mixtures[1], mode, alpha=2.0)
    return w1, w2_lower


def stability_experiment(
    algorithm: AlgorithmSpec,
    model: ModelSpec,
    kappas,
    trials: int,
    shadows: int,
    seed: int,
    cost: SiteCost,
    degree_cap: int | None = None,
    f: float | None = None,
    lipschitz: float | None = None,
    threads: int | None = None,
) -> dict:
    """
    Run the algorithm on correlated pairs and compare output shadow distances
    with the line f + L ||X - Y||_1.

    Defaults: f = sqrt(n) and L from lipschitz_bound at the model geometry
    (without a degree cap, the largest per-qubit degree of the full ensemble).
    Phase estimation also needs the commutator constant, taken as the largest
    empirical ratio over the pairs this experiment draws.
    """
    mode = CostMode(kind=cost)
    f = math.sqrt(model.n) if f is None else f
    commutator_lipschitz = None
    if lipschitz is None:
        cap = degree_cap if degree_cap is not None else int(term_supports(model).sum(axis=0).max())
        commutator_lipschitz = 0.0
        if algorithm.variant == AlgorithmVariant.PHASE_ESTIMATION:
            estimates = [
                estimate_commutator_lipschitz(model, trials, seed, kappa, degree_cap, threads)["commutator_lipschitz"]
                for kappa in kappas
            ]
            commutator_lipschitz = max(estimates, default=0.0)
        geometry = model_geometry(model, algorithm, cap, commutator_lipschitz=commutator_lipschitz)
        lipschitz = lipschitz_bound(algorithm, geometry)

    items = [(kappa, trial) for kappa in kappas for trial in range(trials)]

    def run_item(item) -> dict:
        kappa, trial = item
        pair = sample_correlated_pair(model, kappa, degree_cap, seed, trial)
        w1, w2_lower = pair_distances(algorithm, pair, shadows, seed, trial, mode)
        bound = f + lipschitz * pair.l1_diff
        return {
            "kappa": kappa,
            "trial": trial,
            "l1_diff": pair.l1_diff,
            "w1_alpha1": w1,
            "w2_lower": w2_lower,
            "bound": bound,
            "violated": w1 > bound,
        }

    rows = ordered_map(run_item, items, threads)

    fits = []
    for kappa in kappas:
        selected = [row for row in rows if row["kappa"] == kappa]
        intercept, slope = fit_stability_line(
            np.array([row["l1_diff"] for row in selected]), np.array([row["w1_alpha1"] for row in selected])
        )
        violations = sum(row["violated"] for row in selected)
        fits.append(
            {
                "kappa": kappa,
                "pairs": len(selected),
                "f_fit": intercept,
                "l_fit": slope,
                "f": f,
                "lipschitz": lipschitz,
                "p_st": violations / len(selected) if selected else 0.0,
            }
        )
        logger.info(
            f"INFO:-------->> kappa={kappa}: fit f={intercept:.4f} L={slope:.4f}, "
            f"{violations}/{len(selected)} pairs above the bound"
        )

    return {"rows": rows, "fits": fits, "f": f, "lipschitz": lipschitz, "commutator_lipschitz": commutator_lipschitz}
