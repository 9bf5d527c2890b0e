import logging

import numpy as np

from _library.functions.csv_writer import write_table
from _library.functions.parallel import ordered_map
from _library.functions.rng import derive_seed, make_generator
from apps.dynamics.functions.stability import stability_experiment
from apps.experiments.functions.loader import output_root
from apps.experiments.models import ExperimentConfig
from apps.hamiltonians.functions.hypergraph import hypergraph_stats
from apps.hamiltonians.functions.sampling import mask_concentration, sample_conditioned_instance, sample_instance
from apps.hamiltonians.functions.serialization import write_instance
from apps.hamiltonians.functions.spectrum import extreme_eigenvalue
from apps.pauli.functions.matrices import basis_state_vector
from apps.pauli.models import ShadowState
from apps.shadows.functions.estimators import energy_estimates
from apps.shadows.functions.norms import shadow_norm
from apps.shadows.functions.quality import estimator_quality, expected_energy, make_state
from apps.shadows.functions.sampling import sample_shadow_batch
from apps.wasserstein.functions.costs import product_w
from apps.wasserstein.functions.mixtures import mixture_from_shadows
from apps.wasserstein.functions.operators import exact_w1_small
from apps.wasserstein.functions.transport import ot_distance
from apps.wasserstein.models import CostMode
from config import settings

logger = logging.getLogger(__name__)


# -------------------------
# sample
# -------------------------
def cmd_sample(config: ExperimentConfig) -> dict:
    """
    Draw `trials` instances, archive them and tabulate their hypergraph statistics.
    """
    config.require("model")
    spec, options, root = config.model, config.sample, output_root(config)
    archive = config.archival_dict()
    logger.info(f"INFO:-------->> sample: {config.trials} draws of {spec.label()}")

    def draw(trial: int):
        if options.degree_cap is None:
            return sample_instance(spec, config.seed, trial)
        return sample_conditioned_instance(spec, config.seed, options.degree_cap, trial=trial)

    instances = ordered_map(draw, range(config.trials), config.threads)

    columns = ["trial", "mask_weight", "d_max_observed", "d_max_formula", "r_dense", "d_dense", "b"]
    if options.spectrum:
        columns += ["operator_norm", "e_star_proxy"]

    rows, outputs = [], []
    for instance in instances:
        stats = hypergraph_stats(spec, instance)
        row = [
            instance.trial,
            int(instance.mask.sum()),
            stats["d_max_observed"],
            stats["d_max_formula"],
            stats["r_dense"],
            stats["d_dense"],
            stats["b"],
        ]
        if options.spectrum:
            high, low = extreme_eigenvalue(instance, dense_cap=config.dense_cap)
            row += [max(abs(high), abs(low)), high / np.sqrt(spec.n)]
        rows.append(row)
        if options.write_instances:
            path = write_instance(instance, root / "instances" / f"instance_{instance.trial:05d}.json")
            outputs.append(str(path))

    outputs.append(str(write_table(root / "hypergraph.csv", columns, rows, config=archive)))
    summary = {"command": "sample", "instances": len(instances), "outputs": outputs}
    if options.concentration_draws:
        summary["concentration"] = mask_concentration(spec, options.concentration_draws, config.seed)
    return summary


# -------------------------
# estimate
# -------------------------
def cmd_estimate(config: ExperimentConfig) -> dict:
    """
    Shadow energy estimates against exact expectations, plus the empirical
    estimator quality per delta.
    """
    config.require("model")
    spec, options, root = config.model, config.estimate, output_root(config)
    est = config.estimator_spec()
    archive = config.archival_dict()
    logger.info(f"INFO:-------->> estimate: {config.trials} trials x {options.shots} shots on {spec.label()}")

    def one_trial(trial: int) -> dict:
        instance = sample_instance(spec, config.seed, trial)
        rng = make_generator(config.seed, trial, "estimate")
        state = make_state(options.source, instance, rng)
        frames, outcomes = sample_shadow_batch(state, est, rng, options.shots)
        values = energy_estimates(instance, est, frames, outcomes)
        expected = expected_energy(instance, state)
        stderr = float(values.std(ddof=1) / np.sqrt(options.shots)) if options.shots > 1 else 0.0
        mean = float(values.mean())
        return {
            "trial": trial,
            "expected": expected,
            "mean": mean,
            "stderr": stderr,
            "z": (mean - expected) / stderr if stderr > 0 else None,
            "shadow_norm": shadow_norm(instance, options.shadow_norm) if options.shadow_norm is not None else None,
            "values": values if trial == 0 and options.trace else None,
        }

    results = ordered_map(one_trial, range(config.trials), config.threads)
    outputs = [
        str(
            write_table(
                root / "estimates.csv",
                ["trial", "expected", "mean", "stderr", "z", "shadow_norm"],
                ([r["trial"], r["expected"], r["mean"], r["stderr"], r["z"], r["shadow_norm"]] for r in results),
                config=archive,
            )
        )
    ]

    if options.trace and results:
        values = results[0]["values"]
        running = np.cumsum(values) / np.arange(1, values.size + 1)
        rows = ([shot, float(value), float(mean)] for shot, (value, mean) in enumerate(zip(values, running, strict=True)))
        outputs.append(str(write_table(root / "shadow_trace.csv", ["shot", "estimate", "running_mean"], rows, config=archive)))

    if options.quality_trials:
        rows = []
        for delta in options.deltas:
            quality = estimator_quality(
                spec, est, delta, options.source, options.quality_trials, config.seed,
                e_star=options.e_star, t=options.tail_t, threads=config.threads,
            )
            rows.append(
                [delta, quality["p_est"], quality["p_est_stderr"], quality["theoretical_p_est"], quality["p_b"],
                 quality["e_star_mean"], quality["trials"]]
            )
        columns = ["delta", "p_est", "p_est_stderr", "theoretical_p_est", "p_b", "e_star_mean", "trials"]
        outputs.append(str(write_table(root / "estimator_quality.csv", columns, rows, config=archive)))

    within = sum(1 for r in results if r["z"] is None or abs(r["z"]) <= 5)
    return {"command": "estimate", "trials": len(results), "within_5_stderr": within, "outputs": outputs}


# -------------------------
# distance
# -------------------------
def _random_letters(rng: np.random.Generator, rows: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    return rng.integers(1, 4, size=(rows, n), dtype=np.int8), rng.integers(0, 2, size=(rows, n), dtype=np.int8)


def _density(state: ShadowState) -> np.ndarray:
    vector = basis_state_vector(state)
    return np.outer(vector, vector.conj())


def cmd_distance(config: ExperimentConfig) -> dict:
    """
    Product-state distance, mixture transport sandwich and, for small n, the
    exact quantum W1 of random basis-state pairs.
    """
    config.require("model")
    n, options, root = config.model.n, config.distance, output_root(config)
    mode = CostMode(kind=options.cost, order=options.order)
    exact = options.exact and n <= settings.EXACT_W1_CAP
    logger.info(f"INFO:-------->> distance: {config.trials} pairs at n={n}, cost {mode.tag()}")

    def one_pair(trial: int) -> list:
        rng = make_generator(config.seed, trial, "distance")
        frames, outcomes = _random_letters(rng, 2, n)
        first = ShadowState(frames=tuple(frames[0]), outcomes=tuple(outcomes[0]))
        second = ShadowState(frames=tuple(frames[1]), outcomes=tuple(outcomes[1]))

        mixtures = [mixture_from_shadows(*_random_letters(rng, options.support, n)) for _ in range(2)]
        lower, upper = ot_distance(*mixtures, mode, alpha=options.alpha, seed=derive_seed(config.seed, trial, "transport"))

        row = [trial, str(first), str(second), product_w(first, second, mode), lower, upper]
        if exact:
            solution = exact_w1_small(_density(first) - _density(second))
            row += [solution.value, solution.gap, solution.converged]
        else:
            row += [None, None, None]
        return row

    rows = ordered_map(one_pair, range(config.trials), config.threads)
    columns = ["trial", "first", "second", "product_w", "ot_lower", "ot_upper", "exact_w1", "exact_gap", "converged"]
    path = write_table(root / "distances.csv", columns, rows, config=config.archival_dict())
    return {"command": "distance", "pairs": len(rows), "exact": exact, "outputs": [str(path)]}


# -------------------------
# stability
# -------------------------
def cmd_stability(config: ExperimentConfig) -> dict:
    """
    Output-distance versus disorder-distance on correlated pairs, against f + L ||X - Y||_1.
    """
    config.require("model", "algorithm")
    options, root = config.stability, output_root(config)
    archive = config.archival_dict()

    result = stability_experiment(
        config.algorithm,
        config.model,
        options.kappas,
        config.trials,
        options.shadows,
        config.seed,
        degree_cap=options.degree_cap,
        f=options.f,
        lipschitz=options.lipschitz,
        cost=options.cost,
        threads=config.threads,
    )

    pair_columns = ["kappa", "trial", "l1_diff", "w1_alpha1", "w2_lower", "bound", "violated"]
    fit_columns = ["kappa", "pairs", "f_fit", "l_fit", "f", "lipschitz", "p_st"]
    pair_rows = ([row[column] for column in pair_columns] for row in result["rows"])
    fit_rows = ([fit[column] for column in fit_columns] for fit in result["fits"])
    outputs = [
        str(write_table(root / "stability.csv", pair_columns, pair_rows, config=archive)),
        str(write_table(root / "stability_fit.csv", fit_columns, fit_rows, config=archive)),
    ]
    violations = sum(row["violated"] for row in result["rows"])
    return {
        "command": "stability",
        "pairs": len(result["rows"]),
        "violations": violations,
        "lipschitz": result["lipschitz"],
        "commutator_lipschitz": result["commutator_lipschitz"],
        "outputs": outputs,
    }
