import logging

from _library.error_codes import MALFORMED_CONFIG_ERROR
from _library.exceptions import ConfigurationError
from _library.functions.csv_writer import canonical_json, config_hash, write_table
from _library.functions.parallel import ordered_map
from _library.functions.rng import make_generator
from apps.experiments.functions.loader import output_root
from apps.experiments.models import ExperimentConfig
from apps.experiments.models.choices import ExponentSweep
from apps.ogp.functions.correlation import build_tau_sequence, independent_correlation_set, sample_interpolation_path
from apps.ogp.functions.exponents import (
    kspin_admissible,
    pk_admissible,
    psi_chaos_kspin,
    psi_chaos_pk,
    psi_mqogp_pk,
    sample_kspin_tuple,
    sample_pk_tuple,
)
from apps.ogp.functions.feasibility import corollary_chain, feasibility_system
from apps.ogp.functions.gaussian import wilson_interval
from apps.ogp.functions.graph import (
    algorithm_bundles,
    find_monochromatic_clique,
    is_m_admissible,
    overlap_graph,
    ramsey_vertex_log2,
)
from apps.ogp.functions.scan import s_set_scan
from apps.ogp.models import ExponentParams
from apps.wasserstein.models import CostMode
from config import settings

logger = logging.getLogger(__name__)


# -------------------------
# ogp-scan
# -------------------------
def cmd_ogp_scan(config: ExperimentConfig) -> dict:
    """
    Empirical P[S nonempty] per gamma with Wilson intervals; witness tuples go to witnesses.txt.

    Every gamma reuses the same disorder draws, so the estimate is monotone in gamma draw by draw.
    """
    config.require("model")
    spec, options, root = config.model, config.scan, output_root(config)
    est = config.estimator_spec()
    mode = CostMode(kind=options.cost)
    corr = independent_correlation_set(spec) if options.Q == 0 else build_tau_sequence(spec, options.Q)
    archive = config.archival_dict()

    rows, witness_lines = [], []
    for gamma in options.gammas:
        result = s_set_scan(
            spec, est, gamma, options.m, options.xi, options.eta, corr, config.trials, config.seed, mode,
            e_star=options.e_star, threads=config.threads,
        )
        low, high = wilson_interval(result["hits"], result["trials"], options.confidence)
        window_low, window_high = result["window"]
        rows.append(
            [gamma, options.m, options.xi, options.eta, corr.path_length, result["hits"], result["trials"],
             result["probability"], low, high, window_low, window_high]
        )
        for witness in result["witnesses"]:
            witness_lines.append(f"gamma={gamma!r} trial={witness['trial']} " + " ".join(str(s) for s in witness["states"]))

    columns = ["gamma", "m", "xi", "eta", "Q", "hits", "trials", "probability", "ci_low", "ci_high", "window_low", "window_high"]
    outputs = [str(write_table(root / "ogp_scan.csv", columns, rows, config=archive))]

    witness_path = root / "witnesses.txt"
    header = f"# tool: {settings.TOOL_NAME}\n# config-hash: {config_hash(archive)}\n# config: {canonical_json(archive)}\n"
    with witness_path.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(header + "".join(f"{line}\n" for line in witness_lines))
    outputs.append(str(witness_path))

    return {"command": "ogp-scan", "probabilities": [row[7] for row in rows], "witnesses": len(witness_lines), "outputs": outputs}


# -------------------------
# overlap-graph
# -------------------------
def cmd_overlap_graph(config: ExperimentConfig) -> dict:
    """
    Run the algorithm along interpolation paths, build the colored overlap graph
    of each disorder trial and look for a monochromatic m-clique.
    """
    config.require("model", "algorithm")
    spec, options, root = config.model, config.graph, output_root(config)
    est = config.estimator_spec()
    mode = CostMode(kind=options.cost)
    exhaustive = options.T <= settings.OVERLAP_ADMISSIBILITY_CAP
    if not exhaustive:
        logger.warning(f"WARNING:-------->> T={options.T} above the admissibility cap, m-admissibility left blank")

    def one_trial(trial: int) -> dict:
        path = sample_interpolation_path(
            spec, options.T, options.Q, config.seed, trial=trial, degree_cap=options.degree_cap, R=options.R
        )
        bundles = algorithm_bundles(path, config.algorithm, est, options.R, config.seed)
        graph = overlap_graph(bundles, options.T, options.Q, options.xi, options.eta, mode)
        return {
            "trial": trial,
            "graph": graph,
            "admissible": is_m_admissible(graph, options.m) if exhaustive else None,
            "clique": find_monochromatic_clique(graph, options.m),
        }

    results = ordered_map(one_trial, range(config.trials), config.threads)
    archive = config.archival_dict()

    edge_rows = (
        [result["trial"], min(u, v), max(u, v), data["color"], data["distance"]]
        for result in results
        for u, v, data in sorted(result["graph"].edges(data=True), key=lambda edge: (min(edge[:2]), max(edge[:2])))
    )
    verdict_rows = []
    for result in results:
        clique = result["clique"]
        verdict_rows.append(
            [
                result["trial"],
                result["graph"].number_of_nodes(),
                result["graph"].number_of_edges(),
                options.m,
                result["admissible"],
                None if clique is None else clique["color"],
                None if clique is None else " ".join(str(node) for node in clique["clique"]),
                ramsey_vertex_log2(options.m, options.Q),
            ]
        )

    verdict_columns = ["trial", "nodes", "edges", "m", "m_admissible", "clique_color", "clique", "ramsey_log2_vertices"]
    outputs = [
        str(write_table(root / "overlap_edges.csv", ["trial", "u", "v", "color", "distance"], edge_rows, config=archive)),
        str(write_table(root / "overlap_verdict.csv", verdict_columns, verdict_rows, config=archive)),
    ]
    cliques = sum(result["clique"] is not None for result in results)
    return {"command": "overlap-graph", "trials": len(results), "cliques": cliques, "outputs": outputs}


# -------------------------
# exponent
# -------------------------
def exponent_row(label, params: ExponentParams) -> list:
    """
    Every exponent and block predicate the parameter set has the fields for; blanks elsewhere.
    """
    has_window = params.xi is not None and params.eta is not None
    has_pk = has_window and params.eta_prime is not None
    return [
        label,
        params.effective_gamma,
        params.e_star,
        params.k,
        params.R,
        params.m,
        params.xi,
        params.eta,
        params.eta_prime,
        params.c,
        psi_chaos_kspin(params) if params.eta is not None else None,
        psi_mqogp_pk(params) if has_window else None,
        psi_chaos_pk(params) if params.eta_prime is not None else None,
        kspin_admissible(params) if params.eta is not None else None,
        pk_admissible(params) if has_pk else None,
    ]


EXPONENT_COLUMNS = [
    "label", "gamma", "e_star", "k", "R", "m", "xi", "eta", "eta_prime", "c",
    "psi_chaos_kspin", "psi_mqogp_pk", "psi_chaos_pk", "kspin_admissible", "pk_admissible",
]


def cmd_exponent(config: ExperimentConfig) -> dict:
    """
    Exponent sweeps: an (m, eta) grid around `params`, or random admissible tuples of either block.
    """
    options, root = config.exponent, output_root(config)

    if options.sweep == ExponentSweep.GRID:
        config.require("params")
        base = config.params
        m_values = options.m_values or (base.m,)
        eta_values = options.eta_values or (base.eta,)
        rows = [
            exponent_row(f"m={m},eta={eta!r}", base.model_copy(update={"m": m, "eta": eta}))
            for m in m_values
            for eta in eta_values
        ]
        tested = []
    else:
        sampler = sample_kspin_tuple if options.sweep == ExponentSweep.KSPIN_SAMPLES else sample_pk_tuple
        rng = make_generator(config.seed, 0, f"exponent/{options.sweep.value}")
        rows = [exponent_row(index, sampler(rng)) for index in range(options.samples)]
        # kspin samples carry psi_chaos_kspin, pk samples the two (P,k) exponents
        names = ["psi_chaos_kspin"] if options.sweep == ExponentSweep.KSPIN_SAMPLES else ["psi_mqogp_pk", "psi_chaos_pk"]
        tested = [EXPONENT_COLUMNS.index(name) for name in names]

    positives = sum(1 for row in rows for column in tested if row[column] is not None and row[column] >= 0)
    if positives:
        logger.warning(f"WARNING:-------->> {positives} nonnegative exponents among admissible samples")
    logger.info(f"INFO:-------->> exponent: {len(rows)} rows, sweep {options.sweep.value}")

    path = write_table(root / "exponents.csv", EXPONENT_COLUMNS, rows, config=config.archival_dict())
    return {"command": "exponent", "rows": len(rows), "nonnegative_admissible": positives, "outputs": [str(path)]}


# -------------------------
# certify
# -------------------------
FEASIBILITY_COLUMNS = ["source", "name", "lhs", "rhs", "passed", "margin", "relative", "binding", "overflow"]
COROLLARY_COLUMNS = [
    "index", "variant", "k", "epsilon", "gamma", "delta", "Q", "beta", "F", "p_est", "R", "m", "xi", "eta", "eta_prime",
    "window_low", "window_high", "window_nonempty", "replica_budget", "L_max", "probability_budget_log2",
    "psi_chaos_kspin", "psi_mqogp_pk", "psi_chaos_pk", "admissible", "feasible", "verdict",
]


def _feasibility_rows(source: str, report: dict) -> list[list]:
    return [
        [source, row["name"], row["lhs"], row["rhs"], row["passed"], row["margin"], row["relative"],
         row["name"] == report["binding"], report["overflow"]]
        for row in report["rows"]
    ]


def cmd_certify(config: ExperimentConfig) -> dict:
    """
    The hardness inequality system for `params` and every configured corollary chain.

    Infeasible systems and failed verdicts are written out like any other result.
    """
    options, root = config.certify, output_root(config)
    if config.params is None and not options.corollaries:
        raise ConfigurationError(MALFORMED_CONFIG_ERROR, command="certify", info="need [params] or [[certify.corollaries]]")
    archive = config.archival_dict()

    feasibility_rows, corollary_rows, summary = [], [], {"command": "certify"}
    if config.params is not None:
        report = feasibility_system(config.params, options.slack)
        feasibility_rows += _feasibility_rows("params", report)
        summary["feasible"] = report["feasible"]

    verdicts = []
    for index, corollary in enumerate(options.corollaries):
        chain = corollary_chain(**corollary.model_dump(), slack=options.slack)
        params, exponents = chain["params"], chain["exponents"]
        if chain["feasibility"] is not None:
            feasibility_rows += _feasibility_rows(f"corollary/{index}", chain["feasibility"])
        corollary_rows.append(
            [
                index, chain["variant"], corollary.k, corollary.epsilon, corollary.gamma, corollary.delta,
                params.Q, params.beta, params.F, params.p_est, params.R, params.m, params.xi, params.eta, params.eta_prime,
                chain["window"][0], chain["window"][1], chain["window_nonempty"], chain["replica_budget"], chain["L_max"],
                chain["probability_budget_log2"], exponents.get("psi_chaos_kspin"), exponents.get("psi_mqogp_pk"),
                exponents.get("psi_chaos_pk"), chain["admissible"],
                None if chain["feasibility"] is None else chain["feasibility"]["feasible"], chain["verdict"],
            ]
        )
        verdicts.append(chain["verdict"])

    outputs = []
    if feasibility_rows:
        outputs.append(str(write_table(root / "feasibility.csv", FEASIBILITY_COLUMNS, feasibility_rows, config=archive)))
    if corollary_rows:
        outputs.append(str(write_table(root / "corollary.csv", COROLLARY_COLUMNS, corollary_rows, config=archive)))
    summary.update({"verdicts": verdicts, "outputs": outputs})
    return summary
