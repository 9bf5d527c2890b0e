import logging
import math

from _library.error_codes import PARAMETER_DOMAIN_ERROR
from _library.exceptions import DomainError
from _library.functions.number_utils import safe_pow, validate_int, validate_range
from apps.ogp.functions.exponents import (
    kspin_admissible,
    kspin_thresholds,
    pk_admissible,
    pk_thresholds,
    psi_chaos_kspin,
    psi_chaos_pk,
    psi_mqogp_pk,
)
from apps.ogp.models import ExponentParams
from apps.ogp.models.choices import CorollaryVariant, InequalityName
from apps.shadows.functions.quality import p_est_derandomized, p_est_pauli
from config import settings

logger = logging.getLogger(__name__)

_SYSTEM_FIELDS = (
    "degree_bound", "d_max", "kappa", "Q", "F", "beta", "p_est", "f", "L", "n",
    "eta", "p_st", "p_f", "p_b", "gamma", "gamma_star", "delta",
)


def _row(name: InequalityName, lhs: float, rhs: float, strict: bool = False) -> dict:
    passed = lhs < rhs if strict else lhs <= rhs
    if math.isinf(lhs) or math.isinf(rhs):
        margin = math.inf if passed else -math.inf
    else:
        margin = rhs - lhs
    scale = max(abs(lhs), abs(rhs)) if math.isfinite(margin) else 1.0
    relative = margin / scale if scale > 0 else margin
    return {"name": name.value, "lhs": lhs, "rhs": rhs, "passed": bool(passed), "margin": margin, "relative": relative}


def probability_log2(params: ExponentParams) -> tuple[float, bool]:
    """
    log2(Q exp2(Q^(4mQ)) (3Q p_st + 3p_f + p_b)) and whether Q^(4mQ) overflowed.
    """
    total = 3 * params.Q * params.p_st + 3 * params.p_f + params.p_b
    if total == 0:
        return -math.inf, False
    exponent = safe_pow(float(params.Q), 4.0 * params.m * params.Q)
    if math.isinf(exponent):
        return math.inf, True
    return math.log2(params.Q) + exponent + math.log2(total), False


def feasibility_system(params: ExponentParams, slack: float | None = None) -> dict:
    """
    Evaluate every inequality of the stable-algorithm hardness statement.

    The o(n) term on the probability row becomes a fixed `slack`; the
    approximation row reads gamma >= gamma* + delta. Infeasibility is
    reported, never raised.
    """
    missing = [field for field in _SYSTEM_FIELDS if getattr(params, field) is None]
    if missing:
        raise DomainError(PARAMETER_DOMAIN_ERROR, missing=missing, info="feasibility needs every field")
    slack = settings.FEASIBILITY_SLACK if slack is None else validate_range(slack, "slack", 0.0, 1.0, max_inclusive=False)

    Q, beta = params.Q, params.beta
    probability, overflow = probability_log2(params)
    rows = [
        _row(InequalityName.DEGREE, params.d_max, params.degree_bound),
        _row(InequalityName.KAPPA, params.kappa, max(0.0, 1 - 1.001 / Q)),
        _row(InequalityName.DEPLETION, params.F, 1 / Q),
        _row(InequalityName.REPLICA_BUDGET, Q / beta**2 + Q * params.p_est**params.R, 1.0, strict=True),
        _row(InequalityName.STABILITY, beta * params.f / params.n + 6 * params.d_max * beta * params.L / Q, params.eta / 8),
        _row(InequalityName.PROBABILITY, probability, math.log2(1 - slack)),
        _row(InequalityName.APPROXIMATION, params.gamma_star + params.delta, params.gamma),
    ]

    binding = min(rows, key=lambda row: row["relative"])
    feasible = all(row["passed"] for row in rows)
    if overflow:
        logger.warning(f"WARNING:-------->> Q^(4mQ) overflowed at Q={Q}, m={params.m}; probability row saturated")
    logger.info(f"INFO:-------->> Feasibility {'holds' if feasible else 'fails'}, binding row {binding['name']}")
    return {"rows": rows, "feasible": feasible, "binding": binding["name"], "overflow": overflow}


# -------------------------
# Corollary parameter chains
# -------------------------
def corollary_q(variant: CorollaryVariant, k: int, epsilon: float, d_max: float) -> int:
    if variant == CorollaryVariant.KSPIN:
        return 1
    spread = 2 * d_max**2 / epsilon**2
    if variant == CorollaryVariant.PK_SPARSE:
        spread *= k**0.999 * math.log(k) ** 2
    return max(1, math.ceil(spread))


def corollary_chain(
    k: int,
    epsilon: float,
    gamma: float,
    delta: float,
    e_star: float,
    frame_count: int,
    phi: float,
    d_max: float,
    variant: CorollaryVariant | str = CorollaryVariant.PK,
    f: float | None = None,
    L: float | None = None,
    n: int | None = None,
    p_st: float | None = None,
    p_f: float | None = None,
    p_b: float | None = None,
    slack: float | None = None,
) -> dict:
    """
    Derive (gamma*, Q, beta, F, p_est, R, xi, eta, eta', m) the way the
    corollaries do and audit them.

    The verdict needs a nonempty m-window, an admissible block with negative
    exponents and, when (f, L, n) and the probabilities are given, a feasible
    inequality system.
    """
    variant = CorollaryVariant(variant)
    k = validate_int(k, "k", min_value=1)
    validate_range(epsilon, "epsilon", 0.0, 1.0, min_inclusive=False, max_inclusive=False)
    validate_range(gamma, "gamma", 0.0, 1.0, min_inclusive=False)
    validate_range(delta, "delta", 0.0, gamma, min_inclusive=False, max_inclusive=False)
    slack = settings.FEASIBILITY_SLACK if slack is None else slack

    gamma_star = gamma - delta
    Q = corollary_q(variant, k, epsilon, d_max)
    beta = math.sqrt(2 * Q)
    if variant == CorollaryVariant.KSPIN:
        p_est = p_est_pauli(k, delta)
    else:
        p_est = p_est_derandomized(frame_count, delta)
    if p_est >= 1.0:
        raise DomainError(PARAMETER_DOMAIN_ERROR, field="p_est", value=p_est, info="p_est rounds to 1, no finite R exists")
    R = max(1, math.ceil(math.log(4 * Q) / -math.log(p_est)))

    # thresholds and exponents run at gamma*; gamma only enters the approximation row
    common = {
        "gamma_star": gamma_star, "delta": delta, "R": R, "k": k, "e_star": e_star,
        "frame_count": frame_count, "phi": phi, "Q": Q, "beta": beta, "F": 1 / Q, "d_max": d_max,
        "degree_bound": d_max, "kappa": max(0.0, 1 - 1.001 / Q), "f": f, "L": L, "n": n,
        "p_st": p_st, "p_f": p_f, "p_est": p_est, "p_b": p_b,
    }

    if variant == CorollaryVariant.KSPIN:
        bounds = kspin_thresholds(ExponentParams(**common))
        params = ExponentParams(**common, m=math.ceil(bounds["m_min"]), eta=bounds["eta_max"], xi=1.0)
        window = (bounds["m_min"], math.inf)
        exponents = {"psi_chaos_kspin": psi_chaos_kspin(params)}
        admissible = kspin_admissible(params)
    else:
        bounds = pk_thresholds(ExponentParams(**common))
        width = min(bounds["width_max"], 0.5)
        draft = ExponentParams(**common, xi=1 - width / 2, eta=width / 2, eta_prime=2 * width)
        window = (bounds["m_low"], pk_thresholds(draft)["m_high"])
        params = draft.model_copy(update={"m": math.ceil(window[0])})
        exponents = {"psi_mqogp_pk": psi_mqogp_pk(params), "psi_chaos_pk": psi_chaos_pk(params)}
        admissible = pk_admissible(params)

    window_nonempty = math.ceil(window[0]) <= window[1]
    probability_budget = math.log2(1 - slack) - math.log2(Q) - safe_pow(float(Q), 4.0 * params.m * Q)
    report = {
        "variant": variant.value,
        "params": params,
        "window": window,
        "window_nonempty": window_nonempty,
        "replica_budget": Q / beta**2 + Q * p_est**R,
        "L_max": math.inf if d_max == 0 else params.eta * Q / (48 * d_max * beta),
        "probability_budget_log2": probability_budget,
        "exponents": exponents,
        "admissible": admissible,
        "feasibility": None,
    }

    verdict = window_nonempty and admissible and all(value < 0 for value in exponents.values())
    if None not in (f, L, n, p_st, p_f, p_b):
        report["feasibility"] = feasibility_system(params.model_copy(update={"gamma": gamma}), slack)
        verdict = verdict and report["feasibility"]["feasible"]
    report["verdict"] = verdict

    logger.info(f"INFO:-------->> Corollary chain {variant.value} k={k}: Q={Q}, R={R}, m={params.m}, verdict={verdict}")
    return report
