import logging
import math

import numpy as np

from _library.error_codes import PARAMETER_DOMAIN_ERROR
from _library.exceptions import DomainError
from apps.ogp.functions.counting import binary_entropy
from apps.ogp.models import ExponentParams

logger = logging.getLogger(__name__)

LOG2_6 = math.log2(6)
LOG2_5 = math.log2(5)
_TOL = 1e-12


def _require(params: ExponentParams, *fields: str):
    missing = [field for field in fields if getattr(params, field) is None]
    if missing:
        raise DomainError(PARAMETER_DOMAIN_ERROR, missing=missing, info="exponent parameters incomplete")


def _step(width: float) -> float:
    """
    Per-replica growth H(w) + log2(5) w of the tuple count at overlap width w.
    """
    return binary_entropy(width) + LOG2_5 * width


# -------------------------
# Exponents
# -------------------------
def psi_chaos_kspin(params: ExponentParams) -> float:
    """
    log2 6 + (H(eta/2) + log2(5) eta/2)(m - 1) - m gamma^2 E*^2 / (2 ln2 9^k R).
    """
    _require(params, "eta")
    m, g = params.m, params.energy_scale
    return LOG2_6 + _step(params.eta / 2) * (m - 1) - m * g / (2 * math.log(2) * 9.0**params.k * params.R)


def psi_mqogp_pk(params: ExponentParams) -> float:
    """
    log2 6 + (H(x) + log2(5) x)(m - 1) + c m / R - m gamma^2 E*^2 / (2 ln2 (1 + (m - 1) V) R)

    with x = (1 - xi + eta) / 2 and V = upsilon^k + |P| phi^k.
    """
    _require(params, "xi", "eta")
    m, g, R = params.m, params.energy_scale, params.R
    width = (1 - params.xi + params.eta) / 2
    spread = 1 + (m - 1) * params.covariance_term()
    return LOG2_6 + _step(width) * (m - 1) + params.c * m / R - m * g / (2 * math.log(2) * spread * R)


def psi_chaos_pk(params: ExponentParams) -> float:
    """
    The chaos-property exponent of the (P,k) model: the covariance term dropped, width eta'.
    """
    _require(params, "eta_prime")
    m, g = params.m, params.energy_scale
    return LOG2_6 + _step(params.eta_prime / 2) * (m - 1) - m * g / (2 * math.log(2) * params.R)


def psi_mqogp_asymptote(params: ExponentParams) -> dict:
    """
    Line slope * m + offset that psi_mqogp_pk approaches as m grows.

    With V > 0 the energy term saturates at gamma^2 E*^2 / (2 ln2 V R), so any
    positive per-replica growth eventually wins; with V = 0 it stays linear in m.
    """
    _require(params, "xi", "eta")
    step = _step((1 - params.xi + params.eta) / 2)
    term, energy = params.covariance_term(), params.energy_scale / (2 * math.log(2) * params.R)
    if term == 0:
        return {"slope": step + params.c / params.R - energy, "offset": LOG2_6 - step, "saturation": math.inf}
    return {"slope": step + params.c / params.R, "offset": LOG2_6 - step - energy / term, "saturation": energy / term}


# -------------------------
# Admissible parameter blocks
# -------------------------
def kspin_thresholds(params: ExponentParams) -> dict:
    g, scale = params.energy_scale, 9.0**params.k * params.R
    return {
        "m_min": 1 + 6 * math.log(6) * scale / g,
        "eta_max": min(1.0, (g / (6 * math.log(2) * scale)) ** 2, g / (3 * math.log(5) * scale)),
    }


def kspin_admissible(params: ExponentParams) -> bool:
    _require(params, "eta")
    bounds = kspin_thresholds(params)
    return params.m >= bounds["m_min"] - _TOL and 0 < params.eta <= bounds["eta_max"] + _TOL


def pk_thresholds(params: ExponentParams) -> dict:
    """
    A = gamma^2 E*^2 / (24 ln2 R), B = gamma^2 E*^2 / (12 ln5 R) and the m-window they imply.
    """
    g, R = params.energy_scale, params.R
    a = g / (24 * math.log(2) * R)
    b = g / (12 * math.log(5) * R)
    return {
        "A": a,
        "B": b,
        "width_max": min(a**2, b),
        "m_low": 1 + 8 * math.log(6) * R / g,
        "m_high": 1 + 1 / params.covariance_term() if params.covariance_term() > 0 else math.inf,
        "c_max": g / (24 * math.log(2)),
    }


def pk_admissible(params: ExponentParams, literal: bool = False) -> bool:
    """
    The (P,k) parameter block.

    literal=True takes the eta' ceiling as 3 max(A^2, B) and c <= 1/48 alone;
    the default uses 3 min(A^2, B) and also caps c by gamma^2 E*^2 / (24 ln2),
    under which both exponents stay negative.
    """
    _require(params, "xi", "eta", "eta_prime")
    bounds = pk_thresholds(params)
    width = 1 - params.xi + params.eta
    ceiling = 3 * (max if literal else min)(bounds["A"] ** 2, bounds["B"])

    checks = [
        params.xi > params.eta,
        width <= bounds["width_max"] + _TOL,
        bounds["m_low"] - _TOL <= params.m <= bounds["m_high"] + _TOL,
        params.c <= 1 / 48,
        literal or params.c <= bounds["c_max"] + _TOL,
        width < params.eta_prime < ceiling,
    ]
    return all(checks)


# -------------------------
# Samplers
# -------------------------
def sample_kspin_tuple(rng: np.random.Generator) -> ExponentParams:
    """
    A random (gamma*, E*, k, R, m, eta) satisfying the k-spin block.
    """
    base = ExponentParams(
        gamma_star=float(rng.uniform(0.05, 1.0)),
        e_star=float(rng.uniform(0.2, 3.0)),
        k=int(rng.integers(1, 4)),
        R=int(rng.integers(1, 6)),
    )
    bounds = kspin_thresholds(base)
    m = math.ceil(bounds["m_min"]) + int(rng.integers(0, 5))
    eta = bounds["eta_max"] * (1.0 - rng.random())
    return base.model_copy(update={"m": m, "eta": eta})


def sample_pk_tuple(rng: np.random.Generator, max_k: int = 400) -> ExponentParams:
    """
    A random admissible (P,k) tuple. R >= 2 so upsilon = 1 - F stays below one
    and the m-window opens once k is large enough.
    """
    base = ExponentParams(
        gamma_star=float(rng.uniform(0.5, 1.0)),
        e_star=float(rng.uniform(1.0, 3.0)),
        R=int(rng.integers(2, 4)),
        F=float(rng.uniform(0.5, 0.95)),
        frame_count=int(rng.integers(1, 4)),
        phi=float(rng.uniform(0.0, 0.5)),
        xi=1.0,
    )
    bounds = pk_thresholds(base)
    m = math.ceil(bounds["m_low"]) + int(rng.integers(0, 3))

    k = 2
    while k < max_k and 1 + 1 / base.model_copy(update={"k": k}).covariance_term() < m:
        k += 1
    k += int(rng.integers(0, 3))

    width = min(bounds["width_max"], 0.9) * (1.0 - rng.random())
    eta = width * float(rng.uniform(0.05, 0.95))
    ceiling = min(1.0, 3 * bounds["width_max"])
    eta_prime = width + (ceiling - width) * float(rng.uniform(0.01, 0.99))
    c = min(1 / 48, bounds["c_max"]) * float(rng.random())

    return base.model_copy(update={"k": k, "m": m, "xi": 1 - width + eta, "eta": eta, "eta_prime": eta_prime, "c": c})
