import math

from _library.error_codes import PARAMETER_DOMAIN_ERROR
from _library.exceptions import DomainError


def validate_range(
    value: float,
    field: str,
    min_value: float | None = None,
    max_value: float | None = None,
    min_inclusive: bool = True,
    max_inclusive: bool = True,
) -> float:
    """
    Validate a real parameter against an interval and return it as float.

    Raises DomainError with the offending field in the payload.
    """

    def fail(info: str):
        raise DomainError(PARAMETER_DOMAIN_ERROR, field=field, value=value, info=info)

    # -------------------------
    # Type normalization
    # -------------------------
    try:
        value = float(value)
    except (TypeError, ValueError):
        fail(f"{field} must be a real number")

    if math.isnan(value):
        fail(f"{field} must not be NaN")

    # -------------------------
    # Min boundary
    # -------------------------
    if min_value is not None:
        if (min_inclusive and value < min_value) or (not min_inclusive and value <= min_value):
            fail(f"{field} must be {'≥' if min_inclusive else '>'} {min_value}")

    # -------------------------
    # Max boundary
    # -------------------------
    if max_value is not None:
        if (max_inclusive and value > max_value) or (not max_inclusive and value >= max_value):
            fail(f"{field} must be {'≤' if max_inclusive else '<'} {max_value}")

    return value


def validate_probability(value: float, field: str) -> float:
    return validate_range(value, field, 0.0, 1.0)


def validate_int(value: int, field: str, min_value: int | None = None, max_value: int | None = None) -> int:
    """
    Validate an integer parameter.
    """
    if isinstance(value, bool) or not isinstance(value, int | float) or int(value) != value:
        raise DomainError(PARAMETER_DOMAIN_ERROR, field=field, value=value, info=f"{field} must be an integer")
    value = int(value)
    if min_value is not None and value < min_value:
        raise DomainError(PARAMETER_DOMAIN_ERROR, field=field, value=value, info=f"{field} must be ≥ {min_value}")
    if max_value is not None and value > max_value:
        raise DomainError(PARAMETER_DOMAIN_ERROR, field=field, value=value, info=f"{field} must be ≤ {max_value}")
    return value


def safe_pow(base: float, exponent: float) -> float:
    """
    base ** exponent saturating at +inf instead of raising OverflowError.
    """
    try:
        return math.pow(base, exponent)
    except OverflowError:
        return math.inf


def log2_pow(base: float, exponent: float) -> float:
    """
    log2(base ** exponent) for base > 0, computed without forming the power.
    """
    if base <= 0:
        return -math.inf
    return exponent * math.log2(base)


def saturating_exp2(log_value: float) -> float:
    """
    2 ** log_value, +inf on overflow.
    """
    return safe_pow(2.0, log_value)
