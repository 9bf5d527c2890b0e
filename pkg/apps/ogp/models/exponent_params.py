from pydantic import BaseModel, ConfigDict, Field, model_validator

from _library.error_codes import PARAMETER_DOMAIN_ERROR
from _library.exceptions import DomainError


class ExponentParams(BaseModel):
    """
    Every parameter of the hardness chain. Optional fields are only needed by
    the operations that read them; math symbols keep their usual case
    (F, R, Q, L) to stay apart from f, the additive stability constant.
    """

    model_config = ConfigDict(frozen=True)

    # -------------------------
    # Approximation and overlap window
    # -------------------------
    gamma: float | None = Field(default=None, gt=0.0, description="Approximation ratio of the algorithm")
    gamma_star: float | None = Field(default=None, gt=0.0, le=1.0, description="OGP threshold gamma*")
    delta: float | None = Field(default=None, ge=0.0, description="Shadow estimator precision")
    m: int = Field(default=2, ge=1, description="Tuple size")
    xi: float | None = Field(default=None, ge=0.0, le=1.0, description="Window start (1 - xi) / 2")
    eta: float | None = Field(default=None, gt=0.0, le=1.0, description="Window width eta / 2")
    eta_prime: float | None = Field(default=None, gt=0.0, le=1.0, description="Chaos-property width")

    # -------------------------
    # Correlation set and model
    # -------------------------
    c: float = Field(default=0.0, ge=0.0, description="log2 |I| / n")
    F: float | None = Field(default=None, gt=0.0, le=1.0, description="Overlap depletion of the correlation set")
    R: int = Field(default=1, ge=1, description="Shadow repetitions")
    k: int = Field(default=2, ge=1, description="Locality")
    e_star: float = Field(default=1.0, gt=0.0, description="Limiting maximal energy E*")
    frame_count: int = Field(default=1, ge=1, description="|P|")
    phi: float = Field(default=0.0, ge=0.0, lt=1.0, description="Largest frame agreement fraction")
    upsilon: float | None = Field(default=None, ge=0.0, lt=1.0, description="Overrides the derived upsilon")

    # -------------------------
    # Stability and probabilities
    # -------------------------
    Q: int | None = Field(default=None, ge=1, description="Path length")
    beta: float | None = Field(default=None, gt=0.0)
    degree_bound: float | None = Field(default=None, ge=0.0, description="Degree cap of the stability definition")
    d_max: float | None = Field(default=None, ge=0.0, description="High-probability maximum degree")
    kappa: float | None = Field(default=None, ge=0.0, le=1.0)
    f: float | None = Field(default=None, ge=0.0, description="Additive stability constant")
    L: float | None = Field(default=None, ge=0.0, description="Lipschitz stability constant")
    n: int | None = Field(default=None, ge=1)
    p_st: float | None = Field(default=None, ge=0.0, le=1.0)
    p_f: float | None = Field(default=None, ge=0.0, le=1.0)
    p_est: float | None = Field(default=None, ge=0.0, le=1.0)
    p_b: float | None = Field(default=None, ge=0.0, le=1.0)

    @model_validator(mode="after")
    def check_window(self) -> "ExponentParams":
        if self.xi is not None and self.eta is not None and self.xi < 1.0 and not self.eta < self.xi:
            raise ValueError(f"need 0 < eta < xi, got eta={self.eta}, xi={self.xi}")
        return self

    @property
    def effective_gamma(self) -> float:
        """
        The ratio an exponent is evaluated at: gamma if set, else gamma*.
        """
        value = self.gamma if self.gamma is not None else self.gamma_star
        if value is None:
            raise DomainError(PARAMETER_DOMAIN_ERROR, field="gamma", info="gamma or gamma_star is required")
        return value

    @property
    def energy_scale(self) -> float:
        """
        gamma^2 E*^2.
        """
        return self.effective_gamma**2 * self.e_star**2

    def upsilon_value(self) -> float:
        """
        ((1 + xi) / 2) when R = 1, (1 - F) otherwise, unless set explicitly.
        """
        if self.upsilon is not None:
            return self.upsilon
        if self.R == 1:
            return (1.0 + (1.0 if self.xi is None else self.xi)) / 2.0
        if self.F is None:
            raise DomainError(PARAMETER_DOMAIN_ERROR, field="F", info="F is required when R != 1")
        return 1.0 - self.F

    def covariance_term(self) -> float:
        """
        upsilon^k + |P| phi^k.
        """
        return self.upsilon_value() ** self.k + self.frame_count * self.phi**self.k
