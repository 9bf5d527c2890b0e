from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field

from _library.error_codes import MALFORMED_CONFIG_ERROR
from _library.exceptions import ConfigurationError
from apps.dynamics.models import AlgorithmSpec
from apps.experiments.models.choices import CommandName, ExponentSweep
from apps.hamiltonians.models import ModelSpec
from apps.hamiltonians.models.choices import ModelVariant
from apps.ogp.models import ExponentParams
from apps.ogp.models.choices import CorollaryVariant
from apps.shadows.models import EstimatorSpec
from apps.shadows.models.choices import EstimatorVariant, ShadowNormMethod, StateSource
from apps.wasserstein.models.choices import SiteCost


class _Block(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


# -------------------------
# Per-command blocks
# -------------------------
class SampleOptions(_Block):
    degree_cap: int | None = Field(default=None, ge=0, description="Condition every draw on max degree <= cap")
    write_instances: bool = Field(default=True, description="Write instances/*.json")
    spectrum: bool = Field(default=False, description="Add ||H||_op and the E* proxy to hypergraph.csv")
    concentration_draws: int = Field(default=0, ge=0, description="Mask draws for the |S|_1 concentration row")


class EstimateOptions(_Block):
    shots: int = Field(default=1000, ge=1)
    source: StateSource = StateSource.HAAR
    deltas: tuple[float, ...] = Field(default=(0.5, 1.0))
    quality_trials: int = Field(default=0, ge=0, description="Trials per delta for estimator_quality.csv")
    e_star: float | None = Field(default=None, gt=0.0)
    tail_t: float = Field(default=0.0, ge=0.0)
    shadow_norm: ShadowNormMethod | None = None
    trace: bool = Field(default=False, description="Write the running estimate of trial 0 to shadow_trace.csv")


class DistanceOptions(_Block):
    cost: SiteCost = SiteCost.EXACT_SITE_W1
    order: float = Field(default=1.0, ge=1.0)
    alpha: float = Field(default=1.0, ge=1.0, description="Order of the mixture transport distance")
    support: int = Field(default=4, ge=1, description="Shadows drawn per random mixture")
    exact: bool = Field(default=True, description="Exact quantum W1 of the basis-state pair when n is small")


class StabilityOptions(_Block):
    kappas: tuple[float, ...] = Field(default=(0.0, 0.5))
    shadows: int = Field(default=200, ge=1)
    degree_cap: int | None = Field(default=None, ge=0)
    f: float | None = Field(default=None, ge=0.0)
    lipschitz: float | None = Field(default=None, ge=0.0)
    cost: SiteCost = SiteCost.HAMMING6


class ScanOptions(_Block):
    gammas: tuple[float, ...] = Field(default=(0.5,))
    m: int = Field(default=2, ge=2, le=3)
    xi: float = Field(default=0.5, ge=0.0, le=1.0)
    eta: float = Field(default=0.3, ge=0.0, le=1.0)
    Q: int = Field(default=1, ge=0, description="Path length of the correlation set; 0 scans independent replicas")
    e_star: float | None = Field(default=None, gt=0.0)
    cost: SiteCost = SiteCost.HAMMING6
    confidence: float = Field(default=0.95, gt=0.0, lt=1.0)


class GraphOptions(_Block):
    T: int = Field(default=4, ge=1)
    Q: int = Field(default=2, ge=1)
    R: int = Field(default=1, ge=1)
    m: int = Field(default=2, ge=1)
    xi: float = Field(default=0.5, ge=0.0, le=1.0)
    eta: float = Field(default=0.3, ge=0.0, le=1.0)
    degree_cap: int | None = Field(default=None, ge=0)
    cost: SiteCost = SiteCost.HAMMING6


class ExponentOptions(_Block):
    sweep: ExponentSweep = ExponentSweep.GRID
    m_values: tuple[int, ...] = Field(default=())
    eta_values: tuple[float, ...] = Field(default=())
    samples: int = Field(default=100, ge=1)


class CorollaryOptions(_Block):
    variant: CorollaryVariant = CorollaryVariant.PK
    k: int = Field(..., ge=1)
    epsilon: float = Field(..., gt=0.0, lt=1.0)
    gamma: float = Field(..., gt=0.0, le=1.0)
    delta: float = Field(..., gt=0.0)
    e_star: float = Field(default=1.0, gt=0.0)
    frame_count: int = Field(default=1, ge=1)
    phi: float = Field(default=0.0, ge=0.0, lt=1.0)
    d_max: float = Field(default=1.0, ge=0.0)
    f: float | None = None
    L: float | None = None
    n: int | None = None
    p_st: float | None = None
    p_f: float | None = None
    p_b: float | None = None


class CertifyOptions(_Block):
    slack: float | None = Field(default=None, ge=0.0, lt=1.0)
    corollaries: tuple[CorollaryOptions, ...] = Field(default=())


# -------------------------
# Run document
# -------------------------
class ExperimentConfig(_Block):
    """
    One self-contained run document. `threads` and `output_dir` only steer
    execution and stay out of the archived copy.
    """

    command: CommandName | None = None
    seed: int = Field(default=0, ge=0, lt=2**64)
    trials: int = Field(default=10, ge=0, description="Disorder trials or pairs, per command")
    threads: int | None = Field(default=None, ge=1)
    dense_cap: int | None = Field(default=None, ge=1)
    output_dir: Path | None = None

    model: ModelSpec | None = None
    estimator: EstimatorVariant | None = None
    algorithm: AlgorithmSpec | None = None
    params: ExponentParams | None = None

    sample: SampleOptions = Field(default_factory=SampleOptions)
    estimate: EstimateOptions = Field(default_factory=EstimateOptions)
    distance: DistanceOptions = Field(default_factory=DistanceOptions)
    stability: StabilityOptions = Field(default_factory=StabilityOptions)
    scan: ScanOptions = Field(default_factory=ScanOptions)
    graph: GraphOptions = Field(default_factory=GraphOptions)
    exponent: ExponentOptions = Field(default_factory=ExponentOptions)
    certify: CertifyOptions = Field(default_factory=CertifyOptions)

    def archival_dict(self) -> dict:
        return self.model_dump(mode="json", exclude={"threads", "output_dir"})

    def require(self, *fields: str):
        missing = [field for field in fields if getattr(self, field) is None]
        if missing:
            raise ConfigurationError(MALFORMED_CONFIG_ERROR, command=getattr(self.command, "value", None), missing=missing)

    def estimator_spec(self) -> EstimatorSpec:
        """
        The configured estimator, or the one the model is paired with.
        """
        self.require("model")
        if self.estimator is None:
            return EstimatorSpec.for_model(self.model)
        if self.estimator == EstimatorVariant.DERANDOMIZED:
            if not self.model.frames:
                raise ConfigurationError(MALFORMED_CONFIG_ERROR, field="estimator", info="derandomized shadows need model frames")
            return EstimatorSpec.derandomized(self.model.frames)
        if self.model.variant == ModelVariant.GENERIC:
            return EstimatorSpec.for_model(self.model)
        return EstimatorSpec.pauli_uniform(self.model.k)
