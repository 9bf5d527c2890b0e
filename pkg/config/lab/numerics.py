from pydantic import BaseModel, ConfigDict, Field


class NumericsSettings(BaseModel):
    """
    Caps and tolerances shared by every module.
    Deliberately not environment sourced: a run is fully described by its config document.
    """

    model_config = ConfigDict(frozen=True)

    # ----------------------------
    # Size caps
    # ----------------------------
    DENSE_CAP: int = Field(default=12, description="Largest n for dense 2^n x 2^n matrices")
    SPARSE_EIGEN_CAP: int = Field(default=20, description="Largest n for the sparse extreme-eigenvalue path")
    STATEVECTOR_CAP: int = Field(default=14, description="Largest joint register simulated as a statevector")
    SHADOW_NORM_EXACT_CAP: int = Field(default=6, description="Largest n for exhaustive 6^n shadow-norm evaluation")
    SHADOW_ENUMERATION_CAP: int = Field(default=8, description="Largest n for any 6^n shadow-state sweep")
    EXACT_W1_CAP: int = Field(default=3, description="Largest n for the exact quantum W1 solver")
    S_SET_CAP: int = Field(default=6, description="Largest n for brute-force S-set scans")
    TRANSPORT_SUPPORT_CAP: int = Field(default=10_000, description="Largest combined support for transport solves")
    BRUTE_TUPLE_CAP: int = Field(default=100_000_000, description="Largest 6^(nmR) for brute cardinality counts")
    OVERLAP_ADMISSIBILITY_CAP: int = Field(default=20, description="Largest vertex count for exhaustive m-subset checks")

    # ----------------------------
    # Tolerances
    # ----------------------------
    HERMITIAN_TOL: float = 1e-12
    NORMALIZATION_TOL: float = 1e-8
    TRACE_TOL: float = 1e-10
    EIGEN_TOL: float = 1e-8
    MARGINAL_TOL: float = 1e-9
    WEIGHT_SUM_TOL: float = 1e-12
    W1_TOL: float = 1e-6
    W1_MAX_ITER: int = 100_000

    # ----------------------------
    # Sampling
    # ----------------------------
    REJECTION_RETRY_CAP: int = 10_000
    TRANSPORT_RESTARTS: int = 16
    HYPEREDGE_CONSTANT_B: float = 3.0
    FEASIBILITY_SLACK: float = 1e-6
    WITNESS_LIMIT: int = 10

    # ----------------------------
    # Execution
    # ----------------------------
    THREADS: int = 1
    CSV_SCHEMA_VERSION: int = 1


numerics_config = NumericsSettings()
