# ------------------------------------------------------------------------------
# Import modular lab configuration sections
# Each config is isolated so operations, tests and the CLI read one source of truth
# ------------------------------------------------------------------------------
from config.lab.base import lab_config
from config.lab.logging import logging_config
from config.lab.numerics import numerics_config

# ------------------------------------------------------------------------------
# Core project paths
# ------------------------------------------------------------------------------
BASE_DIR = lab_config.BASE_DIR

# Default output directory (QOGP_OUTPUT_DIR overrides)
OUTPUT_DIR = lab_config.OUTPUT_DIR

TOOL_NAME = lab_config.TOOL_NAME


# ------------------------------------------------------------------------------
# Size caps
# ------------------------------------------------------------------------------
# Dense 2^n x 2^n matrices (oracle backend)
DENSE_CAP = numerics_config.DENSE_CAP

# Sparse extreme-eigenvalue path
SPARSE_EIGEN_CAP = numerics_config.SPARSE_EIGEN_CAP

# System + ancilla/bath qubits simulated as one statevector
STATEVECTOR_CAP = numerics_config.STATEVECTOR_CAP

# 6^n enumerations
SHADOW_NORM_EXACT_CAP = numerics_config.SHADOW_NORM_EXACT_CAP
SHADOW_ENUMERATION_CAP = numerics_config.SHADOW_ENUMERATION_CAP
S_SET_CAP = numerics_config.S_SET_CAP

# Exact quantum W1
EXACT_W1_CAP = numerics_config.EXACT_W1_CAP

# Transport and brute-force counting
TRANSPORT_SUPPORT_CAP = numerics_config.TRANSPORT_SUPPORT_CAP
BRUTE_TUPLE_CAP = numerics_config.BRUTE_TUPLE_CAP
OVERLAP_ADMISSIBILITY_CAP = numerics_config.OVERLAP_ADMISSIBILITY_CAP


# ------------------------------------------------------------------------------
# Tolerances
# ------------------------------------------------------------------------------
HERMITIAN_TOL = numerics_config.HERMITIAN_TOL
NORMALIZATION_TOL = numerics_config.NORMALIZATION_TOL
TRACE_TOL = numerics_config.TRACE_TOL
EIGEN_TOL = numerics_config.EIGEN_TOL
MARGINAL_TOL = numerics_config.MARGINAL_TOL
WEIGHT_SUM_TOL = numerics_config.WEIGHT_SUM_TOL
W1_TOL = numerics_config.W1_TOL
W1_MAX_ITER = numerics_config.W1_MAX_ITER


# ------------------------------------------------------------------------------
# Sampling
# ------------------------------------------------------------------------------
REJECTION_RETRY_CAP = numerics_config.REJECTION_RETRY_CAP
TRANSPORT_RESTARTS = numerics_config.TRANSPORT_RESTARTS

# Constant b of the maximum-degree estimate
HYPEREDGE_CONSTANT_B = numerics_config.HYPEREDGE_CONSTANT_B

# Finite-n surrogate for 1 - exp(-o(n))
FEASIBILITY_SLACK = numerics_config.FEASIBILITY_SLACK

WITNESS_LIMIT = numerics_config.WITNESS_LIMIT


# ------------------------------------------------------------------------------
# Execution
# ------------------------------------------------------------------------------
THREADS = numerics_config.THREADS
CSV_SCHEMA_VERSION = numerics_config.CSV_SCHEMA_VERSION


# ------------------------------------------------------------------------------
# Logging
# ------------------------------------------------------------------------------
LOGGING = logging_config.LOGGING
