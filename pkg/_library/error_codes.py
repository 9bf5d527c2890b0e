from _library.dataclass import Audience, ErrorResponse, Severity

# ------------------------------------------------------------------------------
# Size caps (1xxx)
# ------------------------------------------------------------------------------
# 1001 DENSE CAP
DENSE_CAP_ERROR = ErrorResponse(
    code=1001,
    severity=Severity.ERROR,
    message="Qubit count exceeds the dense-matrix cap",
    audience=Audience.USER,
    hint="lower n or pass --dense-cap",
    data={},
).model_dump()

# 1002 STATEVECTOR CAP
STATEVECTOR_CAP_ERROR = ErrorResponse(
    code=1002,
    severity=Severity.ERROR,
    message="Joint register exceeds the statevector cap",
    audience=Audience.USER,
    hint="use fewer ancilla or bath qubits",
    data={},
).model_dump()

# 1003 ENUMERATION CAP
ENUMERATION_CAP_ERROR = ErrorResponse(
    code=1003,
    severity=Severity.ERROR,
    message="Exhaustive enumeration exceeds its cap",
    audience=Audience.USER,
    hint="lower n, m or R",
    data={},
).model_dump()

# ------------------------------------------------------------------------------
# Shapes and domains (2xxx)
# ------------------------------------------------------------------------------
# 2001 LENGTH MISMATCH
LENGTH_MISMATCH_ERROR = ErrorResponse(
    code=2001,
    severity=Severity.ERROR,
    message="Operands have different qubit counts",
    audience=Audience.DEVELOPER,
    data={},
).model_dump()

# 2002 UNNORMALIZED STATE
UNNORMALIZED_STATE_ERROR = ErrorResponse(
    code=2002,
    severity=Severity.ERROR,
    message="State vector is not normalized",
    audience=Audience.DEVELOPER,
    data={},
).model_dump()

# 2003 INCOMPATIBLE ESTIMATOR
INCOMPATIBLE_ESTIMATOR_ERROR = ErrorResponse(
    code=2003,
    severity=Severity.ERROR,
    message="Estimator is not compatible with the model",
    audience=Audience.USER,
    data={},
).model_dump()

# 2004 MARGINAL MISMATCH
MARGINAL_MISMATCH_ERROR = ErrorResponse(
    code=2004,
    severity=Severity.ERROR,
    message="Mixture weights do not sum to one",
    audience=Audience.DEVELOPER,
    data={},
).model_dump()

# 2005 NONZERO TRACE
NONZERO_TRACE_ERROR = ErrorResponse(
    code=2005,
    severity=Severity.ERROR,
    message="Operator must be Hermitian and traceless",
    audience=Audience.DEVELOPER,
    data={},
).model_dump()

# 2006 NON-STOCHASTIC CHANNEL
NON_STOCHASTIC_ERROR = ErrorResponse(
    code=2006,
    severity=Severity.ERROR,
    message="Site channel is not a stochastic matrix",
    audience=Audience.DEVELOPER,
    data={},
).model_dump()

# 2007 PARAMETER DOMAIN
PARAMETER_DOMAIN_ERROR = ErrorResponse(
    code=2007,
    severity=Severity.ERROR,
    message="Parameter outside its domain",
    audience=Audience.USER,
    data={},
).model_dump()

# 2008 SINGULAR COVARIANCE
SINGULAR_COVARIANCE_ERROR = ErrorResponse(
    code=2008,
    severity=Severity.ERROR,
    message="Covariance matrix is singular or not positive definite",
    audience=Audience.USER,
    data={},
).model_dump()

# 2009 INDEX OUT OF RANGE
INDEX_OUT_OF_RANGE_ERROR = ErrorResponse(
    code=2009,
    severity=Severity.ERROR,
    message="Index out of range",
    audience=Audience.DEVELOPER,
    data={},
).model_dump()

# 2010 MISSING GEOMETRY
MISSING_GEOMETRY_ERROR = ErrorResponse(
    code=2010,
    severity=Severity.ERROR,
    message="Algorithm variant requires model geometry that was not supplied",
    audience=Audience.USER,
    data={},
).model_dump()

# 2011 MISSING BUNDLE
MISSING_BUNDLE_ERROR = ErrorResponse(
    code=2011,
    severity=Severity.ERROR,
    message="Shadow bundle missing for a replica or path step",
    audience=Audience.DEVELOPER,
    data={},
).model_dump()

# 2012 NON-COMMUTING BLOCK
NON_COMMUTING_BLOCK_ERROR = ErrorResponse(
    code=2012,
    severity=Severity.ERROR,
    message="Cost block contains anticommuting terms",
    audience=Audience.DEVELOPER,
    data={},
).model_dump()

# ------------------------------------------------------------------------------
# Numerical procedures (3xxx)
# ------------------------------------------------------------------------------
# 3001 REJECTION CAP
REJECTION_CAP_ERROR = ErrorResponse(
    code=3001,
    severity=Severity.ERROR,
    message="Rejection sampling exhausted its retry cap",
    audience=Audience.USER,
    hint="raise degree_cap",
    data={},
).model_dump()

# 3002 EIGEN NON-CONVERGENCE
EIGEN_CONVERGENCE_ERROR = ErrorResponse(
    code=3002,
    severity=Severity.ERROR,
    message="Extreme eigenvalue solver did not converge",
    audience=Audience.DEVELOPER,
    data={},
).model_dump()

# 3003 AUDIT FAILURE
AUDIT_FAILURE_ERROR = ErrorResponse(
    code=3003,
    severity=Severity.WARNING,
    message="Structural audit failed",
    audience=Audience.DEVELOPER,
    data={},
).model_dump()

# ------------------------------------------------------------------------------
# Configuration (4xxx)
# ------------------------------------------------------------------------------
# 4001 MALFORMED CONFIG
MALFORMED_CONFIG_ERROR = ErrorResponse(
    code=4001,
    severity=Severity.ERROR,
    message="Experiment configuration is malformed",
    audience=Audience.USER,
    hint="see the data field for the offending keys",
    data={},
).model_dump()
