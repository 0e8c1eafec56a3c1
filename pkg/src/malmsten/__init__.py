"""Log-log integral transcendents, their closed forms and Dirichlet-series identities.

Each catalogued identity is checked by computing its two sides along
independent numerical routes and comparing them.
"""
from ._kernels import BACKEND
from .errors import (BindingDomainError, BranchMismatchError, DomainError,
                     InvalidArgumentError, MalmstenError, NonFiniteIntegrandError,
                     NonFiniteTermError, PreconditionError, SingularArgumentError,
                     SingularPrefactorError, UnknownIdentityError)
from .malmsten import (RationalAngle, frakl_closed, frakl_integral, l_closed, l_integral,
                       relation_residual, relation_sides)
from .quad import EndpointHint, EvalResult, integrate_halfline, integrate_unit
from .registry import (IdentityRecord, ToleranceConfig, VerificationReport, evaluate_identity,
                       get_identity, list_identities, verify_all)
from .sfcore import EULER_GAMMA, digamma, euler_gamma, gamma, log_gamma
from .sumacc import (alternating_sum, feq_residual, feq_sides, l_series, log_l_series,
                     shifted_series, sin_log_series, twisted_series)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "EULER_GAMMA", "BindingDomainError", "BranchMismatchError", "DomainError",
    "EndpointHint", "EvalResult", "IdentityRecord", "InvalidArgumentError", "MalmstenError",
    "NonFiniteIntegrandError", "NonFiniteTermError", "PreconditionError", "RationalAngle",
    "SingularArgumentError", "SingularPrefactorError", "ToleranceConfig", "UnknownIdentityError",
    "VerificationReport", "alternating_sum", "digamma", "euler_gamma", "evaluate_identity",
    "feq_residual", "feq_sides", "frakl_closed", "frakl_integral", "gamma", "get_identity",
    "integrate_halfline", "integrate_unit", "l_closed", "l_integral", "l_series",
    "list_identities", "log_gamma", "log_l_series", "relation_residual", "relation_sides",
    "shifted_series", "sin_log_series", "twisted_series", "verify_all",
]
