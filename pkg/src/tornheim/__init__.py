"""Tornheim double series, Hurwitz zeta integrals and Bernoulli algebra.

Importing the package sets the mpmath working precision to 30 digits, or to
``TORNHEIM_PREC`` when that variable is set.  Use :func:`set_precision` to
change it afterwards.
"""

from tornheim.numeric import (
    DEFAULT_DPS,
    EvalResult,
    Method,
    Real,
    get_precision,
    precision_from_env,
    set_precision,
)

__version__ = "0.1.0"

try:
    set_precision(precision_from_env(DEFAULT_DPS))
except ValueError:
    # a malformed TORNHEIM_PREC is reported by the command line front end
    set_precision(DEFAULT_DPS)

from tornheim.core.params import ConvergenceError, ParamTriple, UnsupportedError  # noqa: E402
from tornheim.specfun import DomainError, PoleError  # noqa: E402
from tornheim.core.dispatch import METHODS, evaluate  # noqa: E402

__all__ = [
    "DEFAULT_DPS",
    "ConvergenceError",
    "DomainError",
    "EvalResult",
    "METHODS",
    "Method",
    "ParamTriple",
    "PoleError",
    "Real",
    "UnsupportedError",
    "evaluate",
    "get_precision",
    "set_precision",
]
