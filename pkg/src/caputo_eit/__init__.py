"""Closed-form Caputo fractional derivatives through the generalized Euler
integral transform, with quadrature oracles that check every closed form."""

from .errors import (
    CaputoEITError,
    DomainError,
    NoConvergence,
    NumericalError,
    PoleError,
    PrecisionInsufficient,
)
from .precision import DEFAULT, EvalResult, PrecisionConfig
from .specfun import PfqParams, gamma, hermite_fractional, kummer_u, pfq, pochhammer
from .catalog import CaputoRequest, CatalogEntry, Kind, caputo

__version__ = "0.1.0"
