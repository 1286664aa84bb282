from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PrecisionConfig:
    """Per-call numerical settings.

    Attributes
    ----------
    rel_tol : float
        Target relative tolerance of series sums.
    max_terms : int
        Hard cap on the number of series terms.
    working_digits : int
        Starting decimal precision. 16 means IEEE double; larger values
        switch the series summation to multiprecision arithmetic.
    quad_nodes : int
        Gauss-Jacobi node count for the quadrature routes. The error
        estimate uses a second rule with twice as many nodes.
    cancellation_threshold : float
        ``|z|`` above which an alternating series starts directly at
        ``max(34, working_digits)`` digits.
    """

    rel_tol: float = 1e-14
    max_terms: int = 10_000
    working_digits: int = 16
    quad_nodes: int = 64
    cancellation_threshold: float = 30.0

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")
        if self.working_digits < 16:
            raise ValueError(f"working_digits must be >= 16, got {self.working_digits}")
        if self.quad_nodes < 2:
            raise ValueError(f"quad_nodes must be >= 2, got {self.quad_nodes}")
        if not self.cancellation_threshold >= 0:
            raise ValueError(f"cancellation_threshold must be >= 0, got {self.cancellation_threshold}")

    @property
    def extended(self) -> bool:
        return self.working_digits > 16


DEFAULT = PrecisionConfig()


@dataclass(frozen=True)
class EvalResult:
    """A numeric value together with how it was obtained.

    ``converged`` implies ``abs_error_estimate <= rel_tol * max(1, |value|)``.
    ``method`` is one of ``"series"``, ``"polynomial"``, ``"continuation"``,
    ``"closed"`` (elementary closed form) or ``"quadrature"``.
    """

    value: float | complex
    abs_error_estimate: float
    terms_used: int
    converged: bool
    working_digits: int = 16
    method: str = "series"

    def __float__(self):
        return float(self.value)

    def scaled(self, factor) -> EvalResult:
        """Return the result multiplied by a scalar, error scaled alongside."""
        return EvalResult(
            self.value * factor,
            self.abs_error_estimate * abs(factor),
            self.terms_used,
            self.converged,
            self.working_digits,
            self.method,
        )
