"""Generalized Euler integral transform of a hypergeometric function with a
power-law argument.

A beta-weighted integral

    prefactor * int_0^1 t**(c-1) (1-t)**(d-c-1) AFB(a; b; z t**m) dt

equals ``prefactor * B(c, d-c) * (A+m)F(B+m)`` with the ``m`` extra upper
parameters ``(c+j)/m`` and lower parameters ``(d+j)/m``. This module
builds that rewrite, removes parameter pairs that cancel, and checks the
rewrite against direct Gauss-Jacobi quadrature of the integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import InvalidAlpha, QuadratureDivergence
from .precision import DEFAULT, PrecisionConfig
from .quadrature import jacobi_integral
from .specfun import PfqParams, gamma, hyp_many

__all__ = [
    "KernelMatch",
    "EulerKernel",
    "match_kernel",
    "eit_transform",
    "simplify_params",
    "eit_numeric_check",
    "eit_quadrature",
]

CANCEL_EPS = 1e-12


@dataclass(frozen=True)
class KernelMatch:
    """Exponents read off a rescaled Caputo integrand.

    ``t_exponent`` is the power of ``t`` multiplying the hypergeometric
    factor and ``arg_power`` the power of ``t`` inside its argument.
    """

    n: int
    alpha: float
    t_exponent: int
    arg_power: int


def match_kernel(match: KernelMatch) -> tuple[float, float, int]:
    """Solve for the beta-kernel constants ``(c, d, m)``.

    The Caputo kernel ``(1-t)**(-alpha)`` fixes ``d - c - 1 = -alpha``; the
    remaining equations are ``c - 1 = t_exponent`` and ``m = arg_power``.
    """
    if not 0.0 <= match.alpha < 1.0:
        raise InvalidAlpha(f"beta kernel needs 0 <= alpha < 1, got {match.alpha}")
    if match.arg_power < 1:
        raise ValueError(f"arg_power must be >= 1, got {match.arg_power}")
    if match.t_exponent < 0:
        raise ValueError(f"t_exponent must be >= 0, got {match.t_exponent}")
    c = float(match.t_exponent + 1)
    d = c + 1.0 - match.alpha
    return c, d, int(match.arg_power)


@dataclass(frozen=True)
class EulerKernel:
    """One generalized Euler transform integral, evaluated at ``x``.

    ``inner`` carries the argument map ``z(x) = scale * x**power``; inside
    the integral it is evaluated at ``z(x) * t**m``.

    ``reduced_prefactor``, when given, equals ``prefactor * Gamma(d - c)``.
    The Caputo prefactor contains ``1 / Gamma(1 - alpha)`` and the beta
    integral contributes ``Gamma(d - c) = Gamma(1 - alpha)``; carrying the
    product keeps the closed form free of that pole as alpha -> 1.
    """

    c: float
    d: float
    m: int
    prefactor: float | complex
    inner: PfqParams
    x: float = 1.0
    reduced_prefactor: float | complex | None = None

    def __post_init__(self):
        if not self.c > 0:
            raise ValueError(f"kernel needs c > 0, got {self.c}")
        if not self.d > self.c:
            raise ValueError(f"kernel needs d > c, got c={self.c}, d={self.d}")
        if self.m < 1 or int(self.m) != self.m:
            raise ValueError(f"kernel needs a positive integer m, got {self.m}")

    @classmethod
    def from_reduced(cls, c, d, m, reduced_prefactor, inner, x=1.0) -> EulerKernel:
        prefactor = reduced_prefactor / gamma(d - c) if reduced_prefactor != 0 else 0.0 * reduced_prefactor
        return cls(c, d, m, prefactor, inner, x, reduced_prefactor)

    @property
    def z(self):
        return self.inner.argument(self.x)


def eit_transform(kernel: EulerKernel) -> PfqParams:
    """Rewrite the kernel integral as one higher-order hypergeometric function."""
    c, d, m = kernel.c, kernel.d, kernel.m
    inner = kernel.inner
    upper = inner.upper + tuple((c + j) / m for j in range(m))
    lower = inner.lower + tuple((d + j) / m for j in range(m))
    if kernel.reduced_prefactor is not None:
        coeff = kernel.reduced_prefactor * gamma(c) / gamma(d)
    else:
        coeff = kernel.prefactor * gamma(d - c) * gamma(c) / gamma(d)
    return PfqParams(upper, lower, coeff * inner.coefficient, inner.argument_scale, inner.argument_power)


def simplify_params(p: PfqParams, eps: float = CANCEL_EPS) -> PfqParams:
    """Drop upper/lower parameter pairs that agree to within ``eps``.

    Each lower entry cancels at most one upper entry; order of the
    survivors is kept.
    """
    lower = list(p.lower)
    upper = []
    for u in p.upper:
        for i, v in enumerate(lower):
            if abs(u - v) <= eps:
                del lower[i]
                break
        else:
            upper.append(u)
    return replace(p, upper=tuple(upper), lower=tuple(lower))


def eit_quadrature(kernel: EulerKernel, cfg: PrecisionConfig = DEFAULT) -> tuple[float | complex, float]:
    """Prefactor times the kernel integral by Gauss-Jacobi quadrature.

    Returns the value and the node-doubling error estimate.
    """
    c, d, m = kernel.c, kernel.d, kernel.m
    inner = kernel.inner
    z = kernel.z

    def integrand(t):
        arr = hyp_many(inner.upper, inner.lower, z * t**m, cfg, inner.coefficient)
        if not np.all(np.isfinite(arr)):
            raise QuadratureDivergence("kernel integrand is not finite at a quadrature node")
        return arr

    value, err = jacobi_integral(integrand, cfg.quad_nodes, d - c - 1.0, c - 1.0)
    pref = kernel.prefactor
    if isinstance(value, np.generic):
        value = value.item()
    return pref * value, abs(pref) * err


def eit_numeric_check(kernel: EulerKernel, cfg: PrecisionConfig = DEFAULT) -> float | complex:
    """Evaluate the kernel integral directly; compare with the transformed series."""
    value, _ = eit_quadrature(kernel, cfg)
    if not (math.isfinite(abs(value))):
        raise QuadratureDivergence("kernel quadrature returned a non-finite value")
    return value
