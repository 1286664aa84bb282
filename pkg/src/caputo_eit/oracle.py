"""Independent evaluators used to check the closed forms.

* :func:`caputo_quadrature` integrates the Caputo definition directly with
  a Gauss-Jacobi rule that absorbs the ``(1-s)**(-alpha)`` singularity.
* :func:`lc_quadrature` does the same for the Liouville-Caputo derivative
  (terminal at minus infinity) of rapidly decaying functions.
* :func:`lc_harmonic`, :func:`lc_gaussian_kummer` and
  :func:`lc_gaussian_hermite` are the Fourier-side closed forms.
* :func:`asymptotic_residual` measures how fast the Caputo derivative of
  ``sin`` approaches the Liouville-Caputo one for large arguments.

None of the quadrature routes touch the hypergeometric series.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from .errors import InvalidAlpha, OscillatoryRejected, PrecisionInsufficient, QuadratureDivergence
from .precision import DEFAULT, EvalResult, PrecisionConfig
from .quadrature import jacobi_integral, legendre_panels
from .specfun import gamma, hermite_fractional, hyp_at

__all__ = [
    "DecayClass",
    "Integrand",
    "caputo_quadrature",
    "lc_quadrature",
    "lc_harmonic",
    "lc_gaussian_kummer",
    "lc_gaussian_hermite",
    "asymptotic_residual",
    "gaussian_integrand",
]

_TAIL_LOG = math.log(1e16)


class DecayClass(str, enum.Enum):
    Compact01 = "compact"
    ExpDecay = "exp-decay"
    Oscillatory = "oscillatory"


@dataclass(frozen=True)
class Integrand:
    """First derivative ``f'(t)`` of the function being differentiated.

    ``eval`` must accept numpy arrays. For :attr:`DecayClass.ExpDecay`,
    ``decay_rate`` is the ``beta`` in a bound ``|f'(t)| <~ exp(-beta t^2)``.
    """

    eval: Callable
    decay_class: DecayClass = DecayClass.Compact01
    decay_rate: float | None = None


def gaussian_integrand(beta: float) -> Integrand:
    """``f'(t)`` for ``f(t) = exp(-beta t^2)``."""
    return Integrand(lambda t: -2.0 * beta * t * np.exp(-beta * t * t), DecayClass.ExpDecay, beta)


def _finite(value):
    if not math.isfinite(abs(value)):
        raise QuadratureDivergence("quadrature produced a non-finite value")
    return value.item() if isinstance(value, np.generic) else value


def caputo_quadrature(fprime: Integrand, alpha: float, x: float, cfg: PrecisionConfig = DEFAULT) -> EvalResult:
    """Caputo derivative by singular-kernel Gauss-Jacobi quadrature.

    Computes ``x**(1-alpha) / Gamma(1-alpha) * int_0^1 (1-s)**(-alpha) f'(x s) ds``
    with ``cfg.quad_nodes`` and twice as many nodes; the difference is the
    error estimate.
    """
    if not 0.0 < alpha < 1.0:
        raise InvalidAlpha(f"caputo_quadrature needs 0 < alpha < 1, got {alpha}")
    if x == 0.0:
        return EvalResult(0.0, 0.0, 0, True, 16, "quadrature")
    integral, err = jacobi_integral(lambda s: fprime.eval(x * s), cfg.quad_nodes, -alpha, 0.0)
    scale = x ** (1.0 - alpha) / gamma(1.0 - alpha)
    value = _finite(scale * integral)
    err = abs(scale) * err
    ok = err <= max(1.0, abs(value)) * 1e-12
    return EvalResult(value, err, 2 * cfg.quad_nodes, ok, 16, "quadrature")


def lc_quadrature(fprime: Integrand, alpha: float, x: float, cfg: PrecisionConfig = DEFAULT) -> EvalResult:
    """Liouville-Caputo derivative ``1/Gamma(1-a) int_0^inf u^{-a} f'(x-u) du``.

    The range is split at ``u = 1``: Gauss-Jacobi with weight ``u**(-alpha)``
    below, composite Gauss-Legendre panels above up to a cutoff where the
    Gaussian tail is below 1e-16.
    """
    if fprime.decay_class is not DecayClass.ExpDecay:
        raise OscillatoryRejected(
            f"Liouville-Caputo quadrature needs an exp-decay integrand, got {fprime.decay_class.value}"
        )
    if not 0.0 < alpha < 1.0:
        raise InvalidAlpha(f"lc_quadrature needs 0 < alpha < 1, got {alpha}")
    rate = fprime.decay_rate or 1.0
    # |f'(x - U)| < 1e-16 once beta (U - x)^2 exceeds ln(1e16); doubled for safety
    cutoff = max(1.0, x) + 2.0 * math.sqrt(_TAIL_LOG / rate) + 1.0
    near, err_near = jacobi_integral(lambda s: fprime.eval(x - s), cfg.quad_nodes, 0.0, -alpha)
    far, err_far = legendre_panels(
        lambda u: u ** (-alpha) * fprime.eval(x - u), 1.0, cutoff, max(16, cfg.quad_nodes // 2)
    )
    scale = 1.0 / gamma(1.0 - alpha)
    value = _finite(scale * (near + far))
    err = abs(scale) * (err_near + err_far)
    return EvalResult(value, err, 2 * cfg.quad_nodes, err <= 1e-10 * max(1.0, abs(value)), 16, "quadrature")


def lc_harmonic(alpha: float, beta: float, t: float) -> tuple[float, complex]:
    """Liouville-Caputo derivative of ``sin(beta t)`` and ``exp(i beta t)``.

    Both pick up a factor ``beta**alpha`` and a phase shift ``pi alpha / 2``.
    """
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")
    amp = beta**alpha
    phase = beta * t + 0.5 * math.pi * alpha
    return amp * math.sin(phase), amp * cmath.exp(1j * phase)


def lc_gaussian_kummer(alpha: float, beta: float, x: float, cfg: PrecisionConfig = DEFAULT) -> float:
    """Liouville-Caputo derivative of ``exp(-beta x^2)`` via Kummer functions.

    ``alpha Gamma(alpha/2)`` is evaluated as ``2 Gamma(1 + alpha/2)`` to
    remove the removable singularity at ``alpha = 0``.
    """
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")
    y = -x * x * beta
    even = math.cos(0.5 * math.pi * alpha) * gamma(0.5 * (alpha + 1.0)) * hyp_at(
        (0.5 * (alpha + 1.0),), (0.5,), y, cfg
    ).value
    s = math.sin(0.5 * math.pi * alpha)
    odd = 0.0
    if s != 0.0 and x != 0.0:
        odd = x * math.sqrt(beta) * s * 2.0 * gamma(1.0 + 0.5 * alpha) * hyp_at(
            (0.5 * alpha + 1.0,), (1.5,), y, cfg
        ).value
    return float(2.0**alpha * beta ** (0.5 * alpha) / math.sqrt(math.pi) * (even - odd))


def lc_gaussian_hermite(alpha: float, beta: float, x: float, cfg: PrecisionConfig = DEFAULT) -> float:
    """Liouville-Caputo derivative of ``exp(-beta x^2)`` as one Hermite function."""
    if not beta > 0:
        raise ValueError(f"beta must be positive, got {beta}")
    rb = math.sqrt(beta)
    return beta ** (0.5 * alpha) * math.exp(-beta * x * x) * hermite_fractional(alpha, -rb * x, cfg)


def asymptotic_residual(alpha: float, beta: float, t: float, cfg: PrecisionConfig = DEFAULT) -> tuple[float, float]:
    """Caputo minus Liouville-Caputo derivative of ``sin(beta t)``.

    Returns ``(residual, scaled)`` with ``scaled = residual * Gamma(-alpha)
    * beta * t**(1 + alpha)``, which tends to one as ``t`` grows.

    Raises
    ------
    PrecisionInsufficient
        If the series error estimate is not below ``1e-3 * |residual|``.
    """
    from .catalog import Kind, caputo_trig

    if not 0.0 < alpha < 1.0:
        raise InvalidAlpha(f"asymptotic_residual needs 0 < alpha < 1, got {alpha}")
    if beta * t >= 12.0 and cfg.working_digits < 34:
        cfg = replace(cfg, working_digits=34)
    res = caputo_trig(Kind.SinPow, 1, beta, alpha, t, cfg)
    lc, _ = lc_harmonic(alpha, beta, t)
    residual = res.value - lc
    err = res.abs_error_estimate + 4e-16 * (abs(res.value) + abs(lc))
    if not res.converged or not err < 1e-3 * abs(residual):
        raise PrecisionInsufficient(
            f"residual {residual:.3e} not certified: error estimate {err:.3e} at {res.working_digits} digits"
        )
    scaled = residual * gamma(-alpha) * beta * t ** (1.0 + alpha)
    return float(residual), float(scaled)
