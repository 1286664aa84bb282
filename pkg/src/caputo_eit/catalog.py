"""Closed-form Caputo derivatives of the elementary function catalog.

Every family with ``0 < alpha < 1`` goes through the same pipeline: read
the beta kernel off the rescaled Caputo integrand (:func:`build_kernel`),
rewrite it with :func:`~caputo_eit.eit.eit_transform`, cancel matched
parameters and sum the resulting series. ``alpha = 0`` gives
``f(x) - f(0)`` and ``alpha = 1`` the classical derivative.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .eit import EulerKernel, KernelMatch, eit_transform, match_kernel, simplify_params
from .errors import DomainError, InvalidAlpha, XiZero
from .precision import DEFAULT, EvalResult, PrecisionConfig
from .specfun import PfqParams, pfq

__all__ = [
    "Kind",
    "CatalogEntry",
    "CaputoRequest",
    "caputo",
    "caputo_trig",
    "caputo_planewave",
    "caputo_inverse_trig",
    "caputo_exp",
    "caputo_lorentzian",
    "caputo_shifted_poly",
    "build_kernel",
    "closed_form_params",
    "function_value",
    "classical_derivative",
]


class Kind(str, enum.Enum):
    SinPow = "sin"
    CosPow = "cos"
    SinhPow = "sinh"
    CoshPow = "cosh"
    PlaneWave = "planewave"
    ArcsinPow = "arcsin"
    ArccosPow = "arccos"
    ArctanPow = "arctan"
    ArccotPow = "arccot"
    ExpPow = "exp"
    Lorentzian = "lorentzian"
    ShiftedPoly = "shifted-poly"


TRIG = (Kind.SinPow, Kind.CosPow, Kind.SinhPow, Kind.CoshPow)
INVERSE_TRIG = (Kind.ArcsinPow, Kind.ArccosPow, Kind.ArctanPow, Kind.ArccotPow)


@dataclass(frozen=True)
class CatalogEntry:
    """One function family.

    ``beta`` is the scale of the argument, ``(beta x)**n``; for the
    Lorentzian it is the width ``gamma``. ``xi`` is only used by the
    shifted polynomial ``(x + xi)**n``.
    """

    kind: Kind
    n: int = 1
    beta: float = 1.0
    xi: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.n < 1 or int(self.n) != self.n:
            raise DomainError(f"power n must be a positive integer, got {self.n}")
        if self.kind is Kind.ShiftedPoly:
            if self.xi == 0:
                raise XiZero("shifted polynomial needs xi != 0")
        elif not self.beta > 0:
            raise DomainError(f"scale must be positive, got {self.beta}")
        if self.kind in (Kind.Lorentzian, Kind.PlaneWave) and self.n != 1:
            raise DomainError(f"{self.kind.value} has no power parameter (n must be 1)")


@dataclass(frozen=True)
class CaputoRequest:
    entry: CatalogEntry
    alpha: float
    x: float

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise InvalidAlpha(f"alpha must lie in [0, 1], got {self.alpha}")
        if not self.x >= 0.0:
            raise DomainError(f"Caputo derivative with terminal 0 needs x >= 0, got {self.x}")


def _lorentz(x, gam):
    return (gam / 2.0) / (math.pi * (x * x + gam * gam / 4.0))


def function_value(entry: CatalogEntry, x: float):
    """The catalog function itself."""
    k, n, b = entry.kind, entry.n, entry.beta
    u = (b * x) ** n
    if k is Kind.SinPow:
        return math.sin(u)
    if k is Kind.CosPow:
        return math.cos(u)
    if k is Kind.SinhPow:
        return math.sinh(u)
    if k is Kind.CoshPow:
        return math.cosh(u)
    if k is Kind.PlaneWave:
        return cmath.exp(1j * b * x)
    if k is Kind.ArcsinPow:
        return math.asin(u)
    if k is Kind.ArccosPow:
        return math.acos(u)
    if k is Kind.ArctanPow:
        return math.atan(u)
    if k is Kind.ArccotPow:
        return math.pi / 2.0 - math.atan(u)
    if k is Kind.ExpPow:
        return math.exp(-u)
    if k is Kind.Lorentzian:
        return _lorentz(x, b)
    return (x + entry.xi) ** n


def classical_derivative(entry: CatalogEntry, x: float):
    """First derivative ``f'(x)``; the ``alpha = 1`` member of each family."""
    k, n, b = entry.kind, entry.n, entry.beta
    u = (b * x) ** n
    du = n * b**n * x ** (n - 1)
    if k is Kind.SinPow:
        return du * math.cos(u)
    if k is Kind.CosPow:
        return -du * math.sin(u)
    if k is Kind.SinhPow:
        return du * math.cosh(u)
    if k is Kind.CoshPow:
        return du * math.sinh(u)
    if k is Kind.PlaneWave:
        return 1j * b * cmath.exp(1j * b * x)
    if k in (Kind.ArcsinPow, Kind.ArccosPow):
        sign = 1.0 if k is Kind.ArcsinPow else -1.0
        return sign * du / math.sqrt(1.0 - u * u)
    if k in (Kind.ArctanPow, Kind.ArccotPow):
        sign = 1.0 if k is Kind.ArctanPow else -1.0
        return sign * du / (1.0 + u * u)
    if k is Kind.ExpPow:
        return -du * math.exp(-u)
    if k is Kind.Lorentzian:
        return -(b / math.pi) * x / (x * x + b * b / 4.0) ** 2
    return n * (x + entry.xi) ** (n - 1)


def _check_domain(entry: CatalogEntry, x: float, strict: bool = True):
    if entry.kind in (Kind.ArcsinPow, Kind.ArccosPow):
        bx = entry.beta * x
        if bx > 1.0 or (strict and bx >= 1.0):
            raise DomainError(f"{entry.kind.value} needs |beta x| < 1, got beta*x = {bx}")


def build_kernel(entry: CatalogEntry, alpha: float, x: float) -> EulerKernel:
    """Beta kernel of the rescaled Caputo integral for ``0 <= alpha < 1``.

    The returned kernel stores ``Gamma(1 - alpha)`` times the Caputo
    prefactor, so the transform never evaluates the ``Gamma(1 - alpha)``
    pair that cancels.
    """
    k, n, b = entry.kind, entry.n, entry.beta
    if k is Kind.PlaneWave:
        raise DomainError("plane wave is a sum of two kernels; use the cos and sin entries")
    half, three_halves = 0.5, 1.5
    if k in (Kind.SinPow, Kind.SinhPow):
        # n b^n t^{n-1} cos((bt)^n), cos(u) = 0F1(;1/2;-u^2/4)
        sign_z = -1.0 if k is Kind.SinPow else 1.0
        inner = PfqParams((), (half,), 1.0, sign_z * b ** (2 * n) / 4.0, 2 * n)
        reduced = n * b**n * x ** (n - alpha)
        match = KernelMatch(n, alpha, n - 1, 2 * n)
    elif k in (Kind.CosPow, Kind.CoshPow):
        # -n b^n t^{n-1} sin((bt)^n), sin(u) = u 0F1(;3/2;-u^2/4)
        sign_z = -1.0 if k is Kind.CosPow else 1.0
        sign = -1.0 if k is Kind.CosPow else 1.0
        inner = PfqParams((), (three_halves,), 1.0, sign_z * b ** (2 * n) / 4.0, 2 * n)
        reduced = sign * n * b ** (2 * n) * x ** (2 * n - alpha)
        match = KernelMatch(n, alpha, 2 * n - 1, 2 * n)
    elif k in (Kind.ArcsinPow, Kind.ArccosPow):
        # (1 - w)^{-1/2} = 2F1(1, 1/2; 1; w)
        sign = 1.0 if k is Kind.ArcsinPow else -1.0
        inner = PfqParams((1.0, half), (1.0,), 1.0, b ** (2 * n), 2 * n)
        reduced = sign * n * b**n * x ** (n - alpha)
        match = KernelMatch(n, alpha, n - 1, 2 * n)
    elif k in (Kind.ArctanPow, Kind.ArccotPow):
        # (1 + w)^{-1} = 2F1(1, 1; 1; -w)
        sign = 1.0 if k is Kind.ArctanPow else -1.0
        inner = PfqParams((1.0, 1.0), (1.0,), 1.0, -(b ** (2 * n)), 2 * n)
        reduced = sign * n * b**n * x ** (n - alpha)
        match = KernelMatch(n, alpha, n - 1, 2 * n)
    elif k is Kind.ExpPow:
        # exp(-w) = 1F1(1; 1; -w)
        inner = PfqParams((1.0,), (1.0,), 1.0, -(b**n), n)
        reduced = -n * b**n * x ** (n - alpha)
        match = KernelMatch(n, alpha, n - 1, n)
    elif k is Kind.Lorentzian:
        # (1 + w)^{-2} = 2F1(2, 1; 1; -w), w = 4 (x t / gamma)^2
        inner = PfqParams((2.0, 1.0), (1.0,), 1.0, -4.0 / (b * b), 2)
        reduced = -16.0 * x ** (2.0 - alpha) / (math.pi * b**3)
        match = KernelMatch(1, alpha, 1, 2)
    else:
        # (1 + w)^{n-1} = 2F1(1-n, 1; 1; -w), w = x t / xi
        xi = entry.xi
        inner = PfqParams((1.0 - n, 1.0), (1.0,), 1.0, -1.0 / xi, 1)
        reduced = n * xi ** (n - 1) * x ** (1.0 - alpha)
        match = KernelMatch(n, alpha, 0, 1)
    c, d, m = match_kernel(match)
    return EulerKernel.from_reduced(c, d, m, reduced, inner, x)


def closed_form_params(entry: CatalogEntry, alpha: float, x: float) -> PfqParams:
    """Simplified hypergeometric parameters of the closed form at ``(alpha, x)``."""
    return simplify_params(eit_transform(build_kernel(entry, alpha, x)))


def _interior(entry: CatalogEntry, alpha: float, x: float, cfg: PrecisionConfig) -> EvalResult:
    if x == 0.0:
        return EvalResult(0.0, 0.0, 0, True, 16, "closed")
    return pfq(closed_form_params(entry, alpha, x), x, cfg)


def _closed(value) -> EvalResult:
    return EvalResult(value, 4e-16 * abs(value), 0, True, 16, "closed")


def _check_alpha_open(alpha):
    if not 0.0 < alpha < 1.0:
        raise InvalidAlpha(f"closed-form series needs 0 < alpha < 1, got {alpha}")


def caputo_trig(kind, n: int, beta: float, alpha: float, x: float, cfg: PrecisionConfig = DEFAULT) -> EvalResult:
    """Caputo derivative of sin, cos, sinh or cosh of ``(beta x)**n``."""
    kind = Kind(kind)
    if kind not in TRIG:
        raise DomainError(f"{kind.value} is not a trigonometric/hyperbolic family")
    _check_alpha_open(alpha)
    return _interior(CatalogEntry(kind, n, beta), alpha, x, cfg)


def caputo_planewave(beta: float, alpha: float, x: float, cfg: PrecisionConfig = DEFAULT) -> EvalResult:
    """Caputo derivative of ``exp(i beta x)`` as ``D cos + i D sin``."""
    re = caputo_trig(Kind.CosPow, 1, beta, alpha, x, cfg)
    im = caputo_trig(Kind.SinPow, 1, beta, alpha, x, cfg)
    return EvalResult(
        complex(re.value, im.value),
        math.hypot(re.abs_error_estimate, im.abs_error_estimate),
        re.terms_used + im.terms_used,
        re.converged and im.converged,
        max(re.working_digits, im.working_digits),
        re.method if re.method == im.method else f"{re.method}+{im.method}",
    )


def caputo_inverse_trig(kind, n: int, beta: float, alpha: float, x: float, cfg: PrecisionConfig = DEFAULT) -> EvalResult:
    """Caputo derivative of arcsin, arccos, arctan or arccot of ``(beta x)**n``.

    arccos and arccot reuse the arcsin/arctan series with the opposite sign.
    """
    kind = Kind(kind)
    if kind not in INVERSE_TRIG:
        raise DomainError(f"{kind.value} is not an inverse trigonometric family")
    _check_alpha_open(alpha)
    entry = CatalogEntry(kind, n, beta)
    _check_domain(entry, x)
    base = {Kind.ArccosPow: Kind.ArcsinPow, Kind.ArccotPow: Kind.ArctanPow}.get(kind, kind)
    out = _interior(CatalogEntry(base, n, beta), alpha, x, cfg)
    return out.scaled(-1.0) if base is not kind else out


def caputo_exp(n: int, beta: float, alpha: float, x: float, cfg: PrecisionConfig = DEFAULT) -> EvalResult:
    """Caputo derivative of ``exp(-(beta x)**n)``; n = 2 is the Gaussian."""
    _check_alpha_open(alpha)
    return _interior(CatalogEntry(Kind.ExpPow, n, beta), alpha, x, cfg)


def caputo_lorentzian(gamma: float, alpha: float, x: float, cfg: PrecisionConfig = DEFAULT) -> EvalResult:
    """Caputo derivative of the Lorentzian of full width ``gamma``."""
    _check_alpha_open(alpha)
    return _interior(CatalogEntry(Kind.Lorentzian, 1, gamma), alpha, x, cfg)


def caputo_shifted_poly(n: int, xi: float, alpha: float, x: float, cfg: PrecisionConfig = DEFAULT) -> EvalResult:
    """Caputo derivative of ``(x + xi)**n``; the series terminates after n terms."""
    _check_alpha_open(alpha)
    return _interior(CatalogEntry(Kind.ShiftedPoly, n, 1.0, xi), alpha, x, cfg)


def caputo(req: CaputoRequest, cfg: PrecisionConfig = DEFAULT) -> EvalResult:
    """Caputo derivative of any catalog entry for ``0 <= alpha <= 1``."""
    entry, alpha, x = req.entry, req.alpha, req.x
    _check_domain(entry, x, strict=alpha > 0.0)
    if alpha == 0.0:
        return _closed(function_value(entry, x) - function_value(entry, 0.0))
    if alpha == 1.0:
        return _closed(classical_derivative(entry, x))
    k = entry.kind
    if k in TRIG:
        return caputo_trig(k, entry.n, entry.beta, alpha, x, cfg)
    if k is Kind.PlaneWave:
        return caputo_planewave(entry.beta, alpha, x, cfg)
    if k in INVERSE_TRIG:
        return caputo_inverse_trig(k, entry.n, entry.beta, alpha, x, cfg)
    if k is Kind.ExpPow:
        return caputo_exp(entry.n, entry.beta, alpha, x, cfg)
    if k is Kind.Lorentzian:
        return caputo_lorentzian(entry.beta, alpha, x, cfg)
    return caputo_shifted_poly(entry.n, entry.xi, alpha, x, cfg)
