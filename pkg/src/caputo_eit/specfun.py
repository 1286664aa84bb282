"""Scalar special functions: gamma, Pochhammer, generalized hypergeometric
series, the Tricomi function U and the real-order Hermite function.

All routines are pure; precision travels in a :class:`PrecisionConfig`
argument instead of global state. Multiprecision sums use a private
``mpmath.MPContext`` per call so that concurrent callers never share a
precision setting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import DomainError, IntegerB, LowerParamPole, NoConvergence, PoleError
from .precision import DEFAULT, EvalResult, PrecisionConfig

__all__ = [
    "PfqParams",
    "gamma",
    "rgamma",
    "pochhammer",
    "pfq",
    "hyp_at",
    "hyp_many",
    "kummer_u",
    "hermite_fractional",
]

_EPS = 2.220446049250313e-16
_INT_TOL = 1e-12
_MAX_DIGITS = 400

def _nonpositive_integer(v) -> int | None:
    """Return ``-v`` as an int when ``v`` is 0, -1, -2, ..., else None."""
    if isinstance(v, complex):
        if abs(v.imag) > _INT_TOL:
            return None
        v = v.real
    r = round(float(v))
    if r <= 0 and abs(float(v) - r) <= _INT_TOL:
        return -r
    return None


def gamma(x, cfg: PrecisionConfig = DEFAULT):
    """Euler's gamma function for real ``x``.

    Uses ``math.gamma`` at double precision and ``mpmath`` at
    ``cfg.working_digits > 16``; the extended branch returns an ``mpf``.

    Raises
    ------
    PoleError
        If ``x`` is zero or a negative integer.
    """
    if _nonpositive_integer(x) is not None:
        raise PoleError(f"gamma has a pole at {x}")
    if cfg.extended:
        ctx = mpmath.MPContext()
        ctx.dps = cfg.working_digits
        return ctx.gamma(ctx.mpf(x))
    x = float(x)
    try:
        return math.gamma(x)
    except OverflowError:
        # huge for large x, below the smallest double for very negative x
        return math.inf if x > 0 else 0.0


def rgamma(x, cfg: PrecisionConfig = DEFAULT):
    """Reciprocal gamma, entire: zero at the poles of gamma."""
    if _nonpositive_integer(x) is not None:
        return 0.0
    return 1.0 / gamma(x, cfg)


def pochhammer(a, n: int):
    """Rising factorial ``a (a+1) ... (a+n-1)`` by direct product.

    The product form keeps exact zeros for nonpositive integer ``a``,
    which is what truncates terminating hypergeometric series.
    """
    if n < 0:
        raise ValueError(f"pochhammer needs n >= 0, got {n}")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


@dataclass(frozen=True)
class PfqParams:
    """Parameter arrays of ``coefficient * pFq(upper; lower; z(x))``.

    The series argument is ``z(x) = argument_scale * x**argument_power``.
    """

    upper: tuple = ()
    lower: tuple = ()
    coefficient: float | complex = 1.0
    argument_scale: float | complex = 1.0
    argument_power: int = 1

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        if self.argument_power < 1 or int(self.argument_power) != self.argument_power:
            raise ValueError(f"argument_power must be a positive integer, got {self.argument_power}")
        _check_lower(self.upper, self.lower)

    @property
    def order(self) -> tuple[int, int]:
        return len(self.upper), len(self.lower)

    def argument(self, x):
        return self.argument_scale * x**self.argument_power


def _truncation(upper) -> int | None:
    """Index of the last nonzero term for a terminating series, else None."""
    ns = [n for n in map(_nonpositive_integer, upper) if n is not None]
    return min(ns) if ns else None


def _check_lower(upper, lower):
    stop = _truncation(upper)
    for b in lower:
        L = _nonpositive_integer(b)
        # the term t_{L+1} divides by (b + L) = 0; harmless only if the series ended first
        if L is not None and (stop is None or L < stop):
            raise LowerParamPole(f"lower parameter {b} is a pole of the series")


@dataclass
class _Partial:
    total: object
    terms: int
    abs_sum: float
    finished: bool
    tail: float = 0.0


def _sum_series(upper, lower, z, stop, rel_tol, max_terms, zero, one) -> _Partial:
    """Forward summation with the term-ratio recurrence.

    Works for floats/complex and for mpmath numbers alike; ``zero`` and
    ``one`` fix the arithmetic type.
    """
    t = one
    s = one
    abs_sum = 1.0
    small_run = 0
    ratio = math.inf
    for k in range(max_terms):
        if stop is not None and k == stop:
            return _Partial(s, k + 1, abs_sum, True)
        num = one
        for a in upper:
            num = num * (a + k)
        den = one
        for b in lower:
            den = den * (b + k)
        prev = abs(t)
        t = t * num / den * z / (k + 1)
        s = s + t
        at = float(abs(t))
        abs_sum += at
        if not math.isfinite(abs_sum):
            return _Partial(s, k + 2, math.inf, False)
        ratio = at / float(prev) if prev else 0.0
        if at <= rel_tol * float(abs(s)) or at == 0.0:
            small_run += 1
        else:
            small_run = 0
        # past the peak of the terms: the ratio must be below one
        if small_run >= 3 and ratio < 1.0:
            tail = at * ratio / (1.0 - ratio)
            if tail <= 0.5 * rel_tol * float(abs(s)) or tail == 0.0:
                return _Partial(s, k + 2, abs_sum, True, tail)
    return _Partial(s, max_terms, abs_sum, False)


def _alternating(z) -> bool:
    if isinstance(z, complex):
        return z.imag != 0.0 or z.real < 0.0
    return z < 0


def _to_number(v):
    if hasattr(v, "_mpc_"):
        return complex(v)
    if hasattr(v, "_mpf_"):
        return float(v)
    return v


def _needs_continuation(p: int, q: int, z) -> bool:
    if p != q + 1:
        return False
    az = abs(z)
    if az >= 1.0:
        return True
    # slowly alternating tail near z = -1
    return az > 0.95 and _alternating(z)


def _cancel_pairs(upper, lower):
    lower = list(lower)
    kept = []
    for u in upper:
        for i, v in enumerate(lower):
            if abs(u - v) <= _INT_TOL:
                del lower[i]
                break
        else:
            kept.append(u)
    return tuple(kept), tuple(lower)


def _continuation(upper, lower, z, coeff, cfg: PrecisionConfig) -> EvalResult:
    """Analytic continuation of p = q + 1 series outside their unit disk.

    ``1F0(a;;z) = (1 - z)**(-a)`` is elementary; higher orders are handed to
    mpmath's hypergeometric continuation, evaluated at two precisions to
    get an error estimate.
    """
    upper, lower = _cancel_pairs(upper, lower)
    if not lower and len(upper) == 1:
        if not isinstance(z, complex) and z >= 1.0:
            raise NoConvergence(f"1F0 at z={z} lies on its branch cut")
        v = coeff * (1.0 - z) ** (-upper[0])
        return EvalResult(v, 4 * _EPS * abs(v), 0, True, 16, "closed")
    if not isinstance(z, complex) and z > 1.0:
        raise NoConvergence(f"p=q+1 series at z={z} lies on its branch cut")
    digits = max(cfg.working_digits, 20)
    vals = []
    for dps in (digits, digits + 15):
        ctx = mpmath.MPContext()
        ctx.dps = dps
        try:
            vals.append(ctx.hyper([ctx.mpf(a) for a in upper], [ctx.mpf(b) for b in lower], ctx.convert(z)))
        except (ctx.NoConvergence, ZeroDivisionError) as exc:
            raise NoConvergence(f"continuation of {len(upper)}F{len(lower)} at z={z} failed: {exc}") from exc
    v = _to_number(vals[1])
    err = float(abs(vals[1] - vals[0])) + _EPS * abs(v)
    out = coeff * v
    err *= abs(coeff)
    ok = err <= cfg.rel_tol * max(1.0, abs(out))
    return EvalResult(out, err, 0, ok, digits + 15, "continuation")


def hyp_at(upper, lower, z, cfg: PrecisionConfig = DEFAULT, coefficient=1.0) -> EvalResult:
    """``coefficient * pFq(upper; lower; z)`` at an explicit argument ``z``.

    Summation starts in double precision unless ``cfg`` asks for more, or
    the series alternates with ``|z|`` above ``cfg.cancellation_threshold``.
    When the round-off estimate ``eps * sum|t_k|`` exceeds the target the
    sum is repeated with enough extra digits to cover the lost ones.

    Raises
    ------
    LowerParamPole
        If a lower parameter is a pole the series reaches.
    NoConvergence
        If ``cfg.max_terms`` terms do not satisfy the stopping rule, or the
        series diverges (p > q + 1 and not terminating).
    """
    upper = tuple(upper)
    lower = tuple(lower)
    _check_lower(upper, lower)
    stop = _truncation(upper)
    p, q = len(upper), len(lower)
    if coefficient == 0:
        return EvalResult(0.0 * coefficient, 0.0, 0, True, 16, "series")
    if z == 0 or stop == 0:
        return EvalResult(coefficient * 1.0, 0.0, 1, True, 16, "series")
    if stop is None:
        if p > q + 1:
            raise NoConvergence(f"{p}F{q} series diverges for z != 0")
        if _needs_continuation(p, q, z):
            return _continuation(upper, lower, z, coefficient, cfg)

    acoef = abs(coefficient)
    digits = cfg.working_digits
    if _alternating(z) and abs(z) > cfg.cancellation_threshold and stop is None:
        digits = max(digits, 34)

    for _ in range(8):
        if digits <= 16:
            part = _sum_series(upper, lower, z, stop, cfg.rel_tol, cfg.max_terms, 0.0, 1.0)
            eps = _EPS
            total = part.total
        else:
            ctx = mpmath.MPContext()
            ctx.dps = digits
            part = _sum_series(
                [ctx.mpf(a) for a in upper],
                [ctx.mpf(b) for b in lower],
                ctx.convert(z),
                stop,
                cfg.rel_tol,
                cfg.max_terms,
                ctx.zero,
                ctx.one,
            )
            eps = 10.0 ** (-digits)
            total = _to_number(part.total)
        if not math.isfinite(part.abs_sum):
            # double precision overflow; retry in multiprecision
            digits = max(digits + 20, 34)
            continue
        if not part.finished:
            raise NoConvergence(
                f"{p}F{q} at z={z}: no convergence within {cfg.max_terms} terms"
            )
        value = coefficient * total
        roundoff = eps * math.sqrt(part.terms) * part.abs_sum + _EPS * abs(total)
        err = acoef * (roundoff + part.tail)
        target = cfg.rel_tol * max(1.0, abs(value))
        method = "polynomial" if stop is not None else "series"
        if err <= target:
            return EvalResult(value, err, part.terms, True, digits, method)
        if part.tail * acoef > target and roundoff * acoef <= target:
            # truncation limited, more digits will not help
            return EvalResult(value, err, part.terms, False, digits, method)
        if digits >= _MAX_DIGITS:
            return EvalResult(value, err, part.terms, False, digits, method)
        lost = math.log10(err / target)
        digits = min(_MAX_DIGITS, max(digits + int(math.ceil(lost)) + 4, 34 if digits <= 16 else digits + 8))
    return EvalResult(value, err, part.terms, False, digits, method)


def hyp_many(upper, lower, zs, cfg: PrecisionConfig = DEFAULT, coefficient=1.0) -> np.ndarray:
    """Vectorized :func:`hyp_at` over an array of arguments, values only.

    All points are summed together in double precision; points that need
    continuation, extra digits or more terms are redone one by one with
    :func:`hyp_at`.
    """
    upper = tuple(upper)
    lower = tuple(lower)
    _check_lower(upper, lower)
    zs = np.asarray(zs)
    p, q = len(upper), len(lower)
    stop = _truncation(upper)
    scalar = np.zeros(zs.shape, dtype=bool)
    closed = None
    if stop is None and p == q + 1:
        az = np.abs(zs)
        scalar |= (az >= 1.0) | ((az > 0.95) & ((zs.real < 0) | (zs.imag != 0)))
        cu, cl = _cancel_pairs(upper, lower)
        if not cl and np.all(zs.real < 1.0):
            # reduces to 1F0, which is elementary off its branch cut
            closed = np.ones(zs.shape, dtype=bool)
            closed_vals = coefficient * (1.0 - zs) ** (-cu[0])
            scalar = np.zeros(zs.shape, dtype=bool)
    dtype = np.result_type(zs.dtype, type(coefficient), float)
    t = np.ones(zs.shape, dtype=dtype)
    s = np.ones(zs.shape, dtype=dtype)
    abs_sum = np.ones(zs.shape)
    small = np.zeros(zs.shape, dtype=int)
    done = scalar.copy() if closed is None else scalar | closed
    zw = np.where(done, 0.0, zs)
    last = cfg.max_terms if stop is None else stop
    k = 0
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(last):
            if done.all():
                break
            num = 1.0
            for a in upper:
                num *= a + k
            den = 1.0
            for b in lower:
                den *= b + k
            prev = np.abs(t)
            t = t * (num / den / (k + 1)) * zw
            s = s + t
            at = np.abs(t)
            abs_sum += at
            ratio = np.divide(at, prev, out=np.zeros_like(at), where=prev > 0)
            small = np.where((at <= cfg.rel_tol * np.abs(s)) | (at == 0.0), small + 1, 0)
            tail = at * ratio / np.where(ratio < 1.0, 1.0 - ratio, 1.0)
            done |= (small >= 3) & (ratio < 1.0) & (tail <= 0.5 * cfg.rel_tol * np.abs(s))
    if stop is None:
        scalar |= ~done
    roundoff = _EPS * math.sqrt(k + 2) * abs_sum + _EPS * np.abs(s)
    val = coefficient * s
    scalar |= ~np.isfinite(abs_sum) | (abs(coefficient) * roundoff > cfg.rel_tol * np.maximum(1.0, np.abs(val)))
    out = np.array(val, dtype=np.result_type(dtype, type(coefficient)))
    if closed is not None:
        out[closed] = closed_vals[closed]
        scalar &= ~closed
    for i in zip(*np.nonzero(scalar)):
        out[i] = hyp_at(upper, lower, zs[i].item(), cfg, coefficient).value
    return out


def pfq(params: PfqParams, x, cfg: PrecisionConfig = DEFAULT) -> EvalResult:
    """Evaluate ``params.coefficient * pFq(upper; lower; z(x))``."""
    z = params.argument(x)
    return hyp_at(params.upper, params.lower, z, cfg, params.coefficient)


def _hyp1f1(a, b, z, cfg) -> float:
    return hyp_at((a,), (b,), z, cfg).value


def kummer_u(a: float, b: float, z: float, cfg: PrecisionConfig = DEFAULT) -> float:
    """Tricomi's confluent hypergeometric function ``U(a, b, z)`` for ``z >= 0``.

    Built from two Kummer functions, which is valid for non-integer ``b``
    only::

        U = G(1-b)/G(a+1-b) M(a,b,z) + G(b-1)/G(a) z**(1-b) M(a+1-b,2-b,z)

    Reciprocal gammas make the polynomial cases (``a`` or ``a+1-b`` a
    nonpositive integer) come out exactly.
    """
    if abs(b - round(b)) <= _INT_TOL:
        raise IntegerB(f"kummer_u needs non-integer b, got {b}")
    if z < 0:
        raise DomainError(f"kummer_u is real only for z >= 0, got {z}")
    first = gamma(1.0 - b) * rgamma(a + 1.0 - b) * _hyp1f1(a, b, z, cfg)
    if z == 0:
        if b < 1:
            return float(first)
        raise PoleError(f"U(a, {b}, z) is singular at z = 0 for b > 1")
    second_c = gamma(b - 1.0) * rgamma(a)
    if second_c == 0:
        return float(first)
    second = second_c * z ** (1.0 - b) * _hyp1f1(a + 1.0 - b, 2.0 - b, z, cfg)
    return float(first + second)


def hermite_fractional(alpha: float, x: float, cfg: PrecisionConfig = DEFAULT) -> float:
    """Hermite function ``H_alpha(x)`` of real order, for any real ``x``.

    Uses the combination that is entire in ``x``::

        H_a(x) = e^{x^2} 2^a / sqrt(pi) * [cos(pi a/2) G((1+a)/2) M((1+a)/2, 1/2, -x^2)
                                           + 2 x sin(pi a/2) G(1+a/2) M(1+a/2, 3/2, -x^2)]

    where ``a G(a/2)`` has been written as ``2 G(1 + a/2)`` so that
    ``alpha = 0`` needs no limit.
    """
    y = -x * x
    even = math.cos(0.5 * math.pi * alpha) * gamma(0.5 * (1.0 + alpha)) * _hyp1f1(
        0.5 * (1.0 + alpha), 0.5, y, cfg
    )
    odd_c = math.sin(0.5 * math.pi * alpha)
    odd = 0.0
    if odd_c != 0.0 and x != 0.0:
        odd = 2.0 * x * odd_c * gamma(1.0 + 0.5 * alpha) * _hyp1f1(1.0 + 0.5 * alpha, 1.5, y, cfg)
    return float(math.exp(x * x) * 2.0**alpha / math.sqrt(math.pi) * (even + odd))
