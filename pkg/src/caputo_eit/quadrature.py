"""Gauss-Jacobi and Gauss-Legendre rules mapped onto finite intervals.

Node tables come from ``scipy.special`` and are cached read-only.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi, roots_legendre


@lru_cache(maxsize=256)
def gauss_jacobi_01(n: int, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for ``int_0^1 (1-s)**a * s**b * g(s) ds``."""
    x, w = roots_jacobi(n, a, b)
    s = 0.5 * (1.0 + x)
    w = w * 2.0 ** (-(a + b + 1.0))
    s.flags.writeable = False
    w.flags.writeable = False
    return s, w


@lru_cache(maxsize=64)
def gauss_legendre(n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = roots_legendre(n)
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


def jacobi_integral(g, n: int, a: float, b: float) -> tuple[complex | float, float]:
    """Integrate ``(1-s)**a s**b g(s)`` over [0, 1] with ``n`` and ``2n`` nodes.

    Returns the ``2n``-node value and ``|I_2n - I_n|`` as the error estimate.
    """
    vals = []
    for m in (n, 2 * n):
        s, w = gauss_jacobi_01(m, float(a), float(b))
        vals.append(np.dot(w, g(s)))
    return vals[1], float(abs(vals[1] - vals[0]))


def legendre_panels(g, lo: float, hi: float, n: int, width: float = 1.0) -> tuple[float, float]:
    """Composite Gauss-Legendre on [lo, hi] with panels of about ``width``.

    The error estimate compares against the same panels at ``n // 2`` nodes.
    """
    if hi <= lo:
        return 0.0, 0.0
    panels = max(1, int(np.ceil((hi - lo) / width)))
    edges = np.linspace(lo, hi, panels + 1)
    out = []
    for m in (max(2, n // 2), n):
        x, w = gauss_legendre(m)
        total = 0.0
        for left, right in zip(edges[:-1], edges[1:]):
            half = 0.5 * (right - left)
            total += half * np.dot(w, g(left + half * (x + 1.0)))
        out.append(total)
    return out[1], float(abs(out[1] - out[0]))
