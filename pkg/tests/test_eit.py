import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from caputo_eit.catalog import CatalogEntry, Kind, build_kernel
from caputo_eit.eit import (
    EulerKernel,
    KernelMatch,
    eit_numeric_check,
    eit_quadrature,
    eit_transform,
    match_kernel,
    simplify_params,
)
from caputo_eit.errors import InvalidAlpha
from caputo_eit.specfun import PfqParams, gamma, pfq


def rel(a, b):
    return abs(a - b) / max(1.0, abs(b))


def test_match_sine_n1():
    assert match_kernel(KernelMatch(1, 0.5, 0, 2)) == (1.0, 1.5, 2)


def test_match_cosine_n2():
    assert match_kernel(KernelMatch(2, 0.25, 3, 4)) == (4.0, 4.75, 4)


def test_match_shifted_polynomial():
    assert match_kernel(KernelMatch(1, 0.0, 0, 1)) == (1.0, 2.0, 1)


@pytest.mark.parametrize("alpha", [1.0, -0.1, 1.5])
def test_match_rejects_alpha(alpha):
    with pytest.raises(InvalidAlpha):
        match_kernel(KernelMatch(1, alpha, 0, 2))


def test_kernel_invariants():
    inner = PfqParams((), (0.5,))
    with pytest.raises(ValueError):
        EulerKernel(1.0, 1.0, 1, 1.0, inner)
    with pytest.raises(ValueError):
        EulerKernel(0.0, 1.0, 1, 1.0, inner)
    with pytest.raises(ValueError):
        EulerKernel(1.0, 2.0, 0, 1.0, inner)


def test_transform_classical_euler():
    # m = 1 appends one upper c and one lower d
    inner = PfqParams((0.3,), (1.7,))
    k = EulerKernel(1.2, 2.9, 1, 1.0, inner, x=0.5)
    p = eit_transform(k)
    assert p.upper == (0.3, 1.2) and p.lower == (1.7, 2.9)
    assert math.isclose(p.coefficient, gamma(1.2) * gamma(1.7) / gamma(2.9), rel_tol=1e-15)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_transform_sine_parameters(n):
    alpha, x = 0.5, 0.8
    p = eit_transform(build_kernel(CatalogEntry(Kind.SinPow, n=n), alpha, x))
    assert p.upper == tuple((n + j) / (2 * n) for j in range(2 * n))
    assert p.lower == (0.5,) + tuple((n + 1 - alpha + j) / (2 * n) for j in range(2 * n))
    # n b^n x^{n-a} / G(1-a) * B(n, 1-a) = G(n+1) / G(n+1-a) x^{n-a}
    want = math.gamma(n + 1) / math.gamma(n + 1 - alpha) * x ** (n - alpha)
    assert math.isclose(p.coefficient, want, rel_tol=1e-14)


def test_transform_shifted_polynomial():
    p = eit_transform(build_kernel(CatalogEntry(Kind.ShiftedPoly, n=3, xi=1.0), 0.4, 1.0))
    assert sorted(p.upper) == [-2.0, 1.0, 1.0]
    assert sorted(p.lower) == [1.0, 1.6]


def test_simplify_arcsin_reduction():
    p = PfqParams((0.5, 0.5, 1.0), (1.0, 1.25, 1.75))
    q = simplify_params(p)
    assert q.upper == (0.5, 0.5) and q.lower == (1.25, 1.75)


def test_simplify_no_pairs_is_identity():
    p = PfqParams((0.3, 0.7), (1.1, 2.2), 3.0, -0.5, 2)
    assert simplify_params(p) == p


def test_simplify_sine_drops_half():
    p = eit_transform(build_kernel(CatalogEntry(Kind.SinPow, n=2), 0.3, 1.0))
    q = simplify_params(p)
    assert q.order == (3, 4)
    assert 0.5 not in q.upper


def test_simplify_cancels_each_lower_once():
    q = simplify_params(PfqParams((1.0, 1.0), (1.0,)))
    assert q.upper == (1.0,) and q.lower == ()


@given(
    st.lists(st.floats(min_value=0.1, max_value=3.0), min_size=0, max_size=2),
    st.lists(st.floats(min_value=0.2, max_value=3.0), min_size=2, max_size=3),
    st.floats(min_value=-0.8, max_value=0.8),
)
@settings(max_examples=50, deadline=None)
def test_simplify_preserves_value(upper, lower, z):
    # at least one pair cancels; p <= q + 1 keeps the series convergent for |z| < 1
    p = PfqParams(tuple(upper) + (lower[0],), tuple(lower))
    q = simplify_params(p)
    a = pfq(p, z).value
    b = pfq(q, z).value
    assert abs(a - b) <= 1e-13 * max(1.0, abs(a))


def test_zero_argument_is_beta_function():
    inner = PfqParams((), (0.5,), 1.0, -0.25, 2)
    k = EulerKernel(1.5, 2.8, 2, 1.3, inner, x=0.0)
    want = 1.3 * math.gamma(1.5) * math.gamma(1.3) / math.gamma(2.8)
    assert math.isclose(eit_numeric_check(k), want, rel_tol=1e-13)
    assert math.isclose(pfq(simplify_params(eit_transform(k)), 0.0).value, want, rel_tol=1e-14)


def test_sine_kernel_quadrature_matches_series():
    k = build_kernel(CatalogEntry(Kind.SinPow), 0.5, 1.0)
    series = pfq(simplify_params(eit_transform(k)), 1.0).value
    assert rel(eit_numeric_check(k), series) <= 1e-10
    # frozen reference from tanh-sinh quadrature of the Caputo integral
    assert rel(series, 0.84605678672415291) <= 1e-14


def test_lorentzian_kernel_quadrature_matches_series():
    k = build_kernel(CatalogEntry(Kind.Lorentzian, beta=1.0), 0.3, 0.5)
    series = pfq(simplify_params(eit_transform(k)), 0.5).value
    assert rel(eit_numeric_check(k), series) <= 1e-10


def test_generic_kernel_against_mpmath():
    # 1F1 inner function, m = 3, not a catalog kernel
    inner = PfqParams((0.7,), (1.9,), 1.0, -1.2, 1)
    k = EulerKernel(2.0, 3.4, 3, 0.8, inner, x=1.5)
    z = -1.2 * 1.5
    ref = 0.8 * mpmath.quad(lambda t: t ** 1.0 * (1 - t) ** 0.4 * mpmath.hyp1f1(0.7, 1.9, z * t**3), [0, 1])
    val, err = eit_quadrature(k)
    assert rel(val, float(ref)) <= 1e-12
    assert err < 1e-12
    assert rel(pfq(eit_transform(k), 1.5).value, float(ref)) <= 1e-12


@pytest.mark.parametrize(
    "entry",
    [
        CatalogEntry(Kind.CosPow, n=2),
        CatalogEntry(Kind.ArcsinPow),
        CatalogEntry(Kind.ArctanPow, n=2),
        CatalogEntry(Kind.ExpPow, n=3),
        CatalogEntry(Kind.ShiftedPoly, n=4, xi=-0.7),
    ],
)
@pytest.mark.parametrize("alpha", [0.15, 0.85])
def test_catalog_kernels_transform_exactly(entry, alpha):
    x = 0.9
    k = build_kernel(entry, alpha, x)
    series = pfq(simplify_params(eit_transform(k)), x).value
    assert rel(eit_numeric_check(k), series) <= 1e-9
