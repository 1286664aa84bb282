import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from caputo_eit.catalog import (
    CaputoRequest,
    CatalogEntry,
    Kind,
    caputo,
    caputo_exp,
    caputo_inverse_trig,
    caputo_lorentzian,
    caputo_planewave,
    caputo_shifted_poly,
    caputo_trig,
    classical_derivative,
    function_value,
)
from caputo_eit.errors import DomainError, InvalidAlpha, XiZero

# reference values: tanh-sinh quadrature of the Caputo integral at 40 digits,
# after the substitution u = (x - t)**(1 - alpha) that removes the endpoint
# singularity
REFERENCE = [
    (CatalogEntry(Kind.SinPow), 0.5, 1.0, 0.84605678672415291),
    (CatalogEntry(Kind.SinhPow), 0.5, 0.8, 1.1886246182818312),
    (CatalogEntry(Kind.CoshPow, n=2), 0.6, 1.2, 2.8202698385811758),
    (CatalogEntry(Kind.ArcsinPow), 0.4, 0.9, 1.4893056597999254),
    (CatalogEntry(Kind.ArctanPow), 0.7, 0.9, 0.72797394995615975),
    (CatalogEntry(Kind.ArctanPow), 0.5, 3.0, 0.56818326803213791),
    (CatalogEntry(Kind.ExpPow, n=4), 0.5, 1.1, -1.1426442607753989),
    (CatalogEntry(Kind.ExpPow, n=2), 0.75, 2.0, -0.33002988841766033),
    (CatalogEntry(Kind.Lorentzian, beta=1.0), 0.5, 0.4, -0.49638210311765103),
    (CatalogEntry(Kind.Lorentzian, beta=1.0), 0.25, 2.5, -0.43555754350641387),
    (CatalogEntry(Kind.ShiftedPoly, n=3, xi=2.0), 0.5, 1.5, 38.142554101635437),
]


def rel(a, b):
    return abs(a - b) / max(1.0, abs(b))


@pytest.mark.parametrize("entry, alpha, x, want", REFERENCE)
def test_reference_values(entry, alpha, x, want):
    res = caputo(CaputoRequest(entry, alpha, x))
    assert res.converged
    assert rel(res.value, want) <= 1e-12


def test_planewave_reference():
    res = caputo_planewave(2.0, 0.5, 0.6)
    assert abs(res.value - complex(-1.1813169071073053, 1.1357712108528975)) <= 1e-13


def test_alpha_zero_is_shift():
    assert caputo(CaputoRequest(CatalogEntry(Kind.SinPow), 0.0, 2.0)).value == math.sin(2.0)
    v = caputo(CaputoRequest(CatalogEntry(Kind.ExpPow, n=2), 0.0, 1.0)).value
    assert v == math.exp(-1.0) - 1.0
    v = caputo(CaputoRequest(CatalogEntry(Kind.PlaneWave, beta=1.5), 0.0, 0.7)).value
    assert abs(v - (cmath.exp(1.5j * 0.7) - 1.0)) <= 1e-15
    v = caputo(CaputoRequest(CatalogEntry(Kind.Lorentzian, beta=2.0), 0.0, 1.0)).value
    lor = lambda x: 1.0 / (math.pi * (x * x + 1.0))
    assert math.isclose(v, lor(1.0) - lor(0.0), rel_tol=1e-15)
    x = 1.3
    v = caputo(CaputoRequest(CatalogEntry(Kind.ShiftedPoly, n=2, xi=1.0), 0.0, x)).value
    assert math.isclose(v, (x + 1.0) ** 2 - 1.0, rel_tol=1e-15)


def test_alpha_one_is_classical():
    assert caputo(CaputoRequest(CatalogEntry(Kind.CosPow), 1.0, 0.7)).value == -math.sin(0.7)


@pytest.mark.parametrize(
    "entry, x, want",
    [
        (CatalogEntry(Kind.CoshPow), 0.9, math.sinh(0.9)),
        (CatalogEntry(Kind.ExpPow), 1.0, -math.exp(-1.0)),
        (CatalogEntry(Kind.Lorentzian, beta=1.0), 0.5, -(1.0 / math.pi) * 0.5 / (0.25 + 0.25) ** 2),
    ],
)
def test_continuity_towards_alpha_one(entry, x, want):
    v = caputo(CaputoRequest(entry, 1.0 - 1e-8, x)).value
    assert abs(v - want) <= 1e-6 * abs(want)


def test_shifted_poly_linear_case():
    a, x = 0.35, 1.7
    res = caputo_shifted_poly(1, 3.0, a, x)
    assert math.isclose(res.value, x ** (1 - a) / math.gamma(2 - a), rel_tol=1e-15)


def test_shifted_poly_terminates_for_any_ratio():
    # x / xi = -40: the polynomial series has no radius of convergence issue
    res = caputo_shifted_poly(3, -0.05, 0.5, 2.0)
    assert res.method == "polynomial"
    ref = 3.0 * (0.05**2 * 2.0**0.5 / math.gamma(1.5)
                 - 2.0 * 0.05 * 2.0**1.5 / math.gamma(2.5) + 2.0 * 2.0**2.5 / math.gamma(3.5))
    assert math.isclose(res.value, ref, rel_tol=1e-13)


KINDS_N = [
    CatalogEntry(Kind.SinPow, n=2),
    CatalogEntry(Kind.CosPow),
    CatalogEntry(Kind.SinhPow, n=3),
    CatalogEntry(Kind.CoshPow),
    CatalogEntry(Kind.PlaneWave),
    CatalogEntry(Kind.ArcsinPow, n=2),
    CatalogEntry(Kind.ArccosPow),
    CatalogEntry(Kind.ArctanPow),
    CatalogEntry(Kind.ArccotPow, n=2),
    CatalogEntry(Kind.ExpPow, n=4),
    CatalogEntry(Kind.Lorentzian, beta=0.5),
    CatalogEntry(Kind.ShiftedPoly, n=2, xi=-3.0),
]


@pytest.mark.parametrize("entry", KINDS_N, ids=lambda e: f"{e.kind.value}-{e.n}")
@given(alpha=st.floats(min_value=1e-6, max_value=1.0))
@settings(max_examples=15, deadline=None)
def test_zero_at_origin(entry, alpha):
    assert caputo(CaputoRequest(entry, alpha, 0.0)).value == 0.0 or alpha == 1.0


@given(
    st.floats(min_value=0.01, max_value=0.99),
    st.floats(min_value=0.01, max_value=0.95),
    st.integers(min_value=1, max_value=3),
)
@settings(max_examples=40, deadline=None)
def test_sign_relations(alpha, x, n):
    s = caputo_inverse_trig(Kind.ArcsinPow, n, 1.0, alpha, x)
    c = caputo_inverse_trig(Kind.ArccosPow, n, 1.0, alpha, x)
    assert c.value == -s.value
    t = caputo_inverse_trig(Kind.ArctanPow, n, 1.3, alpha, 3.0 * x)
    k = caputo_inverse_trig(Kind.ArccotPow, n, 1.3, alpha, 3.0 * x)
    assert k.value == -t.value


@given(
    st.floats(min_value=-3.0, max_value=3.0),
    st.floats(min_value=-3.0, max_value=3.0),
    st.floats(min_value=0.01, max_value=0.99),
    st.floats(min_value=0.0, max_value=6.0),
)
@settings(max_examples=40, deadline=None)
def test_linearity(a, b, alpha, x):
    sin_v = caputo_trig(Kind.SinPow, 1, 1.0, alpha, x).value
    cos_v = caputo_trig(Kind.CosPow, 1, 1.0, alpha, x).value
    pw = caputo_planewave(1.0, alpha, x).value
    # a cos + b sin is the real part of (a - i b) exp(i x)
    combo = ((a - 1j * b) * pw).real
    assert abs(combo - (a * cos_v + b * sin_v)) <= 1e-13 * max(1.0, abs(a) + abs(b))


@pytest.mark.parametrize("entry", KINDS_N, ids=lambda e: f"{e.kind.value}-{e.n}")
def test_endpoint_continuity(entry):
    for x in (0.3, 0.7):
        d1 = classical_derivative(entry, x)
        shift = function_value(entry, x) - function_value(entry, 0.0)
        near1 = caputo(CaputoRequest(entry, 1.0 - 1e-8, x)).value
        near0 = caputo(CaputoRequest(entry, 1e-8, x)).value
        assert abs(near1 - d1) <= 1e-6 * abs(d1)
        assert abs(near0 - shift) <= 1e-6 * abs(shift)


@pytest.mark.parametrize("entry", KINDS_N, ids=lambda e: f"{e.kind.value}-{e.n}")
def test_monotone_deformation(entry):
    from caputo_eit.acceptance import alpha_jumps_ok

    alphas = np.linspace(0.0, 1.0, 101)
    for x in (0.35, 0.8):
        vals = [caputo(CaputoRequest(entry, float(a), x)).value.real for a in alphas]
        assert alpha_jumps_ok(vals, 1e-6 * max(map(abs, vals)))


def test_alpha_jump_detector_flags_discontinuity():
    from caputo_eit.acceptance import alpha_jumps_ok

    vals = list(np.linspace(0.0, 1.0, 50)) + list(np.linspace(2.0, 3.0, 50))
    assert not alpha_jumps_ok(vals, 1e-6)
    assert alpha_jumps_ok(list(np.linspace(0.0, 1.0, 100)), 1e-6)


def test_domain_errors():
    with pytest.raises(DomainError):
        caputo(CaputoRequest(CatalogEntry(Kind.ArcsinPow), 0.5, 1.5))
    with pytest.raises(DomainError):
        caputo(CaputoRequest(CatalogEntry(Kind.ArccosPow, beta=2.0), 0.5, 0.5))
    # the boundary point is allowed only for alpha = 0
    assert caputo(CaputoRequest(CatalogEntry(Kind.ArcsinPow), 0.0, 1.0)).value == math.pi / 2
    with pytest.raises(DomainError):
        CaputoRequest(CatalogEntry(Kind.SinPow), 0.5, -1.0)
    with pytest.raises(InvalidAlpha):
        CaputoRequest(CatalogEntry(Kind.SinPow), 1.2, 1.0)
    with pytest.raises(InvalidAlpha):
        caputo_exp(2, 1.0, 1.0, 1.0)
    with pytest.raises(XiZero):
        caputo_shifted_poly(2, 0.0, 0.5, 1.0)
    with pytest.raises(DomainError):
        CatalogEntry(Kind.SinPow, n=0)
    with pytest.raises(DomainError):
        CatalogEntry(Kind.Lorentzian, n=2)
    with pytest.raises(DomainError):
        caputo_lorentzian(-1.0, 0.5, 1.0)


def test_large_argument_gaussian_uses_extended_precision():
    res = caputo_exp(2, 1.0, 0.5, 7.0)
    assert res.converged and res.working_digits > 16
