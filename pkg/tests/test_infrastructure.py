import math

import numpy as np
import pytest

from caputo_eit.errors import CaputoEITError, DomainError, NumericalError, UnknownFigure
from caputo_eit.figures import FIGURES, figure_grid, figure_rows, get_figure
from caputo_eit.precision import EvalResult, PrecisionConfig
from caputo_eit.quadrature import gauss_jacobi_01, jacobi_integral, legendre_panels


@pytest.mark.parametrize("a, b", [(0.0, 0.0), (-0.5, 0.0), (0.25, 1.0), (-0.9, 2.0)])
def test_jacobi_rule_integrates_monomials(a, b):
    s, w = gauss_jacobi_01(8, a, b)
    for k in range(16):
        exact = math.gamma(a + 1) * math.gamma(b + k + 1) / math.gamma(a + b + k + 2)
        assert math.isclose(np.dot(w, s**k), exact, rel_tol=1e-13)


def test_jacobi_nodes_are_read_only():
    s, w = gauss_jacobi_01(6, -0.5, 0.0)
    with pytest.raises(ValueError):
        s[0] = 0.0
    with pytest.raises(ValueError):
        w[0] = 0.0


def test_jacobi_integral_error_estimate():
    val, err = jacobi_integral(np.exp, 16, -0.5, 0.0)
    assert err < 1e-14
    val, err = jacobi_integral(lambda s: np.abs(s - 0.3), 8, 0.0, 0.0)
    assert err > 1e-6


def test_legendre_panels():
    val, err = legendre_panels(np.sin, 0.0, math.pi, 16, width=0.5)
    assert math.isclose(val, 2.0, rel_tol=1e-15) and err < 1e-12
    assert legendre_panels(np.sin, 1.0, 1.0, 8) == (0.0, 0.0)


@pytest.mark.parametrize(
    "kwargs",
    [{"rel_tol": 0.0}, {"max_terms": 0}, {"working_digits": 4}, {"quad_nodes": 1}, {"cancellation_threshold": -1.0}],
)
def test_precision_config_validation(kwargs):
    with pytest.raises(ValueError):
        PrecisionConfig(**kwargs)


def test_precision_config_extended():
    assert not PrecisionConfig().extended
    assert PrecisionConfig(working_digits=34).extended


def test_eval_result_helpers():
    r = EvalResult(2.0, 1e-16, 10, True)
    assert float(r) == 2.0
    s = r.scaled(-3.0)
    assert s.value == -6.0 and s.abs_error_estimate == 3e-16 and s.terms_used == 10


def test_error_hierarchy():
    assert issubclass(DomainError, ValueError) and issubclass(DomainError, CaputoEITError)
    assert issubclass(NumericalError, ArithmeticError) and issubclass(NumericalError, CaputoEITError)
    assert issubclass(UnknownFigure, DomainError)


def test_figure_registry():
    assert set(FIGURES) == {"1a", "1b", "2a", "2b", "3a", "3b", "4", "5"}
    assert get_figure("5").entry.xi == 1.0 and get_figure("5").entry.n == 2
    assert get_figure("4").entry.beta == 1.0
    assert get_figure("2a").x_max < 1.0
    grid = figure_grid(get_figure("1a"), 11)
    assert grid[0] == 0.0 and grid[-1] == 2.0 * math.pi
    with pytest.raises(UnknownFigure):
        get_figure("7")


def test_figure_rows_order():
    rows = figure_rows("5", alphas=(0.5, 0.0), points=3)
    assert [(r[0], r[1]) for r in rows] == [(0.0, 0.5), (0.0, 0.0), (1.0, 0.5), (1.0, 0.0), (2.0, 0.5), (2.0, 0.0)]
    assert rows[-1][2] == 8.0
