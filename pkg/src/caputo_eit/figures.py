"""Data sets for the eight figure panels.

Each panel is one catalog entry on an x grid, for the fractional orders
0, 1/4, 1/2, 3/4 and 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .catalog import CaputoRequest, CatalogEntry, Kind, caputo
from .errors import UnknownFigure
from .precision import DEFAULT, PrecisionConfig

DEFAULT_ALPHAS = (0.0, 0.25, 0.5, 0.75, 1.0)
DEFAULT_POINTS = 101


@dataclass(frozen=True)
class FigureSpec:
    figure_id: str
    entry: CatalogEntry
    x_min: float
    x_max: float
    title: str


FIGURES = {
    "1a": FigureSpec("1a", CatalogEntry(Kind.SinPow), 0.0, 2.0 * math.pi, "sin(x)"),
    "1b": FigureSpec("1b", CatalogEntry(Kind.CosPow), 0.0, 2.0 * math.pi, "cos(x)"),
    # arcsin is only defined up to x = 1 and its derivative blows up there
    "2a": FigureSpec("2a", CatalogEntry(Kind.ArcsinPow), 0.0, 0.99, "arcsin(x)"),
    "2b": FigureSpec("2b", CatalogEntry(Kind.ArctanPow), 0.0, 2.0 * math.pi, "arctan(x)"),
    "3a": FigureSpec("3a", CatalogEntry(Kind.ExpPow, n=2), 0.0, 3.0, "exp(-x^2)"),
    "3b": FigureSpec("3b", CatalogEntry(Kind.ExpPow, n=4), 0.0, 3.0, "exp(-x^4)"),
    "4": FigureSpec("4", CatalogEntry(Kind.Lorentzian, beta=1.0), 0.0, 4.0, "Lorentzian, gamma = 1"),
    "5": FigureSpec("5", CatalogEntry(Kind.ShiftedPoly, n=2, xi=1.0), 0.0, 2.0, "(x + 1)^2"),
}


def get_figure(figure_id: str) -> FigureSpec:
    try:
        return FIGURES[str(figure_id).lower()]
    except KeyError:
        raise UnknownFigure(f"unknown figure {figure_id!r}; choose from {', '.join(FIGURES)}") from None


def figure_grid(spec: FigureSpec, points: int = DEFAULT_POINTS) -> np.ndarray:
    return np.linspace(spec.x_min, spec.x_max, points)


def figure_rows(
    figure_id: str,
    alphas=DEFAULT_ALPHAS,
    points: int = DEFAULT_POINTS,
    cfg: PrecisionConfig = DEFAULT,
) -> list[tuple[float, float, float]]:
    """``(x, alpha, value)`` rows ordered by x, then alpha."""
    spec = get_figure(figure_id)
    rows = []
    for x in figure_grid(spec, points):
        x = float(x)
        for a in alphas:
            res = caputo(CaputoRequest(spec.entry, float(a), x), cfg)
            rows.append((x, float(a), float(res.value)))
    return rows
