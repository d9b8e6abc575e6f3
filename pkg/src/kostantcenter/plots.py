"""Plot data for the rank-one center and its degenerations.

Every point is produced from an exact rational parametrization, never by
root finding, so each emitted point satisfies its defining polynomial
identically; the CSV carries exact numerator/denominator pairs and the
rendered figure is only a lossy convenience view.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .center import ROZHKOVSKAYA, TILDE, center_ideal_rank1, change_presentation, graded_medium
from .mpoly import MPoly
from .tensor import casimir_value

FIGURES = ("lines", "center-tilde", "center-rozhkovskaya", "graded", "hc-category")

CSV_HEADER = ("figure", "curve_id", "color_index", "x_num", "x_den", "y_num", "y_den")


@dataclass(frozen=True)
class Curve:
    curve_id: str
    color_index: int
    points: tuple[tuple[Fraction, Fraction], ...]
    point_colors: tuple[int, ...]


@dataclass(frozen=True)
class PlotSeries:
    figure: str
    curves: tuple[Curve, ...]


def _grid(lo: Fraction, hi: Fraction, samples: int) -> list[Fraction]:
    if samples < 2:
        raise ValueError("need at least two samples")
    if hi <= lo:
        raise ValueError("empty parameter range")
    step = (hi - lo) / (samples - 1)
    return [lo + step * i for i in range(samples)]


def _curve(curve_id, color, pts, colors=None):
    pts = tuple(pts)
    colors = tuple(colors) if colors is not None else (color,) * len(pts)
    return Curve(curve_id=curve_id, color_index=color, points=pts, point_colors=colors)


def lines_series(k: int, lo: Fraction, hi: Fraction, samples: int) -> PlotSeries:
    """The parameter lines (t, t + m) for every weight m of the twisting representation."""
    grid = _grid(lo, hi, samples)
    curves = []
    for idx, m in enumerate(range(-k, k + 1, 2)):
        pts = [(t, t + m) for t in grid]
        for x, y in pts:
            assert y - x == m
        curves.append(_curve(f"line-m{m}", idx, pts))
    return PlotSeries(figure="lines", curves=tuple(curves))


def center_series(coords: str, k: int, lo: Fraction, hi: Fraction, samples: int) -> PlotSeries:
    """One exactly-parametrized curve per component of the rank-one center."""
    if coords not in (TILDE, ROZHKOVSKAYA):
        raise ValueError(f"unsupported coordinates {coords!r}")
    pres = center_ideal_rank1(k)
    if coords == ROZHKOVSKAYA:
        pres = change_presentation(pres, ROZHKOVSKAYA)
    shift = Fraction(k * (k + 2))
    grid = _grid(lo, hi, samples)
    curves = []
    for idx, (factor, ((m,), _)) in enumerate(zip(pres.factors, pres.components)):
        pts = []
        for t in grid:
            x = casimir_value(t)
            y = casimir_value(t + m)
            if coords == ROZHKOVSKAYA:
                y = y - x - shift
            assert factor.evaluate((x, y)) == 0
            pts.append((x, y))
        curves.append(_curve(f"component-m{m}", idx, pts))
    return PlotSeries(figure=f"center-{coords}", curves=tuple(curves))


def graded_series(k: int, lo: Fraction, hi: Fraction, samples: int) -> PlotSeries:
    """The cone curves of the graded algebra, traced through the origin."""
    pres = graded_medium(change_presentation(center_ideal_rank1(k), ROZHKOVSKAYA))
    grid = _grid(lo, hi, samples)
    curves = []
    for idx, (factor, ((m,), _)) in enumerate(zip(pres.factors, pres.components)):
        pts = []
        for t in grid:
            point = (t * t, 2 * m * t)
            assert factor.evaluate(point) == 0
            pts.append(point)
        curves.append(_curve(f"graded-m{m}", idx, pts))
    return PlotSeries(figure="graded", curves=tuple(curves))


def _odd_conics(cutoff: int) -> dict[int, MPoly]:
    x = MPoly.variable(2, 0)
    y = MPoly.variable(2, 1)
    conics = {}
    for m in range(1, cutoff + 1, 2):
        shift = y - x - MPoly.constant(2, m * m + 2 * m)
        conics[m] = shift**2 + 4 * m * shift - 4 * m * m * x
    return conics


def hc_category_series(cutoff: int, lo: Fraction, hi: Fraction, samples: int) -> PlotSeries:
    """The odd tower of center components, colored by minimal type.

    Each point's color is the least odd weight (up to the cutoff) whose
    component passes through it, decided by exact conic membership; away
    from intersections that is the curve's own weight.
    """
    if cutoff < 1 or cutoff % 2 == 0:
        raise ValueError("cutoff must be a positive odd integer")
    conics = _odd_conics(cutoff)
    grid = _grid(lo, hi, samples)
    curves = []
    for m in range(1, cutoff + 1, 2):
        pts = []
        colors = []
        for t in grid:
            point = (casimir_value(t), casimir_value(t + m))
            assert conics[m].evaluate(point) == 0
            pts.append(point)
            colors.append(
                min(mp for mp, conic in conics.items() if conic.evaluate(point) == 0)
            )
        curves.append(_curve(f"odd-m{m}", m, pts, colors))
    return PlotSeries(figure="hc-category", curves=tuple(curves))


def make_series(
    figure: str, lo: Fraction, hi: Fraction, samples: int, k: int = 5, cutoff: int = 7
) -> PlotSeries:
    if figure == "lines":
        return lines_series(k, lo, hi, samples)
    if figure == "center-tilde":
        return center_series(TILDE, k, lo, hi, samples)
    if figure == "center-rozhkovskaya":
        return center_series(ROZHKOVSKAYA, k, lo, hi, samples)
    if figure == "graded":
        return graded_series(k, lo, hi, samples)
    if figure == "hc-category":
        return hc_category_series(cutoff, lo, hi, samples)
    raise ValueError(f"unknown figure {figure!r}; choose from {', '.join(FIGURES)}")


def series_to_csv(series: PlotSeries) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for curve in series.curves:
        for (x, y), color in zip(curve.points, curve.point_colors):
            writer.writerow(
                (
                    series.figure,
                    curve.curve_id,
                    color,
                    x.numerator,
                    x.denominator,
                    y.numerator,
                    y.denominator,
                )
            )
    return buf.getvalue()


def render_series(series: PlotSeries, path: str | Path) -> Path:
    """Render with matplotlib next to the exact CSV; floats only touch the figure."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 6))
    max_color = max(
        (c for curve in series.curves for c in curve.point_colors), default=1
    )
    cmap = plt.get_cmap("rainbow")
    for curve in series.curves:
        xs = [float(x) for x, _ in curve.points]
        ys = [float(y) for _, y in curve.points]
        if series.figure == "hc-category":
            # red at the lowest type, violet at the cutoff
            colors = [cmap(1 - (c - 1) / max(max_color - 1, 1)) for c in curve.point_colors]
            ax.scatter(xs, ys, c=colors, s=6)
        else:
            ax.plot(xs, ys, label=curve.curve_id, color=f"C{curve.color_index % 10}")
    if series.figure != "hc-category":
        ax.legend(fontsize=8)
    ax.set_title(series.figure)
    ax.grid(True, alpha=0.3)
    path = Path(path)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)
    return path
