"""Standalone SVG of the momentum spectrum: continuous density, discrete
probabilities, and the probability mass of the density in each discrete bin.

Bins have half-width ``pi`` around each eigenvalue ``xi_l = 2 pi l`` so
they tile the axis. The density (per unit xi) and the probabilities
(pure numbers) are drawn against separate left and right axes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import continuous, discrete
from .core import DomainError, WellState
from .output import csv_text, fmt, write_text

WIDTH, HEIGHT = 800, 500
LEFT, RIGHT, TOP, BOTTOM = 80.0, 720.0, 50.0, 430.0


@dataclass(frozen=True)
class FigureSpec:
    n: int
    discrete_l_range: int = 3
    grid_step: float = 0.01
    xi_range: tuple[float, float] | None = None
    bin_halfwidth: float = math.pi

    def __post_init__(self) -> None:
        WellState(self.n)
        if self.discrete_l_range < 0:
            raise DomainError("discrete_l_range must be non-negative")
        if not self.grid_step > 0:
            raise DomainError("grid_step must be positive")
        if self.xi_range is None:
            half = (2 * self.discrete_l_range + 1) * math.pi
            object.__setattr__(self, "xi_range", (-half, half))
        lo, hi = self.xi_range
        if not (lo < 0 < hi and math.isclose(-lo, hi, rel_tol=1e-12)):
            raise DomainError("xi_range must be symmetric about 0")
        if not self.bin_halfwidth > 0:
            raise DomainError("bin_halfwidth must be positive")


@dataclass
class FigureData:
    spec: FigureSpec
    xi: np.ndarray
    density: np.ndarray
    columns: list[dict] = field(default_factory=list)


def grid(xi_min: float, xi_max: float, step: float) -> np.ndarray:
    """Ascending ``xi_min + i*step`` up to ``xi_max`` (inclusive within rounding)."""
    count = int(math.floor((xi_max - xi_min) / step + 1e-9)) + 1
    return xi_min + step * np.arange(count)


def build(spec: FigureSpec, threads: int = 1) -> FigureData:
    state = WellState(spec.n)
    lo, hi = spec.xi_range
    xi = grid(lo, hi, spec.grid_step)
    dens = continuous.density_grid(state, xi, threads)
    cols = []
    for l in range(-spec.discrete_l_range, spec.discrete_l_range + 1):
        x = discrete.eigenvalue_xi(l)
        cols.append({
            "l": l,
            "xi": x,
            "probability": discrete.probability(state, l),
            "density_at_xi": continuous.density(state, x),
            "bin_integral": continuous.bin_integral(state, x - spec.bin_halfwidth, x + spec.bin_halfwidth),
        })
    return FigureData(spec, xi, dens, cols)


def _nice_ceiling(v: float) -> float:
    if v <= 0:
        return 1.0
    exp = math.floor(math.log10(v))
    for m in (1, 2, 2.5, 5, 10):
        if m * 10 ** exp >= v:
            return m * 10 ** exp
    return 10 ** (exp + 1)


class _Axes:
    def __init__(self, xi_lo, xi_hi, dmax, pmax):
        self.xi_lo, self.xi_hi, self.dmax, self.pmax = xi_lo, xi_hi, dmax, pmax

    def x(self, xi):
        return LEFT + (xi - self.xi_lo) / (self.xi_hi - self.xi_lo) * (RIGHT - LEFT)

    def yd(self, d):
        return BOTTOM - d / self.dmax * (BOTTOM - TOP)

    def yp(self, p):
        return BOTTOM - p / self.pmax * (BOTTOM - TOP)


def _c(v: float) -> str:
    return f"{v:.2f}"


def render_svg(data: FigureData, sidecar_stem: str = "") -> str:
    spec = data.spec
    lo, hi = spec.xi_range
    dmax = _nice_ceiling(1.1 * float(data.density.max()))
    pmax = _nice_ceiling(1.1 * max([c["probability"] for c in data.columns]
                                   + [c["bin_integral"] for c in data.columns]))
    ax = _Axes(lo, hi, dmax, pmax)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" data-n="{spec.n}">',
        f'<title>Momentum spectrum, n = {spec.n}</title>',
        f'<desc data-density-csv="{sidecar_stem}.density.csv" data-bins-csv="{sidecar_stem}.bins.csv" '
        f'data-xi-min="{fmt(lo)}" data-xi-max="{fmt(hi)}" data-density-max="{fmt(dmax)}" '
        f'data-probability-max="{fmt(pmax)}"></desc>',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    # axes and ticks
    out.append(f'<line x1="{_c(LEFT)}" y1="{_c(BOTTOM)}" x2="{_c(RIGHT)}" y2="{_c(BOTTOM)}" stroke="black"/>')
    out.append(f'<line x1="{_c(LEFT)}" y1="{_c(TOP)}" x2="{_c(LEFT)}" y2="{_c(BOTTOM)}" stroke="black"/>')
    out.append(f'<line x1="{_c(RIGHT)}" y1="{_c(TOP)}" x2="{_c(RIGHT)}" y2="{_c(BOTTOM)}" stroke="black"/>')
    kmax = int(math.floor(hi / math.pi + 1e-9))
    tick_every = max(1, kmax // 7)
    for k in range(-kmax, kmax + 1):
        if k % tick_every:
            continue
        px = ax.x(k * math.pi)
        label = "0" if k == 0 else ("π" if k == 1 else "-π" if k == -1 else f"{k}π")
        out.append(f'<line x1="{_c(px)}" y1="{_c(BOTTOM)}" x2="{_c(px)}" y2="{_c(BOTTOM + 5)}" stroke="black"/>')
        out.append(f'<text x="{_c(px)}" y="{_c(BOTTOM + 20)}" font-size="12" text-anchor="middle">{label}</text>')
    for i in range(6):
        frac = i / 5
        py = BOTTOM - frac * (BOTTOM - TOP)
        out.append(f'<text x="{_c(LEFT - 8)}" y="{_c(py + 4)}" font-size="11" text-anchor="end" '
                   f'fill="green">{frac * dmax:.3g}</text>')
        out.append(f'<text x="{_c(RIGHT + 8)}" y="{_c(py + 4)}" font-size="11" text-anchor="start" '
                   f'fill="blue">{frac * pmax:.3g}</text>')
    out.append(f'<text x="{_c((LEFT + RIGHT) / 2)}" y="{_c(HEIGHT - 20)}" font-size="14" '
               f'text-anchor="middle">ξ = kL = p L / ħ</text>')
    out.append(f'<text x="20" y="{_c((TOP + BOTTOM) / 2)}" font-size="13" text-anchor="middle" fill="green" '
               f'transform="rotate(-90 20 {_c((TOP + BOTTOM) / 2)})">density per unit ξ</text>')
    out.append(f'<text x="{_c(WIDTH - 20)}" y="{_c((TOP + BOTTOM) / 2)}" font-size="13" text-anchor="middle" '
               f'fill="blue" transform="rotate(90 {_c(WIDTH - 20)} {_c((TOP + BOTTOM) / 2)})">probability</text>')

    # discrete probabilities: blue columns on the right axis
    col_half = 0.3 * math.pi
    for c in data.columns:
        x0, x1 = ax.x(c["xi"] - col_half), ax.x(c["xi"] + col_half)
        y = ax.yp(c["probability"])
        out.append(f'<rect class="column" x="{_c(x0)}" y="{_c(y)}" width="{_c(x1 - x0)}" '
                   f'height="{_c(BOTTOM - y)}" fill="blue" fill-opacity="0.6" '
                   f'data-l="{c["l"]}" data-xi="{fmt(c["xi"])}" data-probability="{fmt(c["probability"])}"/>')
    # bin integrals of the density: red bars on the right axis
    for c in data.columns:
        x0 = ax.x(c["xi"] - spec.bin_halfwidth)
        x1 = ax.x(c["xi"] + spec.bin_halfwidth)
        y = ax.yp(c["bin_integral"])
        out.append(f'<line class="bin" x1="{_c(x0)}" y1="{_c(y)}" x2="{_c(x1)}" y2="{_c(y)}" stroke="red" '
                   f'stroke-width="3" data-l="{c["l"]}" data-bin-integral="{fmt(c["bin_integral"])}"/>')
    # continuous density: green polyline on the left axis
    pts = " ".join(f"{_c(ax.x(x))},{_c(ax.yd(d))}" for x, d in zip(data.xi, data.density))
    out.append(f'<polyline class="density" fill="none" stroke="green" stroke-width="1.5" points="{pts}"/>')

    # legend
    lx, ly = LEFT + 12, TOP + 8
    out.append(f'<line x1="{_c(lx)}" y1="{_c(ly)}" x2="{_c(lx + 24)}" y2="{_c(ly)}" stroke="green" stroke-width="2"/>')
    out.append(f'<text x="{_c(lx + 30)}" y="{_c(ly + 4)}" font-size="12">density |c(ξ)|² (left axis, per unit ξ)</text>')
    out.append(f'<rect x="{_c(lx)}" y="{_c(ly + 12)}" width="24" height="10" fill="blue" fill-opacity="0.6"/>')
    out.append(f'<text x="{_c(lx + 30)}" y="{_c(ly + 22)}" font-size="12">periodic-basis probability |c_l|² at ξ = 2πl (right axis)</text>')
    out.append(f'<line x1="{_c(lx)}" y1="{_c(ly + 34)}" x2="{_c(lx + 24)}" y2="{_c(ly + 34)}" stroke="red" stroke-width="3"/>')
    out.append(f'<text x="{_c(lx + 30)}" y="{_c(ly + 38)}" font-size="12">density integrated over [2πl - π, 2πl + π] (right axis)</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def density_csv(data: FigureData) -> str:
    return csv_text(["xi", "density"], zip(data.xi, data.density))


def bins_csv(data: FigureData) -> str:
    rows = [(c["l"], c["xi"], c["probability"], c["density_at_xi"], c["bin_integral"]) for c in data.columns]
    return csv_text(["l", "xi", "probability", "density_at_xi", "bin_integral"], rows)


def sidecar_paths(out: Path) -> tuple[Path, Path]:
    stem = out.with_suffix("")
    return Path(f"{stem}.density.csv"), Path(f"{stem}.bins.csv")


def write_figure(spec: FigureSpec, out, threads: int = 1) -> FigureData:
    out = Path(out)
    data = build(spec, threads)
    dens_path, bins_path = sidecar_paths(out)
    write_text(out, render_svg(data, out.with_suffix("").name))
    write_text(dens_path, density_csv(data))
    write_text(bins_path, bins_csv(data))
    return data
