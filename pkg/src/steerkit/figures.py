"""Frozen reference scenarios reproducible as CSV bundles.

Each recipe deterministically rebuilds the data behind one reference
figure of the study: fixed parameters, fixed grids, no randomness, so a
repeated run is byte-identical.  The CLI exposes these through
``steerkit reproduce <id> --out <dir>`` and writes a manifest describing
every parameter and grid next to the CSVs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import __version__
from .dynamics import evolve_moments, steady_state_lyapunov, vacuum_thermal_state
from .params import SystemParams
from .spectra import spectrum
from .steering import steering_products_reduced
from .sweep import AxisSpec, SweepSpec, minimize_steering

__all__ = ["FigureBundle", "available_figures", "build_figure"]

#: filename, header, rows
CsvSpec = tuple[str, list[str], list[tuple]]


@dataclass(frozen=True)
class FigureBundle:
    figure_id: str
    description: str
    files: list[CsvSpec]
    manifest: list[str]


def _param_lines(params: SystemParams) -> list[str]:
    lines = [
        f"kappa1 = {params.kappa1!r}",
        f"kappa2 = {params.kappa2!r}",
        f"g1 = {params.g1!r}",
        f"g2 = {params.g2!r}",
        f"gamma_m = {params.gamma_m!r}",
        f"n_th = {params.n_th!r}",
    ]
    if params.omega_m is not None:
        lines.append(f"omega_m = {params.omega_m!r}")
    return lines


def _steering_vs_time(params: SystemParams, times: np.ndarray) -> list[tuple]:
    states = evolve_moments(params, vacuum_thermal_state(params.n_th), times)
    rows = []
    for t, state in zip(times, states):
        s12, s21 = steering_products_reduced(state)
        rows.append((float(t), s12, s21))
    return rows


def _fig_evolution(figure_id, params, dt, n_steps, description):
    times = np.arange(1, n_steps + 1) * dt
    rows = _steering_vs_time(params, times)
    manifest = [
        *_param_lines(params),
        f"time grid: dt = {dt!r}, {n_steps} steps up to t = {float(times[-1])!r}",
        "initial state: cavities in vacuum, mechanics thermal at n_th",
    ]
    return FigureBundle(
        figure_id,
        description,
        [(f"fig{figure_id}_steering_vs_time.csv", ["t", "s12", "s21"], rows)],
        manifest,
    )


def _fig_2a():
    return _fig_evolution(
        "2a",
        SystemParams(1.0, 0.4, 10.0, 20.0, 0.01, 0.0),
        0.05,
        1200,
        "steering products versus time; loss asymmetry favouring S12",
    )


def _fig_2b():
    return _fig_evolution(
        "2b",
        SystemParams(1.0, 2.4, 12.0, 20.0, 0.01, 0.0),
        0.025,
        1200,
        "steering products versus time; loss asymmetry favouring S21",
    )


def _minimized_vs_g2(figure_id, objective, kappa2, n_ths, description):
    g2_values = np.arange(5.0, 31.0)
    axes = (AxisSpec("g1", 0.5, 30.0, 41),)
    rows = []
    for n_th in n_ths:
        for g2 in g2_values:
            base = SystemParams(1.0, kappa2, 1.0, float(g2), 0.01, float(n_th))
            spec = SweepSpec(base=base, axes=axes, objective=objective)
            point = minimize_steering(spec)[0]
            if point.feasible:
                rows.append((float(n_th), float(g2), point.best["g1"], point.value))
            else:
                rows.append((float(n_th), float(g2), float("nan"), float("nan")))
    header = ["n_th", "g2", "g1_opt", f"{objective}_min"]
    manifest = [
        "kappa1 = 1.0",
        f"kappa2 = {kappa2!r}",
        "gamma_m = 0.01",
        f"g2 grid: 5 .. 30 step 1 ({g2_values.size} values)",
        f"n_th values: {', '.join(repr(float(n)) for n in n_ths)}",
        "minimized over g1 in [0.5, 30] (41-point coarse grid + pattern search)",
        f"objective: steady-state {objective}",
        "note: g2 span and the g1 search box are estimated defaults",
    ]
    return FigureBundle(
        figure_id,
        description,
        [(f"fig{figure_id}_minimized_{objective}_vs_g2.csv", header, rows)],
        manifest,
    )


def _fig_2c():
    return _minimized_vs_g2(
        "2c",
        "s12",
        0.4,
        (0.0, 100.0, 300.0, 500.0, 700.0, 1000.0),
        "minimized steady S12 over g1 versus g2 at several bath occupations",
    )


def _fig_2d():
    return _minimized_vs_g2(
        "2d",
        "s21",
        2.4,
        (0.0, 20.0, 40.0),
        "minimized steady S21 over g1 versus g2 at several bath occupations",
    )


def _fig_3a():
    dt, n_steps = 0.005, 1600
    times = np.arange(1, n_steps + 1) * dt
    rows = []
    for gamma_m in (6.0, 8.0, 10.0):
        params = SystemParams(1.0, 1.0, 6.0, 10.0, gamma_m, 0.0)
        for t, s12, s21 in _steering_vs_time(params, times):
            rows.append((gamma_m, t, s12, s21))
    manifest = [
        "kappa1 = kappa2 = 1.0",
        "g1 = 6.0",
        "g2 = 10.0",
        "n_th = 0.0",
        "gamma_m values: 6.0, 8.0, 10.0",
        f"time grid: dt = {dt!r}, {n_steps} steps up to t = {float(times[-1])!r}",
        "initial state: cavities in vacuum, mechanics in vacuum",
    ]
    return FigureBundle(
        "3a",
        "steering products versus time at strong mechanical damping",
        [("fig3a_steering_vs_time.csv", ["gamma_m", "t", "s12", "s21"], rows)],
        manifest,
    )


def _fig_3b():
    gammas = np.arange(20, 281) * 0.05
    rows = []
    for n_th in (0.0, 0.3):
        for gamma_m in gammas:
            params = SystemParams(1.0, 1.0, 6.0, 10.0, float(gamma_m), n_th)
            s12, s21 = steering_products_reduced(steady_state_lyapunov(params))
            rows.append((n_th, float(gamma_m), s12, s21))
    manifest = [
        "kappa1 = kappa2 = 1.0",
        "g1 = 6.0",
        "g2 = 10.0",
        "n_th values: 0.0, 0.3",
        f"gamma_m grid: 1.0 .. 14.0 step 0.05 ({gammas.size} values)",
        "note: gamma_m span is an estimated default",
    ]
    return FigureBundle(
        "3b",
        "steady steering products versus mechanical damping at two bath occupations",
        [("fig3b_steering_vs_gamma.csv", ["n_th", "gamma_m", "s12", "s21"], rows)],
        manifest,
    )


def _spectral_figure(figure_id, params, omegas, description):
    table = spectrum(params, omegas)
    rows = [
        (float(w), float(s12), float(s21))
        for w, s12, s21 in zip(table.omega, table.s12, table.s21)
    ]
    manifest = [
        *_param_lines(params),
        f"omega grid: {float(omegas[0])!r} .. {float(omegas[-1])!r}, "
        f"{omegas.size} points",
    ]
    return FigureBundle(
        figure_id,
        description,
        [(f"fig{figure_id}_spectral_steering.csv", ["omega", "s12", "s21"], rows)],
        manifest,
    )


def _fig_4a():
    return _spectral_figure(
        "4a",
        SystemParams(1.0, 1.0, 6.0, 10.0, 0.01, 0.0),
        np.linspace(-12.0, 12.0, 2401),
        "spectral steering products at weak mechanical damping",
    )


def _fig_5a():
    return _spectral_figure(
        "5a",
        SystemParams(1.0, 1.0, 2.0, 3.0, 9.0, 0.0),
        np.linspace(-10.0, 10.0, 2001),
        "spectral steering products at strong mechanical damping",
    )


def _zero_frequency_vs_nth(figure_id, base, n_ths, description):
    rows = []
    for n_th in n_ths:
        params = SystemParams(
            base.kappa1, base.kappa2, base.g1, base.g2, base.gamma_m, float(n_th)
        )
        table = spectrum(params, np.asarray([0.0]))
        rows.append((float(n_th), float(table.s12[0]), float(table.s21[0])))
    manifest = [
        *_param_lines(base),
        f"n_th grid: {float(n_ths[0])!r} .. {float(n_ths[-1])!r}, "
        f"{len(n_ths)} points",
        "evaluated at omega = 0",
        "note: n_th span is an estimated default",
    ]
    return FigureBundle(
        figure_id,
        description,
        [
            (
                f"fig{figure_id}_zero_frequency_steering_vs_nth.csv",
                ["n_th", "s12_0", "s21_0"],
                rows,
            )
        ],
        manifest,
    )


def _fig_4b():
    return _zero_frequency_vs_nth(
        "4b",
        SystemParams(1.0, 1.0, 6.0, 10.0, 0.01, 0.0),
        np.arange(0, 241) * 50.0,
        "zero-frequency spectral steering versus bath occupation, weak damping",
    )


def _fig_5b():
    return _zero_frequency_vs_nth(
        "5b",
        SystemParams(1.0, 1.0, 2.0, 3.0, 9.0, 0.0),
        np.arange(0, 201) * 0.01,
        "zero-frequency spectral steering versus bath occupation, strong damping",
    )


def _fig_6():
    gammas = np.geomspace(0.1, 20.0, 24)
    axes = (AxisSpec("g1", 10.0 / 41, 10.0, 41), AxisSpec("g2", 10.0 / 41, 10.0, 41))
    rows = []
    for gamma_m in gammas:
        base = SystemParams(1.0, 1.0, 1.0, 1.0, float(gamma_m), 0.0)
        out = []
        for objective in ("s12", "s21"):
            spec = SweepSpec(base=base, axes=axes, objective=objective)
            point = minimize_steering(spec)[0]
            out.append(point.value if point.feasible else float("nan"))
        rows.append((float(gamma_m), out[0], out[1]))
    manifest = [
        "kappa1 = kappa2 = 1.0",
        "n_th = 0.0",
        f"gamma_m grid: geometric, 0.1 .. 20.0, {gammas.size} points",
        "minimized over g1, g2 in (0, 10] (41-point coarse grids + pattern search)",
        "note: gamma_m span and search boxes are estimated defaults",
    ]
    return FigureBundle(
        "6",
        "minimized steady steering products versus mechanical damping, equal losses",
        [("fig6_minimized_steering_vs_gamma.csv", ["gamma_m", "s12_min", "s21_min"], rows)],
        manifest,
    )


_REGISTRY: dict[str, Callable[[], FigureBundle]] = {
    "2a": _fig_2a,
    "2b": _fig_2b,
    "2c": _fig_2c,
    "2d": _fig_2d,
    "3a": _fig_3a,
    "3b": _fig_3b,
    "4a": _fig_4a,
    "4b": _fig_4b,
    "5a": _fig_5a,
    "5b": _fig_5b,
    "6": _fig_6,
}


def available_figures() -> list[str]:
    return list(_REGISTRY)


def build_figure(figure_id: str) -> FigureBundle:
    """Build the named bundle; ValueError lists valid ids for unknown ones."""
    try:
        builder = _REGISTRY[figure_id]
    except KeyError:
        raise ValueError(
            f"unknown figure id {figure_id!r}; valid ids: "
            f"{', '.join(available_figures())}"
        ) from None
    bundle = builder()
    manifest = [
        f"figure: {bundle.figure_id}",
        f"description: {bundle.description}",
        *bundle.manifest,
        *(f"file: {name} ({len(rows)} rows)" for name, _, rows in bundle.files),
        f"writer: steerkit {__version__}",
    ]
    return FigureBundle(bundle.figure_id, bundle.description, bundle.files, manifest)
