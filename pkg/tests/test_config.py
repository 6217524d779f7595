"""Scenario-file parsing and validation."""
from __future__ import annotations

import pytest

from steerkit import ConfigError, load_config, parse_config

HEADER = """\
[config]
version = 1

[params]
kappa1 = 1.0
kappa2 = 0.4
g1 = 10.0
g2 = 20.0
gamma_m = 0.01
"""


def test_minimal_config():
    cfg = parse_config(HEADER)
    assert cfg.params.kappa2 == 0.4
    assert cfg.params.n_th == 0.0
    assert cfg.run_block is None
    assert cfg.evolve is None and cfg.sweep is None


def test_params_full_and_comments():
    cfg = parse_config(
        HEADER
        + """\
n_th = 2.5     # hot bath
omega_m = 500.0
"""
    )
    assert cfg.params.n_th == 2.5
    assert cfg.params.omega_m == 500.0


def test_evolve_block():
    cfg = parse_config(HEADER + "\n[evolve]\nt_max = 12.0\nn_points = 100\n")
    assert cfg.run_block == "evolve"
    assert cfg.evolve.t_max == 12.0
    assert cfg.evolve.n_points == 100
    assert cfg.evolve.initial == "vacuum-thermal"


def test_spectra_block_defaults():
    cfg = parse_config(HEADER + "\n[spectra]\n")
    assert cfg.run_block == "spectra"
    assert cfg.spectra.omega_min is None
    assert cfg.spectra.n_points == 2001


def test_sweep_grid_block():
    cfg = parse_config(
        HEADER
        + """
[sweep]
mode = grid
objective = s21
axes = gamma_m 1.0 3.0 3; n_th 0.0 1.0 2
ties = kappa2=kappa1
stability_required = false
"""
    )
    assert cfg.sweep_mode == "grid"
    assert cfg.sweep.objective == "s21"
    assert [axis.name for axis in cfg.sweep.axes] == ["gamma_m", "n_th"]
    assert cfg.sweep.ties == {"kappa2": "kappa1"}
    assert cfg.sweep.stability_required is False
    assert cfg.swept is None


def test_sweep_minimize_block():
    cfg = parse_config(
        HEADER
        + """
[sweep]
mode = minimize
objective = s12
swept = gamma_m 10.0 20.0 2
axes = g1 0.5 10.0 11
"""
    )
    assert cfg.sweep_mode == "minimize"
    assert cfg.swept.name == "gamma_m"
    assert cfg.swept.steps == 2


def test_rwa_block():
    cfg = parse_config(HEADER + "\n[rwa]\nomega_m = 400.0\nmargin_factor = 20\n")
    assert cfg.run_block == "rwa"
    assert cfg.rwa.omega_m == 400.0
    assert cfg.rwa.margin_factor == 20.0


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("[params]\nkappa1 = 1\n", "missing [config]"),
        ("[config]\nversion = 2\n[params]\nkappa1 = 1\n", "version 2"),
        ("[config]\nversion = x\n[params]\nkappa1 = 1\n", "not an integer"),
        ("[config]\nversion = 1\n", "missing [params]"),
        ("[config]\nversion = 1\n[params]\nkappa1 = 1.0\n", "missing kappa2"),
        (HEADER.replace("0.01", "oops"), "not a number"),
        (HEADER.replace("gamma_m = 0.01", "gamma_m = -1.0"), "[params]"),
        (HEADER + "pump = 3.0\n", "unknown key"),
        (HEADER + "\n[plotting]\nstyle = dark\n", "unknown section"),
        (HEADER + "\n[evolve]\nt_max = 1\n\n[spectra]\n", "one run block"),
        (HEADER + "\n[evolve]\n", "missing t_max"),
        (HEADER + "\n[evolve]\nt_max = 0\n", "t_max must be > 0"),
        (HEADER + "\n[evolve]\nt_max = 1\nn_points = 0\n", "n_points"),
        (HEADER + "\n[evolve]\nt_max = 1\ninitial = coherent\n", "vacuum-thermal"),
        (HEADER + "\n[spectra]\nomega_min = -1\n", "both omega_min and omega_max"),
        (HEADER + "\n[spectra]\nomega_min = 2\nomega_max = -2\n", "omega_min < omega_max"),
        (HEADER + "\n[spectra]\nn_points = 1\n", "n_points"),
        (HEADER + "\n[sweep]\naxes = g1 1 2 3\n", "mode"),
        (HEADER + "\n[sweep]\nmode = grid\n", "missing axes"),
        (HEADER + "\n[sweep]\nmode = grid\naxes = g1 1 2\n", "name lo hi steps"),
        (HEADER + "\n[sweep]\nmode = grid\naxes = g9 1 2 3\n", "cannot sweep"),
        (HEADER + "\n[sweep]\nmode = grid\naxes = g1 2 1 3\n", "lo <= hi"),
        (
            HEADER + "\n[sweep]\nmode = grid\naxes = g1 1 2 3\nties = kappa2~kappa1\n",
            "dst=src",
        ),
        (
            HEADER + "\n[sweep]\nmode = grid\naxes = g1 1 2 3\nties = g1=g2\n",
            "[sweep]",
        ),
        (
            HEADER + "\n[sweep]\nmode = grid\naxes = g1 1 2 3\nobjective = s99\n",
            "objective",
        ),
        (HEADER + "\n[sweep]\nmode = minimize\naxes = g1 1 2 3\n", "swept"),
        (
            HEADER + "\n[sweep]\nmode = grid\naxes = g1 1 2 3\nswept = g2 1 2 2\n",
            "grid mode",
        ),
        (
            HEADER + "\n[sweep]\nmode = grid\naxes = g1 1 2 3\nstability_required = maybe\n",
            "boolean",
        ),
        (HEADER + "\n[rwa]\nmargin_factor = 0\n", "margin_factor"),
        (HEADER + "\n[rwa]\nphases = 3\n", "unknown key"),
        ("version = 1\n", "malformed config"),
    ],
)
def test_rejections(text, fragment):
    with pytest.raises(ConfigError) as excinfo:
        parse_config(text)
    assert fragment in str(excinfo.value)


def test_load_config_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "nope.ini")


def test_load_config_roundtrip(tmp_path):
    path = tmp_path / "scenario.ini"
    path.write_text(HEADER, encoding="utf-8")
    cfg = load_config(path)
    assert cfg.params.g2 == 20.0
