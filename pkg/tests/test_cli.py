"""End-to-end checks of the ``steerkit`` command-line interface.

Every test drives ``steerkit.cli.main`` in-process so exit codes and the
exact bytes on stdout/stderr are observable without spawning subprocesses.
"""
from __future__ import annotations

import pytest

from steerkit import (
    SystemParams,
    assess_stability,
    steady_state_lyapunov,
    steering_result,
)
from steerkit.cli import main

FIG2A = """\
[config]
version = 1

[params]
kappa1 = 1.0
kappa2 = 0.4
g1 = 10.0
g2 = 20.0
gamma_m = 0.01
"""

STEADY_HEADER = (
    "kappa1,kappa2,g1,g2,gamma_m,n_th,n1,n2,nm,re_c,im_c,s12,s21,e_n,class"
)


def write_config(tmp_path, text, name="scenario.ini"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def csv_rows(text):
    lines = text.splitlines()
    header = lines[0].split(",")
    return header, [line.split(",") for line in lines[1:]]


# ---------------------------------------------------------------------------
# steady


def test_steady_csv_round_trips_exactly(tmp_path, capsys):
    cfg = write_config(tmp_path, FIG2A)
    assert main(["steady", "--config", cfg, "--quiet"]) == 0
    out = capsys.readouterr()
    assert out.err == ""
    header, rows = csv_rows(out.out)
    assert ",".join(header) == STEADY_HEADER
    assert len(rows) == 1
    row = dict(zip(header, rows[0]))

    params = SystemParams(1.0, 0.4, 10.0, 20.0, 0.01, 0.0)
    moments = steady_state_lyapunov(params)
    result = steering_result(moments)
    # repr() round-trips doubles exactly, so the CSV cells must recover the
    # API values bit-for-bit (well beyond the 12 significant digits needed).
    assert float(row["n1"]) == moments.n1
    assert float(row["n2"]) == moments.n2
    assert float(row["nm"]) == moments.nm
    assert float(row["re_c"]) == moments.c.real
    assert float(row["im_c"]) == moments.c.imag
    assert float(row["s12"]) == result.s12
    assert float(row["s21"]) == result.s21
    assert float(row["e_n"]) == result.e_n
    assert row["class"] == result.classification == "one-way-2-steers-1"
    assert float(row["kappa2"]) == 0.4 and float(row["g2"]) == 20.0


def test_steady_report_goes_to_stderr(tmp_path, capsys):
    cfg = write_config(tmp_path, FIG2A)
    assert main(["steady", "--config", cfg]) == 0
    out = capsys.readouterr()
    assert out.out.startswith(STEADY_HEADER)
    assert "classification = one-way-2-steers-1" in out.err
    assert "stability: analytic=pass spectral=pass" in out.err


def test_steady_out_file_and_determinism(tmp_path, capsys):
    cfg = write_config(tmp_path, FIG2A)
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    assert main(["steady", "--config", cfg, "--out", str(first)]) == 0
    out = capsys.readouterr()
    assert f"wrote {first}" in out.out
    assert main(["steady", "--config", cfg, "--out", str(second), "--quiet"]) == 0
    assert capsys.readouterr().out == ""
    blob = first.read_bytes()
    assert blob == second.read_bytes()
    assert b"\r" not in blob and blob.endswith(b"\n")


def test_steady_decoupled_cavity_reports_no_steering(tmp_path, capsys):
    cfg = write_config(tmp_path, FIG2A.replace("g1 = 10.0", "g1 = 0.0"))
    assert main(["steady", "--config", cfg, "--quiet"]) == 0
    header, rows = csv_rows(capsys.readouterr().out)
    row = dict(zip(header, rows[0]))
    assert row["class"] == "no-steering"
    assert float(row["e_n"]) == 0.0


# ---------------------------------------------------------------------------
# evolve


def test_evolve_csv_structure_and_steady_limit(tmp_path, capsys):
    params = SystemParams(1.0, 0.4, 10.0, 20.0, 0.01, 0.0)
    rate = abs(assess_stability(params).max_real_eigenvalue)
    t_max = 20.0 / rate
    cfg = write_config(
        tmp_path, FIG2A + f"\n[evolve]\nt_max = {t_max!r}\nn_points = 40\n"
    )
    assert main(["evolve", "--config", cfg, "--quiet"]) == 0
    header, rows = csv_rows(capsys.readouterr().out)
    assert header == ["t", "s12", "s21", "e_n", "n1", "n2", "nm"]
    assert len(rows) == 41  # the t = 0 initial state plus 40 reported times
    assert float(rows[0][0]) == 0.0
    # vacuum initial state: unit steering products, no entanglement
    assert float(rows[0][1]) == 1.0 and float(rows[0][2]) == 1.0
    assert float(rows[0][3]) == 0.0
    assert float(rows[-1][0]) == pytest.approx(t_max, rel=1e-12)

    steady = steering_result(steady_state_lyapunov(params))
    assert float(rows[-1][1]) == pytest.approx(steady.s12, abs=1e-4)
    assert float(rows[-1][2]) == pytest.approx(steady.s21, abs=1e-4)


def test_evolve_requires_block(tmp_path, capsys):
    cfg = write_config(tmp_path, FIG2A)
    assert main(["evolve", "--config", cfg]) == 2
    assert "error:" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# spectra


def test_spectra_csv(tmp_path, capsys):
    cfg = write_config(
        tmp_path,
        FIG2A.replace("kappa2 = 0.4", "kappa2 = 1.0").replace("g1 = 10.0", "g1 = 6.0")
        + "\n[spectra]\nomega_min = -12\nomega_max = 12\nn_points = 25\n",
    )
    assert main(["spectra", "--config", cfg, "--quiet"]) == 0
    header, rows = csv_rows(capsys.readouterr().out)
    assert header == ["omega", "var_x1", "var_x2", "cross", "s12", "s21", "n1_out", "n2_out"]
    assert len(rows) == 25
    assert float(rows[0][0]) == -12.0 and float(rows[-1][0]) == 12.0
    assert float(rows[12][0]) == 0.0
    for row in rows:
        assert float(row[1]) > 0.0 and float(row[2]) > 0.0


def test_spectra_requires_block(tmp_path, capsys):
    cfg = write_config(tmp_path, FIG2A)
    assert main(["spectra", "--config", cfg]) == 2
    assert "error:" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# sweep


def test_sweep_grid_csv(tmp_path, capsys):
    cfg = write_config(
        tmp_path,
        FIG2A
        + """
[sweep]
mode = grid
axes = gamma_m 0.01 0.02 2; n_th 0.0 1.0 2
""",
    )
    assert main(["sweep", "--config", cfg, "--quiet"]) == 0
    header, rows = csv_rows(capsys.readouterr().out)
    assert header == ["gamma_m", "n_th", "stable", "s12", "s21", "e_n"]
    assert len(rows) == 4
    assert [row[1] for row in rows] == ["0.0", "1.0", "0.0", "1.0"]  # last axis fastest
    assert all(row[2] == "true" for row in rows)


def test_sweep_minimize_csv(tmp_path, capsys):
    cfg = write_config(
        tmp_path,
        FIG2A.replace("kappa2 = 0.4", "kappa2 = 1.0")
        + """
[sweep]
mode = minimize
objective = s21
swept = gamma_m 5.0 10.0 2
axes = g1 0.5 8.0 9; g2 1.0 10.0 10
""",
    )
    assert main(["sweep", "--config", cfg, "--quiet"]) == 0
    header, rows = csv_rows(capsys.readouterr().out)
    assert header == ["gamma_m", "g1_opt", "g2_opt", "s21", "feasible"]
    assert len(rows) == 2
    for row in rows:
        assert row[4] == "true"
        assert float(row[3]) < 1.0


# ---------------------------------------------------------------------------
# check


def test_check_reports_key_value_lines(tmp_path, capsys):
    cfg = write_config(tmp_path, FIG2A)
    assert main(["check", "--config", cfg]) == 0
    out = capsys.readouterr().out
    lines = dict(
        line.split(" = ", 1) for line in out.splitlines() if " = " in line
    )
    assert lines["stability.analytic"] == "pass"
    assert lines["stability.spectral"] == "pass"
    assert lines["predicate.s12_oneway_weak"].startswith("pass (lhs=36.0 > rhs=")
    assert lines["predicate.entangled_weak"].startswith("pass (lhs=160.0 > rhs=100.0")
    assert lines["predicate.s21_cond_strong"].startswith("n/a (")
    assert lines["omega"] == repr(300.0 ** 0.5)
    assert lines["rwa"] == "not assessable (omega_m not set)"
    # kappa1 != kappa2: the equal-damping closed forms are undefined
    assert lines["thermal_window"].startswith("n/a (")
    assert lines["resonances"].startswith("n/a (")
    assert lines["squeezed_frame"].startswith("n/a (")


def test_check_equal_kappa_with_rwa_block(tmp_path, capsys):
    cfg = write_config(
        tmp_path,
        FIG2A.replace("kappa2 = 0.4", "kappa2 = 1.0")
        .replace("g1 = 10.0", "g1 = 6.0")
        .replace("g2 = 20.0", "g2 = 10.0")
        + "\n[rwa]\nomega_m = 500.0\nmargin_factor = 10\n",
    )
    assert main(["check", "--config", cfg]) == 0
    out = capsys.readouterr().out
    lines = dict(
        line.split(" = ", 1) for line in out.splitlines() if " = " in line
    )
    assert lines["spectral_oneway_threshold.gamma_m_star"] == repr(100.0)
    assert lines["squeezed_frame.omega"] == repr(8.0)
    assert lines["rwa.overall"] == "pass"
    assert "resonances" in lines and len(lines["resonances"].split()) == 3
    assert lines["thermal_window"].startswith("n_th in (")


def test_check_out_file(tmp_path, capsys):
    cfg = write_config(tmp_path, FIG2A)
    out_path = tmp_path / "check.txt"
    assert main(["check", "--config", cfg, "--out", str(out_path), "--quiet"]) == 0
    assert capsys.readouterr().out == ""
    assert "stability.analytic = pass" in out_path.read_text(encoding="utf-8")


# ---------------------------------------------------------------------------
# reproduce


def test_reproduce_writes_bundle(tmp_path, capsys):
    out_dir = tmp_path / "fig4a"
    assert main(["reproduce", "4a", "--out", str(out_dir)]) == 0
    messages = capsys.readouterr().out
    files = sorted(p.name for p in out_dir.iterdir())
    assert "fig4a_manifest.txt" in files
    assert any(name.endswith(".csv") for name in files)
    for name in files:
        assert f"wrote {out_dir / name}" in messages
    manifest = (out_dir / "fig4a_manifest.txt").read_text(encoding="utf-8")
    assert manifest.startswith("figure: 4a")
    assert "writer: steerkit" in manifest


def test_reproduce_unknown_figure(tmp_path, capsys):
    assert main(["reproduce", "9z", "--out", str(tmp_path / "x")]) == 2
    err = capsys.readouterr().err
    assert "error:" in err and "2a" in err  # lists the valid ids


# ---------------------------------------------------------------------------
# exit codes and argument errors


def test_exit_2_missing_config(tmp_path, capsys):
    assert main(["steady", "--config", str(tmp_path / "absent.ini")]) == 2
    assert "error: cannot read config" in capsys.readouterr().err


def test_exit_2_bad_version(tmp_path, capsys):
    cfg = write_config(tmp_path, FIG2A.replace("version = 1", "version = 2"))
    assert main(["steady", "--config", cfg]) == 2
    assert "version" in capsys.readouterr().err


def test_exit_3_unstable(tmp_path, capsys):
    cfg = write_config(
        tmp_path,
        FIG2A.replace("kappa2 = 0.4", "kappa2 = 1.0")
        .replace("g1 = 10.0", "g1 = 20.0")
        .replace("g2 = 20.0", "g2 = 10.0"),
    )
    assert main(["steady", "--config", cfg]) == 3
    assert "not strictly stable" in capsys.readouterr().err


def test_exit_4_singular_spectrum(tmp_path, capsys):
    cfg = write_config(
        tmp_path,
        FIG2A.replace("kappa2 = 0.4", "kappa2 = 1.0")
        .replace("g1 = 10.0", "g1 = 5.0")
        .replace("g2 = 20.0", "g2 = 5.0")
        .replace("gamma_m = 0.01", "gamma_m = 0.0")
        + "\n[spectra]\nomega_min = -1\nomega_max = 1\nn_points = 3\n",
    )
    assert main(["spectra", "--config", cfg]) == 4
    assert "singular" in capsys.readouterr().err


def test_argparse_rejects_unknown_format(tmp_path):
    cfg = write_config(tmp_path, FIG2A)
    with pytest.raises(SystemExit) as excinfo:
        main(["steady", "--config", cfg, "--format", "json"])
    assert excinfo.value.code == 2


def test_argparse_requires_command():
    with pytest.raises(SystemExit) as excinfo:
        main([])
    assert excinfo.value.code == 2


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
    assert capsys.readouterr().out.strip() == "steerkit 0.1.0"
