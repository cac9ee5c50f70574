import csv
import io
import json
import math

import numpy as np
import pytest

from rqcm.cli import main
from rqcm.minkowski import rest_mass
from rqcm.oscillator import sigma_n


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    header, body = rows[0], rows[1:]
    return [dict(zip(header, row)) for row in body]


def test_spectrum_values(capsys):
    code, out, _ = run_cli(capsys, "spectrum", "--nmax", "2", "--omega", "1",
                           "--m1", "1", "--m2", "1")
    assert code == 0
    rows = parse_csv(out)
    assert float(rows[0]["sigma"]) == 1.5
    assert float(rows[0]["M0"]) == rest_mass(1.0, 1.0, sigma_n(1.0, 0))
    assert rows[2]["degeneracy"] == "6"


def test_spectrum_formats_agree(capsys):
    code, csv_out, _ = run_cli(capsys, "spectrum", "--nmax", "3", "--omega", "0.7",
                               "--m1", "1.1", "--m2", "0.9", "--format", "csv")
    assert code == 0
    code, json_out, _ = run_cli(capsys, "spectrum", "--nmax", "3", "--omega", "0.7",
                                "--m1", "1.1", "--m2", "0.9", "--format", "json")
    assert code == 0
    crows = parse_csv(csv_out)
    jrows = json.loads(json_out)
    for c, j in zip(crows, jrows):
        for key in ("n", "degeneracy", "sigma", "M0"):
            assert float(c[key]) == float(j[key]), key


def test_spectrum_floats_round_trip(capsys):
    # 17 significant digits reproduce the doubles bit for bit
    _, out, _ = run_cli(capsys, "spectrum", "--nmax", "4", "--omega", "1.3",
                        "--m1", "1.0", "--m2", "2.0")
    for row in parse_csv(out):
        n = int(row["n"])
        assert float(row["sigma"]) == sigma_n(1.3, n)
        assert float(row["M0"]) == rest_mass(1.0, 2.0, sigma_n(1.3, n))


def test_eval_ground_state_profile(capsys):
    code, out, _ = run_cli(capsys, "eval", "--l", "0", "0", "0", "--omega", "1",
                           "--grid-min", "-3", "--grid-max", "3", "--samples", "31")
    assert code == 0
    rows = parse_csv(out)
    dens = [float(r["abs2_psi"]) for r in rows]
    assert max(dens) == dens[15]  # peak at xi = 0
    assert abs(float(rows[15]["xi"])) < 1e-12
    # symmetric Gaussian profile
    np.testing.assert_allclose(dens, dens[::-1], rtol=1e-12)


def test_eval_frame_equivalence(capsys):
    args = ["eval", "--l", "1", "0", "0", "--omega", "1.2", "--m1", "1", "--m2", "1.4",
            "--grid-min", "-2", "--grid-max", "2", "--samples", "9"]
    _, rest_out, _ = run_cli(capsys, *args)
    # boost along the grid axis so the 4-space sample points genuinely move
    _, moving_out, _ = run_cli(capsys, *args, "--v", "0.6", "0", "0")
    rest_rows, moving_rows = parse_csv(rest_out), parse_csv(moving_out)
    for a, b in zip(rest_rows, moving_rows):
        assert a["xi"] == b["xi"]
        assert abs(float(a["abs2_psi"]) - float(b["abs2_psi"])) <= 1e-10
    # the moving-frame sample points are genuinely different 4-space points
    assert any(a["c4"] != b["c4"] for a, b in zip(rest_rows, moving_rows))


def test_eval_momentum_width_scaling(capsys):
    # position width 1/sqrt(om) maps to momentum width sqrt(om):
    # |psi_m(om * u)|^2 = om^-3 |psi_p(u)|^2 for the ground state
    om = 4.0
    base = ["--l", "0", "0", "0", "--omega", str(om), "--samples", "9"]
    _, pos_out, _ = run_cli(capsys, "eval", *base, "--grid-min", "-2", "--grid-max", "2",
                            "--rep", "position")
    _, mom_out, _ = run_cli(capsys, "eval", *base, "--grid-min", "-8", "--grid-max", "8",
                            "--rep", "momentum")
    pos = parse_csv(pos_out)
    mom = parse_csv(mom_out)
    for p, m in zip(pos, mom):
        assert float(m["pi"]) == om * float(p["xi"])
        assert abs(float(m["abs2_psi"]) - float(p["abs2_psi"]) / om ** 3) <= 1e-12


def test_eval_bargmann_representation(capsys):
    code, out, _ = run_cli(capsys, "eval", "--l", "1", "0", "0", "--rep", "bargmann",
                           "--grid-min", "-2", "--grid-max", "2", "--samples", "5")
    assert code == 0
    rows = parse_csv(out)
    # monomial alpha^1: value equals the coordinate itself in the rest frame
    for r in rows:
        assert abs(float(r["re_psi"]) - float(r["alpha"])) < 1e-12


def test_eval_missing_config_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "eval", "--l", "0", "0", "0",
                           "--config", "/nonexistent/config.json")
    assert code == 2
    assert "error" in err


def test_eval_rejects_bad_representation_from_config(tmp_path, capsys):
    cfg = tmp_path / "rep.json"
    cfg.write_text(json.dumps({"representation": "phase-space"}))
    code, _, err = run_cli(capsys, "eval", "--l", "0", "0", "0", "--config", str(cfg))
    assert code == 2
    assert "representation" in err


def test_eval_rejects_superluminal(capsys):
    code, _, err = run_cli(capsys, "eval", "--l", "0", "0", "0", "--v", "1", "0", "0")
    assert code == 2


def test_transform_momentum_matches_closed_form(capsys):
    code, out, _ = run_cli(capsys, "transform", "--l", "1", "0", "0", "--to", "momentum",
                           "--grid-min", "-2", "--grid-max", "2", "--samples", "9")
    assert code == 0
    for r in parse_csv(out):
        assert abs(float(r["abs"]) - float(r["abs_closed_form"])) <= 1e-9


def test_transform_bargmann(capsys):
    code, out, _ = run_cli(capsys, "transform", "--l", "2", "0", "0", "--to", "bargmann",
                           "--grid-min", "-1.5", "--grid-max", "1.5", "--samples", "7",
                           "--order", "48")
    assert code == 0
    for r in parse_csv(out):
        alpha = float(r["alpha"])
        want = alpha ** 2 / math.sqrt(2.0)
        assert abs(float(r["re"]) - want) <= 1e-9


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"m1": 2.0, "m2": 2.0, "omega": 1.0}))
    _, out, _ = run_cli(capsys, "spectrum", "--nmax", "0", "--config", str(cfg))
    assert float(parse_csv(out)[0]["M0"]) == rest_mass(2.0, 2.0, 1.5)
    # flags override the file
    _, out, _ = run_cli(capsys, "spectrum", "--nmax", "0", "--config", str(cfg),
                        "--m1", "3.0")
    assert float(parse_csv(out)[0]["M0"]) == rest_mass(3.0, 2.0, 1.5)


def test_config_supplies_state_and_grid(tmp_path, capsys):
    cfg = tmp_path / "eval.json"
    cfg.write_text(json.dumps({
        "m1": 1.0, "m2": 1.0, "omega": 1.0, "l": [1, 0, 0],
        "v": [0.0, 0.0, 0.0], "representation": "position",
        "grid": {"axis": 1, "min": -1.0, "max": 1.0, "samples": 5},
        "format": "json",
    }))
    code, out, _ = run_cli(capsys, "eval", "--config", str(cfg))
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 5
    assert rows[0]["xi"] == -1.0
    assert abs(rows[2]["re_psi"]) < 1e-15  # odd state vanishes at the origin


def test_config_rejects_unknown_keys(tmp_path, capsys):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"mass": 2.0}))
    code, _, err = run_cli(capsys, "spectrum", "--config", str(cfg))
    assert code == 2
    assert "unknown config keys" in err


def test_output_file(tmp_path, capsys):
    out_path = tmp_path / "table.csv"
    code, out, _ = run_cli(capsys, "spectrum", "--nmax", "1", "--out", str(out_path))
    assert code == 0 and out == ""
    assert out_path.read_text().startswith("n,degeneracy,sigma,M0")


def test_verify_passes_and_exit_code(tmp_path, capsys):
    report = tmp_path / "report.json"
    code, _, err = run_cli(capsys, "verify", "--suite", "nr-limit",
                           "--report", str(report))
    assert code == 0
    data = json.loads(report.read_text())
    assert data["nr-limit"]["pass"] is True
    assert "pass" in err


def test_verify_negative_control_exit_code(capsys):
    code, out, err = run_cli(capsys, "verify", "--suite", "pde", "--points", "3",
                             "--sigma-perturb", "0.1")
    assert code == 1
    assert "FAIL" in err


def test_verify_unknown_suite_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2


def test_verify_all_default_passes(tmp_path, capsys):
    report = tmp_path / "all.json"
    code, _, err = run_cli(capsys, "verify", "--report", str(report))
    assert code == 0
    data = json.loads(report.read_text())
    assert set(data) == {"invariance", "pde", "ladder", "nr-limit", "transforms"}
    assert all(entry["pass"] for entry in data.values())


def test_verify_reports_byte_identical_under_seed(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run_cli(capsys, "verify", "--suite", "invariance", "--trials", "40",
                   "--seed", "5", "--report", str(a))[0] == 0
    assert run_cli(capsys, "verify", "--suite", "invariance", "--trials", "40",
                   "--seed", "5", "--report", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_hbar_omega_helper(capsys):
    code, _, err = run_cli(capsys, "spectrum", "--nmax", "0", "--m1", "1", "--m2", "1",
                           "--hbar-omega", "2.0")
    assert code == 0
    assert "Omega = m_r * omega" in err and "1" in err
