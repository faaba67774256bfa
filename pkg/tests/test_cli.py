import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest
from scipy.integrate import trapezoid

from manning_rosen.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def parse_csv(text):
    meta, rows, summary = {}, [], []
    lines = text.splitlines()
    body = []
    for ln in lines:
        if ln.startswith("# ") and " = " in ln and not body:
            k, v = ln[2:].split(" = ", 1)
            meta[k] = v
        elif ln.startswith("#"):
            (summary if body else []).append(ln[2:])
        else:
            body.append(ln)
    reader = csv.DictReader(io.StringIO("\n".join(body)))
    return meta, list(reader), summary


def test_energy_atomic():
    code, text = run("energy", "--A", "80", "--alpha", "0.75", "--inv-b", "0.025", "--mu", "1",
                     "--units", "atomic", "--state", "2p")
    assert code == 0
    _, rows, _ = parse_csv(text)
    assert float(rows[0]["e_closed_form"]) == pytest.approx(-0.1205793, abs=5e-8)
    assert rows[0]["flag"] == "ok"


@pytest.mark.parametrize("mol, value", [("CH", -3.60725796), ("HCl", -3.42259525)])
def test_energy_molecule(mol, value):
    code, text = run("energy", "--molecule", mol, "--column", "0.050", "--alpha", "1.5",
                     "--state", "2p", "--units", "ev_angstrom")
    assert code == 0
    _, rows, _ = parse_csv(text)
    assert float(rows[0]["e_closed_form"]) == pytest.approx(value, rel=1e-4)


def test_energy_not_bound_is_success():
    code, text = run("energy", "--A", "3.9", "--alpha", "0", "--inv-b", "1", "--mu", "1",
                     "--state", "2p")
    assert code == 0
    _, rows, _ = parse_csv(text)
    assert rows[0]["flag"] == "not-bound" and rows[0]["e_closed_form"] == ""


def test_critical_coupling():
    code, text = run("critical-coupling", "--alpha", "0", "--state", "2p")
    assert code == 0
    assert float(parse_csv(text)[1][0]["A_c"]) == 4.0


@pytest.mark.parametrize("argv", [
    ["energy", "--A", "80", "--alpha", "0.75", "--inv-b", "0", "--state", "2p"],
    ["energy", "--A", "80", "--alpha", "0.75", "--inv-b", "0.025", "--state", "2x"],
    ["energy", "--A", "80", "--alpha", "0.75", "--inv-b", "0.025"],
    ["energy", "--molecule", "NaCl", "--column", "0.05", "--state", "2p"],
    ["energy", "--molecule", "HCl", "--state", "2p"],
    ["energy", "--bogus"],
    ["table", "--which", "5"],
    ["compare", "--A", "80", "--alpha", "0.75", "--inv-b", "0.025", "--state", "2p", "--grid", "20001"],
])
def test_usage_errors(argv, capsys):
    code, _ = run(*argv)
    assert code == 2


def test_numerical_failure_exit_code():
    code, _ = run("compare", "--A", "80", "--alpha", "0.75", "--inv-b", "0.025", "--state", "2p",
                  "--grid", "400", "--refine", "2", "--max-error", "1e-15")
    assert code == 3


def test_table_one_summary():
    code, text = run("table", "--which", "1")
    assert code == 0
    _, rows, summary = parse_csv(text)
    assert len(rows) == 56
    assert any(s.startswith("max_abs_diff") for s in summary)


def test_table_three_flags_co():
    code, text = run("table", "--which", "3")
    _, rows, summary = parse_csv(text)
    flagged = [r for r in rows if r["flag"] == "known-discrepant"]
    assert len(flagged) == 29 and all(r["molecule"] == "CO" for r in flagged)
    assert any("ratio" in s for s in summary)
    ratios = sorted(float(r["ratio_vs_paper"]) for r in flagged)
    assert ratios[len(ratios) // 2] == pytest.approx(2.0, abs=0.002)


def test_format_duality_and_determinism():
    base = ["table", "--which", "2"]
    c1, t1 = run(*base)
    c2, t2 = run(*base)
    assert t1 == t2
    _, rows, _ = parse_csv(t1)
    _, tj = run(*base, "--format", "json")
    payload = json.loads(tj)
    assert len(payload["rows"]) == len(rows)
    cols = payload["columns"]
    for csv_row, json_row in zip(rows, payload["rows"]):
        for c, v in zip(cols, json_row):
            if isinstance(v, float):
                assert float(csv_row[c]) == v
            elif v is None:
                assert csv_row[c] == ""
            else:
                assert str(v) == csv_row[c] or float(csv_row[c]) == v


def test_wavefunction_export():
    code, text = run("wavefunction", "--A", "80", "--alpha", "0.75", "--inv-b", "0.025",
                     "--state", "4p", "--samples", "4000")
    assert code == 0
    meta, rows, _ = parse_csv(text)
    r = np.array([float(x["r"]) for x in rows])
    R = np.array([float(x["R"]) for x in rows])
    R2 = np.array([float(x["R2"]) for x in rows])
    assert r[0] == 0.0 and R[0] == 0.0
    assert r[-1] == pytest.approx(60 * 40.0)
    assert 0.999 <= trapezoid(R2, r) <= 1.001
    signs = np.sign(R[1:-1])
    signs = signs[signs != 0]
    assert int(meta["nodes"]) == int(np.count_nonzero(signs[1:] != signs[:-1])) == 2


def test_wavefunction_ground_state_integral():
    code, text = run("wavefunction", "--A", "80", "--alpha", "1.5", "--inv-b", "0.025",
                     "--state", "2p")
    _, rows, _ = parse_csv(text)
    r = np.array([float(x["r"]) for x in rows])
    R2 = np.array([float(x["R2"]) for x in rows])
    assert 0.999 <= trapezoid(R2, r) <= 1.001


def test_compare_table_cell():
    code, text = run("compare", "--A", "80", "--alpha", "0.75", "--inv-b", "0.025", "--state", "2p")
    assert code == 0
    _, rows, _ = parse_csv(text)
    row = rows[0]
    assert float(row["e_closed_form"]) == pytest.approx(-0.1205793, abs=5e-8)
    assert float(row["e_oracle_exact"]) == pytest.approx(-0.1205271, abs=1e-4)
    assert abs(float(row["approx_minus_closed"])) <= 1e-6


def test_compare_l0_modes_agree():
    code, text = run("compare", "--A", "80", "--alpha", "0.75", "--inv-b", "0.025", "--n", "1",
                     "--l", "0")
    row = parse_csv(text)[1][0]
    assert float(row["exact_minus_approx"]) == pytest.approx(0.0, abs=1e-12)


def test_potential_summaries():
    code, text = run("potential", "--A", "80", "--alpha", "0.5", "--inv-b", "0.025")
    assert code == 0 and "# no interior minimum" in text
    code, text = run("potential", "--A", "80", "--alpha", "1.5", "--inv-b", "0.025",
                     "--rmax", "20000")
    _, rows, summary = parse_csv(text)
    r0 = float(next(s for s in summary if s.startswith("r0")).split(" = ")[1])
    assert r0 == pytest.approx(40 * np.log(1.01875), rel=1e-12)
    ratio = float(next(s for s in summary if s.startswith("curvature_ratio")).split(" = ")[1])
    assert ratio == pytest.approx(2.0, rel=1e-6)
    scale = 1 / (2 * 40.0 ** 2)
    assert abs(float(rows[-1]["V"])) < 1e-12 * scale


def test_config_file(tmp_path):
    cfg = tmp_path / "cell.cfg"
    cfg.write_text("A = 80\nalpha = 0.75\ninv_b = 0.025\nmu = 1\nunits = atomic\n")
    code, text = run("energy", "--config", str(cfg), "--state", "2p")
    assert code == 0
    assert float(parse_csv(text)[1][0]["e_closed_form"]) == pytest.approx(-0.1205793, abs=5e-8)
    code, text = run("energy", "--config", str(cfg), "--alpha", "1.5", "--state", "2p")
    assert float(parse_csv(text)[1][0]["e_closed_form"]) == pytest.approx(-0.0900228, abs=1e-7)
    assert run("energy", "--config", str(tmp_path / "missing.cfg"), "--state", "2p")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "manning_rosen", "critical-coupling",
                           "--alpha", "0", "--n", "0", "--l", "0", "--format", "json"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["rows"][0][-1] == 1.0
