import json
import math

import numpy as np
import pytest

from ellipsegas import EllipseGeometry, FiniteKernel, GasFamily, PolyKind
from ellipsegas.cli import main


def run(args):
    return main(args)


def test_density_csv_roundtrip_and_determinism(tmp_path):
    out1 = tmp_path / "d1.csv"
    out2 = tmp_path / "d2.csv"
    args = ["density", "--family", "gegenbauer", "--a", "1", "--tau", "0.5",
            "--N", "4", "--nx", "8", "--ny", "6", "--output"]
    assert run(args + [str(out1)]) == 0
    assert run(args + [str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().strip().splitlines()
    assert lines[0] == "x,y,rho"
    assert len(lines) == 1 + 8 * 6
    # parsing reproduces the in-memory grid exactly
    kern = FiniteKernel(GasFamily(PolyKind.GEGENBAUER, 1.0), EllipseGeometry(0.5), 4)
    x, y, rho = (float(p) for p in lines[1].split(","))
    z = complex(x, y)
    from ellipsegas import contains
    expect = kern.eval(z, z).real if contains(kern.geometry, z) else 0.0
    assert rho == expect  # byte-exact repr round trip


def test_density_json_roundtrip(tmp_path):
    out = tmp_path / "d.json"
    assert run(["density", "--family", "gegenbauer", "--a", "1", "--tau", "0.5",
                "--N", "3", "--nx", "5", "--ny", "4", "--format", "json",
                "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["nx"] == 5 and payload["ny"] == 4
    assert len(payload["values"]) == 20


def test_density_fig1_command(tmp_path):
    out = tmp_path / "fig1.csv"
    assert run(["density", "--family", "gegenbauer", "--a", "1", "--tau", "0.005",
                "--N", "10", "--rescale", "fig1", "--nx", "40", "--ny", "40",
                "--xmin", "-1.1", "--xmax", "1.1", "--ymin", "-1.1", "--ymax", "1.1",
                "--output", str(out)]) == 0
    rows = [tuple(float(v) for v in ln.split(","))
            for ln in out.read_text().strip().splitlines()[1:]]
    mass = sum(r[2] for r in rows)
    ring = sum(r[2] for r in rows if math.hypot(r[0], r[1]) > 0.8)
    assert mass > 0 and 0.5 < ring / mass < 0.8  # N=10 ring fraction ~ 0.66


def test_density_invalid_grid_exits_2(tmp_path):
    assert run(["density", "--family", "gegenbauer", "--a", "1", "--tau", "0.5",
                "--N", "4", "--nx", "0", "--output", str(tmp_path / "x.csv")]) == 2


def test_density_io_failure_exits_3():
    assert run(["density", "--family", "gegenbauer", "--a", "1", "--tau", "0.5",
                "--N", "2", "--output", "/nonexistent-dir/zzz/x.csv"]) == 3


def test_kernel_finite_value(tmp_path, capsys):
    out = tmp_path / "k.json"
    assert run(["kernel", "--kind", "finite", "--family", "gegenbauer", "--a", "0",
                "--tau", "0.6", "--N", "1", "--points", "0,0", "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["values"][0]["re"] == pytest.approx(3 / (2 * math.pi), rel=1e-12)


def test_kernel_reference_diagonals(tmp_path):
    out = tmp_path / "k.json"
    assert run(["kernel", "--kind", "ginibre", "--points", "0.3,0.2",
                "--output", str(out)]) == 0
    assert json.loads(out.read_text())["values"][0]["re"] == pytest.approx(
        2 / math.pi, rel=1e-12)
    assert run(["kernel", "--kind", "sine", "--points", "0.4,0",
                "--output", str(out)]) == 0
    assert json.loads(out.read_text())["values"][0]["re"] == pytest.approx(
        1 / math.pi, rel=1e-12)


def test_kernel_inadmissible_point_exits_2(tmp_path):
    assert run(["kernel", "--kind", "bulk-weak", "--a", "1", "--s", "1",
                "--points", "0,0.9", "--output", str(tmp_path / "k.json")]) == 2


def test_kernel_pair_points(tmp_path):
    out = tmp_path / "k.json"
    assert run(["kernel", "--kind", "bulk-weak", "--a", "1", "--s", "1",
                "--points", "0,0,0.3,0.2;0.1,0.1", "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert len(payload["values"]) == 2


def test_converge_study(tmp_path):
    out = tmp_path / "c.json"
    assert run(["converge", "--study", "bulk-weak", "--a", "1", "--s", "1",
                "--schedule", "50,100,200", "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    sups = [r["sup_discrepancy"] for r in payload["rows"]]
    assert sups[0] > sups[1] > sups[2]
    assert payload["fitted_decay_exponent"] < -0.5


def test_orthocheck(tmp_path):
    out = tmp_path / "o.json"
    assert run(["orthocheck", "--family", "gegenbauer", "--a", "1", "--tau", "0.5",
                "--max-degree", "8", "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["max_offdiagonal"] < 1e-8
    assert payload["max_diagonal_error"] < 1e-8
    # the singular Chebyshev-I weight, including the 2 pi log v zero mode
    assert run(["orthocheck", "--family", "chebyshev-t", "--tau", "0.5",
                "--max-degree", "8", "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["max_offdiagonal"] < 1e-8
    assert payload["max_diagonal_error"] < 1e-8
    # Jacobi-minus with a focal 1/|1+z| singularity
    assert run(["orthocheck", "--family", "jacobi-minus", "--a", "0.5", "--tau", "0.5",
                "--max-degree", "8", "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["max_offdiagonal"] < 1e-7


def test_sample_command_reproducible(tmp_path):
    out1, out2 = tmp_path / "s1.ndjson", tmp_path / "s2.ndjson"
    args = ["sample", "--family", "gegenbauer", "--a", "1", "--tau", "0.5",
            "--N", "4", "--steps", "4000", "--burn-in", "500", "--thin", "100",
            "--seed", "12", "--output"]
    assert run(args + [str(out1)]) == 0
    assert run(args + [str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().strip().splitlines()
    summary = json.loads(lines[-1])["summary"]
    assert summary["algorithm"] == "pcg64"
    assert 0.0 < summary["acceptance_rate"] < 1.0
    assert len(lines) - 1 == summary["configurations"]
    conf = json.loads(lines[0])["points"]
    assert len(conf) == 4


def test_sample_invalid_N_exits_2(tmp_path):
    assert run(["sample", "--family", "gegenbauer", "--a", "1", "--tau", "0.5",
                "--N", "0", "--steps", "100", "--burn-in", "10",
                "--output", str(tmp_path / "s.ndjson")]) == 2


def test_threads_env_validation(tmp_path, monkeypatch):
    monkeypatch.setenv("ELLIPSE_GAS_THREADS", "not-a-number")
    assert run(["kernel", "--kind", "sine", "--points", "0,0",
                "--output", str(tmp_path / "k.json")]) == 2
    monkeypatch.setenv("ELLIPSE_GAS_THREADS", "4")
    assert run(["kernel", "--kind", "sine", "--points", "0,0",
                "--output", str(tmp_path / "k.json")]) == 0


def test_converge_strong_study(tmp_path):
    out = tmp_path / "cs.json"
    assert run(["converge", "--study", "strong", "--a", "1",
                "--schedule", "10,20,40", "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    sups = [r["sup_discrepancy"] for r in payload["rows"]]
    assert sups[0] > sups[1] > sups[2]


def test_density_fig3_command(tmp_path):
    # a = 100 interior fill: origin density well above a tenth of the max
    out = tmp_path / "fig3.json"
    assert run(["density", "--family", "gegenbauer", "--a", "100", "--tau", "0.5",
                "--N", "10", "--rescale", "fig3", "--nx", "21", "--ny", "21",
                "--xmin", "-1.4", "--xmax", "1.4", "--ymin", "-1.4", "--ymax", "1.4",
                "--format", "json", "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    vals = np.array(payload["values"]).reshape(21, 21)
    assert vals[10, 10] > 0.1 * vals.max()


def test_converge_edge_study(tmp_path):
    out = tmp_path / "ce.json"
    assert run(["converge", "--study", "edge-weak", "--a", "1", "--s", "1",
                "--schedule", "100,200,400", "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    sups = [r["sup_discrepancy"] for r in payload["rows"]]
    assert sups[0] > sups[1] > sups[2]
    assert sups[2] < 2e-3


def test_kernel_missing_parameters_exit_2(tmp_path):
    out = str(tmp_path / "k.json")
    assert run(["kernel", "--kind", "truncated", "--a", "0",
                "--points", "0,0", "--output", out]) == 2
    assert run(["kernel", "--kind", "elliptic-ginibre", "--N", "2",
                "--points", "0,0", "--output", out]) == 2
    assert run(["kernel", "--kind", "bulk-weak", "--a", "1",
                "--points", "0,0", "--output", out]) == 2  # missing s
    assert run(["kernel", "--kind", "sine", "--points", "zero,0",
                "--output", out]) == 2                      # malformed float
