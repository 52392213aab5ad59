import json
import math

import numpy as np
import pytest

from affine_fermions.cli import main


def run(argv, capsys):
    status = main(argv)
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def orthonormal_input(path, k=6):
    angles = [2 * math.pi * i / k for i in range(k)]
    doc = {
        "weights": [1.0 / k] * k,
        "phi": [
            [math.sqrt(2) * math.cos(t), math.sqrt(2) * math.sin(t)] for t in angles
        ],
    }
    path.write_text(json.dumps(doc))
    return path


def axes_triple_input(path, order=("L1", "L2", "L3")):
    columns = {"L1": [[1.0], [0.0]], "L2": [[0.0], [1.0]], "L3": [[1.0], [1.0]]}
    doc = {"n": 1}
    for slot, source in zip(("L1", "L2", "L3"), order):
        doc[slot] = columns[source]
    path.write_text(json.dumps(doc))
    return path


# ----------------------------------------------------------------- verify


def test_verify_default_run_passes(tmp_path, capsys):
    out = tmp_path / "report.json"
    status, _, _ = run(["verify", "--out", str(out)], capsys)
    assert status == 0
    report = json.loads(out.read_text())
    assert report["summary"]["failed"] == 0
    assert all(c["status"] == "pass" for c in report["checks"])


def test_verify_reports_are_byte_identical(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert run(["verify", "--seed", "7", "--out", str(a)], capsys)[0] == 0
    assert run(["verify", "--seed", "7", "--out", str(b)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_seed_change_keeps_verdicts(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    run(["verify", "--seed", "1", "--out", str(a)], capsys)
    run(["verify", "--seed", "2", "--out", str(b)], capsys)
    verdicts = lambda p: [(c["name"], c["status"]) for c in json.loads(p.read_text())["checks"]]
    assert verdicts(a) == verdicts(b)


def test_verify_tolerance_override_forces_failures(capsys):
    status, out, _ = run(["verify", "--tol", "collapse_pipeline=1e-30"], capsys)
    assert status == 1
    report = json.loads(out)
    failing = [c for c in report["checks"] if c["status"] == "fail"]
    assert any(c["name"] == "collapse_pipeline_equals_affine_det" for c in failing)
    assert all(c["measured"] > c["tolerance"] for c in failing)


def test_verify_unknown_tolerance_is_usage_error(capsys):
    status, _, err = run(["verify", "--tol", "nonsense=1"], capsys)
    assert status == 2
    assert "nonsense" in err


# ----------------------------------------------------------------- slater


def test_slater_orthonormal_example(tmp_path, capsys):
    path = orthonormal_input(tmp_path / "input.json")
    out_dir = tmp_path / "out"
    status, out, _ = run(
        ["slater", "--input", str(path), "--out", str(out_dir), "--format", "csv"],
        capsys,
    )
    assert status == 0
    report = json.loads((out_dir / "report.json").read_text())
    two = next(c for c in report["checks"] if c["name"] == "two_point_vs_gram")
    assert two["status"] == "pass"
    assert "two_point/6" in two["detail"]
    g1 = np.loadtxt(out_dir / "gamma1.csv", delimiter=",")
    assert g1.shape == (6, 6)
    g2 = np.loadtxt(out_dir / "gamma2.csv", delimiter=",")
    assert g2.shape == (36, 36)


def test_slater_json_kernel_export(tmp_path, capsys):
    path = orthonormal_input(tmp_path / "input.json")
    out_dir = tmp_path / "out"
    status, _, _ = run(["slater", "--input", str(path), "--out", str(out_dir)], capsys)
    assert status == 0
    doc = json.loads((out_dir / "gamma1.json").read_text())
    assert doc["shape"] == [6, 6]
    dense = np.zeros((6, 6))
    for i, j, value in doc["entries"]:
        dense[i, j] = value
    assert abs(np.trace(dense) / 6.0 - 2.0) < 1e-9  # orbital-sum trace


def test_slater_constant_wavefunction_zero_kernels(tmp_path, capsys):
    doc = {"weights": [0.25] * 4, "phi": [[1.0, 2.0]] * 4}
    path = tmp_path / "input.json"
    path.write_text(json.dumps(doc))
    out_dir = tmp_path / "out"
    status, _, _ = run(
        ["slater", "--input", str(path), "--out", str(out_dir), "--format", "csv"],
        capsys,
    )
    assert status == 0
    assert np.abs(np.loadtxt(out_dir / "gamma1.csv", delimiter=",")).max() == 0.0
    assert np.abs(np.loadtxt(out_dir / "gamma2.csv", delimiter=",")).max() == 0.0


def test_slater_rejects_bad_weights(tmp_path, capsys):
    doc = {"weights": [0.5, 0.6], "phi": [[0.0, 1.0], [1.0, 0.0]]}
    path = tmp_path / "input.json"
    path.write_text(json.dumps(doc))
    status, _, err = run(["slater", "--input", str(path)], capsys)
    assert status == 2
    assert "sum to 1" in err


def test_slater_rejects_missing_fields(tmp_path, capsys):
    path = tmp_path / "input.json"
    path.write_text(json.dumps({"weights": [0.5, 0.5]}))
    status, _, _ = run(["slater", "--input", str(path)], capsys)
    assert status == 2


# ------------------------------------------------------------- conjecture


def test_conjecture_degree_two(capsys):
    status, out, _ = run(["conjecture", "--dim", "2", "--arity", "3", "--degree", "2"], capsys)
    assert status == 0
    doc = json.loads(out)
    assert doc["nullspace"]["dimension"] == 1
    span = next(c for c in doc["checks"] if c["name"] == "affine_det_in_span")
    assert span["status"] == "pass"
    assert span["measured"] < 1e-8


@pytest.mark.parametrize("degree,dimension", [(1, 0), (0, 0)])
def test_conjecture_lower_degrees(capsys, degree, dimension):
    status, out, _ = run(
        ["conjecture", "--dim", "2", "--arity", "3", "--degree", str(degree)], capsys
    )
    assert status == 0
    assert json.loads(out)["nullspace"]["dimension"] == dimension


def test_conjecture_four_arguments(capsys):
    status, out, _ = run(["conjecture", "--dim", "2", "--arity", "4", "--degree", "2"], capsys)
    assert status == 0
    doc = json.loads(out)
    assert doc["nullspace"]["dimension"] == 0
    assert all(c["name"] != "affine_det_in_span" for c in doc["checks"])


def test_conjecture_size_overflow(capsys):
    status, _, err = run(["conjecture", "--dim", "9", "--arity", "6", "--degree", "3"], capsys)
    assert status == 2
    assert "exceeds" in err


# -------------------------------------------------------------- kashiwara


def test_kashiwara_axes_example(tmp_path, capsys):
    path = axes_triple_input(tmp_path / "triple.json")
    status, out, _ = run(["kashiwara", "--input", str(path)], capsys)
    assert status == 0
    doc = json.loads(out)
    assert doc["index"]["signature"] == -1
    assert doc["index"]["n_zero"] == 0


def test_kashiwara_permuted_triple_flips(tmp_path, capsys):
    path = axes_triple_input(tmp_path / "triple.json", order=("L2", "L1", "L3"))
    status, out, _ = run(["kashiwara", "--input", str(path)], capsys)
    assert status == 0
    assert json.loads(out)["index"]["signature"] == 1


def test_kashiwara_degenerate_triple(tmp_path, capsys):
    path = axes_triple_input(tmp_path / "triple.json", order=("L1", "L2", "L1"))
    status, out, _ = run(["kashiwara", "--input", str(path)], capsys)
    assert status == 0
    assert json.loads(out)["index"]["n_zero"] > 0


def test_kashiwara_rejects_non_lagrangian(tmp_path, capsys):
    doc = {
        "n": 2,
        "L1": [[1.0, 0.0], [0.0, 0.0], [0.0, 1.0], [0.0, 0.0]],
        "L2": [[0.0, 0.0], [0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
        "L3": [[1.0, 0.0], [0.0, 1.0], [1.0, 0.0], [0.0, 1.0]],
    }
    path = tmp_path / "triple.json"
    path.write_text(json.dumps(doc))
    status, _, err = run(["kashiwara", "--input", str(path)], capsys)
    assert status == 2
    assert "not Lagrangian" in err


# ----------------------------------------------------------- collapse-demo


def test_collapse_demo_runs_clean(capsys):
    status, out, _ = run(["collapse-demo", "--seed", "5"], capsys)
    assert status == 0
    doc = json.loads(out)
    assert doc["summary"]["failed"] == 0


def test_unknown_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
