import json

import pytest

from lattice16 import cli

RHO6 = ".XX./.XX./.XX./...."
EX2R = "XX.X/X.X./.X.X/XX.X"


def run(capsys, *argv):
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", RHO6)
    assert code == 0
    payload = json.loads(out)
    assert payload["label"] == "SEPARABLE"
    assert payload["justification"] == "LP_CERTIFICATE"


def test_classify_ascii(capsys):
    code, out, _ = run(capsys, "--format", "ascii", "classify", EX2R)
    assert code == 0
    assert "PPT_ENTANGLED" in out
    assert "k-matrix" in out


def test_classify_numeric_double_check(capsys):
    code, out, _ = run(capsys, "--numeric-double-check", "classify", "0x000F")
    assert code == 0
    assert json.loads(out)["label"] == "NPT_ENTANGLED"


def test_classify_parse_error(capsys):
    code, _, err = run(capsys, "classify", "not-a-subset")
    assert code == 2
    assert "error" in err


def test_empty_subset_is_usage_error(capsys):
    code, _, err = run(capsys, "classify", "0x0000")
    assert code == 2
    assert "empty" in err


def test_bad_tolerance_rejected(capsys):
    code, _, err = run(capsys, "--tolerance", "0.5", "classify", RHO6)
    assert code == 2
    assert "tolerance" in err
    code, _, err = run(capsys, "--threads", "0", "classify", RHO6)
    assert code == 2


def test_render_forms(capsys):
    code, out, _ = run(capsys, "render", "0x8001", "--form", "pairs")
    assert code == 0
    assert out.strip() == "0,0;3,3"
    code, out, _ = run(capsys, "render", "0,0;3,3", "--form", "hex")
    assert out.strip() == "0x8001"
    code, out, _ = run(capsys, "render", RHO6, "--form", "grid")
    assert out.strip() == RHO6


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", RHO6)
    assert code == 0
    payload = json.loads(out)
    assert payload["orbit_size"] * payload["stabilizer_order"] == 1152


def test_witness_subcommand(capsys):
    code, out, _ = run(capsys, "witness", EX2R)
    assert code == 0
    reports = json.loads(out)
    assert reports and reports[0]["value"] == pytest.approx(-0.05)
    code, _, err = run(capsys, "witness", "0x000F")
    assert code == 2
    assert "NPT" in err


def test_decompose_subcommand(capsys, tmp_path):
    out_path = tmp_path / "cert.json"
    code, _, _ = run(capsys, "--out", str(out_path), "decompose", RHO6)
    assert code == 0
    payload = json.loads(out_path.read_text())
    assert payload["weights"]
    code, _, err = run(capsys, "decompose", "0x000F")
    assert code == 2


def test_ptspectrum(capsys):
    code, out, _ = run(capsys, "ptspectrum", "0xFFFF")
    assert code == 0
    payload = json.loads(out)
    assert payload["numeric"] == pytest.approx(payload["analytic"], abs=1e-9)
    assert payload["analytic"][0] == pytest.approx(1.0 / 16)


def test_census_subcommand(capsys, tmp_path):
    out_path = tmp_path / "census.jsonl"
    code, printed, _ = run(
        capsys, "--out", str(out_path), "census", "--min", "4", "--max", "4"
    )
    assert code == 0
    lines = out_path.read_text().strip().split("\n")
    records = [json.loads(l) for l in lines]
    assert all(r["N"] == 4 for r in records)
    assert sum(r["orbit_size"] for r in records) == 1820
    summary = (tmp_path / "census.jsonl.summary.csv").read_text()
    assert summary.splitlines()[4].startswith("4,")
    assert "summary" in printed


def test_verify_subcommand(capsys):
    code, out, _ = run(capsys, "verify", "--full")
    assert code == 0
    assert "OK" in out
