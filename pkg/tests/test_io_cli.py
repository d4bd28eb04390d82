"""Definition-document parsing and the command-line front-end."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest

from hopfpi import verify_hopf, verify_pi_coalgebra
from hopfpi.cli import main
from hopfpi.docio import document_from_json, document_to_json, load_document
from hopfpi.errors import ParseError

F = Fraction


# -- documents -----------------------------------------------------------------


def test_fixture_files_load_and_verify(fixture_dir):
    for name in ("kz2_rational.json", "f7_z3.json", "kz2_constant_z2.json",
                 "f7z3_constant_z2.json", "taft4_rational.json"):
        doc = load_document(fixture_dir / name)
        assert verify_pi_coalgebra(doc.hopf).ok, name
        assert verify_hopf(doc.hopf).ok, name


def test_document_roundtrip(kz2_const):
    data = document_to_json(kz2_const, name="roundtrip",
                            ideals={"kerEps": [[1, -1]]})
    doc = document_from_json(data)
    h = doc.hopf
    assert h.dims == kz2_const.dims
    for key, m in kz2_const.comult.items():
        assert doc.hopf.comult[key] == m
    assert h.counit == kz2_const.counit
    for a in h.group.elements():
        assert h.mult[a] == kz2_const.mult[a]
        assert h.antipode[a] == kz2_const.antipode[a]
        assert h.psi[a] == kz2_const.psi[a]
    assert doc.ideal_generators["kerEps"] == [(F(1), F(-1))]


def test_rational_scalars_parse_exactly(kz2):
    data = document_to_json(kz2, name="scalars")
    data["counit"] = ["1/1", "3/3"]  # still the all-ones functional
    doc = document_from_json(data)
    assert doc.hopf.counit == kz2.counit


def test_parse_rejects_floats(kz2):
    data = document_to_json(kz2)
    data["counit"] = [1.0, 1]
    with pytest.raises(ParseError):
        document_from_json(data)


def test_parse_rejects_bad_schema(kz2):
    data = document_to_json(kz2)
    data["schema"] = "hpc-0"
    with pytest.raises(ParseError):
        document_from_json(data)


def test_parse_rejects_missing_comult(kz2):
    data = document_to_json(kz2)
    del data["comult"]["0,0"]
    with pytest.raises(ParseError) as err:
        document_from_json(data)
    assert "comult" in str(err.value)


def test_parse_rejects_bad_group(kz2):
    data = document_to_json(kz2)
    data["group"]["table"] = [[0, 1], [1, 1]]
    with pytest.raises(ParseError) as err:
        document_from_json(data)
    assert "group" in str(err.value)


def test_parse_rejects_wrong_shape(kz2):
    data = document_to_json(kz2)
    data["antipode"]["0"] = [[1, 0]]
    with pytest.raises(ParseError):
        document_from_json(data)


# -- CLI ------------------------------------------------------------------------


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out


def test_cli_verify_pass(fixture_dir, capsys):
    code, out = run_cli(capsys, "verify", str(fixture_dir / "kz2_rational.json"))
    assert code == 0
    assert "result: PASS" in out


def test_cli_verify_corrupted_antipode(fixture_dir, capsys):
    code, out = run_cli(capsys, "verify", str(fixture_dir / "kz2_bad_antipode.json"))
    assert code == 1
    assert "antipode-axiom" in out
    assert "basis u" in out


def test_cli_truncated_file(tmp_path, capsys):
    bad = tmp_path / "broken.json"
    bad.write_text('{"schema": "hpc-1", "group": {')
    code, _ = run_cli(capsys, "verify", str(bad))
    assert code == 2


def test_cli_calculus_universal(fixture_dir, capsys):
    code, out = run_cli(capsys, "calculus", str(fixture_dir / "kz2_rational.json"),
                        "--universal")
    assert code == 0
    assert "Gamma: [2]" in out
    assert "covariance: bicovariant" in out


def test_cli_calculus_ideal_f7(fixture_dir, capsys):
    code, out = run_cli(capsys, "calculus", str(fixture_dir / "f7_z3.json"),
                        "--ideal", "R1")
    assert code == 0
    assert "Gamma: [3]" in out
    assert "covariance: bicovariant" in out


def test_cli_calculus_kereps(fixture_dir, capsys):
    code, out = run_cli(capsys, "calculus", str(fixture_dir / "kz2_rational.json"),
                        "--ideal", "kerEps")
    assert code == 0
    assert "Gamma: [0]" in out


def test_cli_calculus_right_route(fixture_dir, capsys):
    code, out = run_cli(capsys, "calculus", str(fixture_dir / "f7_z3.json"),
                        "--ideal", "R1", "--right")
    assert code == 0
    assert "Gamma: [3]" in out


def test_cli_calculus_unknown_ideal(fixture_dir, capsys):
    code, _ = run_cli(capsys, "calculus", str(fixture_dir / "kz2_rational.json"),
                      "--ideal", "nope")
    assert code == 2


def test_cli_calculus_bad_generator(fixture_dir, tmp_path, capsys):
    data = json.loads((fixture_dir / "kz2_rational.json").read_text())
    data["ideals"]["bad"] = [[1, 0]]  # ε = 1 ≠ 0
    p = tmp_path / "bad_ideal.json"
    p.write_text(json.dumps(data))
    code, _ = run_cli(capsys, "calculus", str(p), "--ideal", "bad")
    assert code == 2


def test_cli_verify_exit1_blocks_calculus(fixture_dir, capsys):
    code, out = run_cli(capsys, "calculus", str(fixture_dir / "kz2_bad_antipode.json"),
                        "--universal")
    assert code == 1
    assert "not computed" in out


def test_cli_structure_kz2(fixture_dir, capsys):
    code, out = run_cli(capsys, "structure", str(fixture_dir / "kz2_rational.json"),
                        "--universal")
    assert code == 0
    assert "frame size: 1" in out
    assert "reconstruction-roundtrip" in out
    assert "result: PASS" in out


def test_cli_structure_f7(fixture_dir, capsys):
    code, out = run_cli(capsys, "structure", str(fixture_dir / "f7_z3.json"),
                        "--universal")
    assert code == 0
    assert "frame size: 2" in out


def test_cli_structure_constant_family(fixture_dir, capsys):
    code, out = run_cli(capsys, "structure",
                        str(fixture_dir / "f7z3_constant_z2.json"), "--ideal", "R1")
    assert code == 0
    assert "frame size: 1" in out


def test_cli_enumerate_f7(fixture_dir, capsys):
    code, out = run_cli(capsys, "enumerate", str(fixture_dir / "f7_z3.json"))
    assert code == 0
    assert out.count("yes") >= 4 * 5
    assert "[6]" in out and "[3]" in out and "[0]" in out


def test_cli_enumerate_rational_unsupported(fixture_dir, capsys):
    code, _ = run_cli(capsys, "enumerate", str(fixture_dir / "kz2_rational.json"))
    assert code == 2


def test_cli_enumerate_max_dim(fixture_dir, capsys):
    code, out = run_cli(capsys, "enumerate", str(fixture_dir / "f7_z3.json"),
                        "--max-dim", "1")
    assert code == 0
    assert "[0]" not in out   # the 2-dim ideal (Γ = 0) is filtered out


def test_cli_json_format(fixture_dir, capsys):
    code, out = run_cli(capsys, "verify", str(fixture_dir / "f7_z3.json"),
                        "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["result"] == "pass"
    assert any(c["name"] == "coassociativity" for c in payload["checks"])


def test_cli_reports_deterministic(fixture_dir, capsys):
    outputs = []
    for _ in range(2):
        code, out = run_cli(capsys, "enumerate", str(fixture_dir / "f7_z3.json"))
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]
    jsons = []
    for _ in range(2):
        code, out = run_cli(capsys, "structure", str(fixture_dir / "f7_z3.json"),
                            "--universal", "--format", "json")
        assert code == 0
        jsons.append(out)
    assert jsons[0] == jsons[1]


def test_cli_structure_non_involutive_reports_obstruction(fixture_dir, capsys):
    """On the Taft fixture the mixed f/g identities fail (order-four
    antipode); the CLI reports the obstruction as a mathematical error."""
    code = main(["structure", str(fixture_dir / "taft4_rational.json"), "--universal"])
    capsys.readouterr()
    assert code == 1


def test_cli_calculus_taft_ideal(fixture_dir, capsys):
    code, out = run_cli(capsys, "calculus", str(fixture_dir / "taft4_rational.json"),
                        "--ideal", "kerEpsPart")
    assert code == 0
    assert "Gamma: [4]" in out


def test_cli_output_identical_under_parallel_verification(fixture_dir, capsys, monkeypatch):
    outputs = []
    for threads in ("1", "4"):
        monkeypatch.setenv("HPC_THREADS", threads)
        code, out = run_cli(capsys, "verify", str(fixture_dir / "f7z3_constant_z2.json"))
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]
