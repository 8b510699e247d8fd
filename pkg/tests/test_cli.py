import json

import pytest

from kahlerimm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert out, f"no stdout (stderr: {err})"
    return code, json.loads(out)


def test_analyze_deterministic(capsys):
    args = ("analyze", "--model", "cp", "--n", "1", "--scale", "1/2",
            "--b", "1", "--degree", "4")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert (code1, out1) == (code2, out2)
    assert code1 == 1
    doc = json.loads(out1)
    assert doc["verdict"] == "certified-not-resolvable"
    assert doc["witness"]["value"] == "-1/8"
    assert doc["schema_version"] == 1


def test_analyze_positive_exit_zero(capsys):
    code, doc = run_json(capsys, "analyze", "--model", "flat", "--n", "2",
                         "--b", "0", "--degree", "3")
    assert code == 0
    assert doc["verdict"] == "resolvable-up-to"
    assert doc["rank"] == 2


def test_analyze_bad_model_exit_two(capsys):
    code, out, err = run(capsys, "analyze", "--model", "nope",
                         "--degree", "2")
    assert code == 2
    assert "error" in json.loads(err)


def test_analyze_requires_one_source(capsys):
    code, out, err = run(capsys, "analyze", "--degree", "2")
    assert code == 2


def test_analyze_series_file(capsys, tmp_path):
    f = tmp_path / "series.txt"
    f.write_text("1 ; 1 ; 1 ; 0\n2 ; 2 ; -1 ; 0\n")
    code, doc = run_json(capsys, "analyze", "--series", str(f),
                         "--b", "0", "--degree", "2")
    assert code == 1
    assert doc["source"]["kind"] == "series"


def test_certificate_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "analyze", "--model", "omega4", "--n", "3",
                       "--b", "0", "--degree", "2")
    assert code == 1
    cert = tmp_path / "cert.json"
    cert.write_text(out)
    code, doc = run_json(capsys, "check-certificate", str(cert))
    assert code == 0 and doc["valid"] is True


def test_tampered_certificate_rejected(capsys, tmp_path):
    code, out, _ = run(capsys, "analyze", "--model", "cp", "--n", "1",
                       "--scale", "1/2", "--b", "1", "--degree", "4")
    doc = json.loads(out)
    doc["witness"]["components"] = ["1", "0", "0", "0"]  # not a violation
    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps(doc))
    code, checked = run_json(capsys, "check-certificate", str(cert))
    assert code == 1 and checked["valid"] is False


def test_immersion_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "emit-immersion", "--model", "ch",
                       "--n", "2", "--b", "-1", "--degree", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "immersion" and doc["verified"] is True
    f = tmp_path / "imm.json"
    f.write_text(out)
    code, checked = run_json(capsys, "check-certificate", str(f))
    assert code == 0 and checked["valid"] is True


def test_emit_immersion_refusal_prints_certificate(capsys):
    code, doc = run_json(capsys, "emit-immersion", "--model", "cp",
                         "--n", "1", "--scale", "1/2", "--b", "1",
                         "--degree", "4")
    assert code == 1
    assert doc["verdict"] == "certified-not-resolvable"


def test_hartogs_certificate_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "analyze", "--model", "hartogs_inv_sqrt",
                       "--c", "1", "--degree", "6", "--jmax", "6",
                       "--kmax", "3")
    assert code == 1
    doc = json.loads(out)
    assert doc["criterion"] == "hartogs"
    assert doc["witness"] == {"type": "hartogs", "j": 2, "k": 0,
                              "coefficient": "-1/8"}
    f = tmp_path / "cert.json"
    f.write_text(out)
    code, checked = run_json(capsys, "check-certificate", str(f))
    assert code == 0 and checked["valid"] is True


def test_hartogs_flags_rejected_for_matrix_models(capsys):
    code, _, err = run(capsys, "analyze", "--model", "cp", "--c", "1",
                       "--degree", "3")
    assert code == 2


def test_spec_file_source(capsys, tmp_path):
    spec = tmp_path / "model.json"
    spec.write_text(json.dumps(
        {"name": "cp", "parameters": {"n": 1, "scale": "1/2"}, "degree": 4}))
    code, doc = run_json(capsys, "analyze", "--spec", str(spec),
                         "--b", "1", "--degree", "4")
    assert code == 1
    assert doc["source"]["parameters"]["scale"] == "1/2"


def test_wallach_command(capsys):
    code, doc = run_json(capsys, "wallach", "--domain", "omega1",
                         "--sizes", "2,3", "--c", "1/5")
    assert code == 0
    assert doc["decision"] is True
    assert doc["membership"] == {"class": "discrete", "k": 1}
    code, doc = run_json(capsys, "wallach", "--r", "2", "--a", "2",
                         "--gamma", "5", "--c", "1/10")
    assert code == 1 and doc["decision"] is False


def test_wallach_cartan_hartogs_mode(capsys):
    code, doc = run_json(capsys, "wallach", "--r", "2", "--a", "2",
                         "--gamma", "5", "--c", "1", "--mu", "1/2")
    assert code == 1
    assert doc["failing_m"] == 0


def test_cigar_command(capsys):
    code, doc = run_json(capsys, "cigar", "--c", "1", "--nmax", "6")
    assert code == 1
    assert doc["first_negative_n"] == 4
    assert doc["coefficient"] == "-1/288"
    assert abs(doc["limit"]["float_value"] - 0.8069747108) < 1e-9


def test_bell_command(capsys):
    code, doc = run_json(capsys, "bell", "--n", "4",
                         "--x=-1,-1/2,-2/3,-3/2")
    assert code == 0
    assert doc["value"] == "-1/12"
    code, doc = run_json(capsys, "bell", "--n", "3", "--k", "2", "--x=1,1")
    assert doc["value"] == "3"


def test_einstein_command(capsys):
    code, doc = run_json(capsys, "einstein", "--model", "cp", "--n", "2",
                         "--b", "1", "--degree", "4")
    assert code == 0
    assert doc["lambda"] == "6"
    code, doc = run_json(capsys, "einstein", "--model", "cigar",
                         "--degree", "4")
    assert code == 1
    assert doc["not_einstein_at"]["m_j"] == [2]


def test_models_listing(capsys):
    code, doc = run_json(capsys, "models")
    assert code == 0
    assert "cp" in doc["models"]
    assert "omega4" in doc["models"]
    assert doc["models"]["cigar"]["parameters"]


def test_series_degree_too_low(capsys, tmp_path):
    f = tmp_path / "series.txt"
    f.write_text("1 ; 1 ; 1 ; 0\n")
    code, _, err = run(capsys, "analyze", "--series", str(f),
                       "--degree", "5")
    assert code == 2
