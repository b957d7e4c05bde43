"""End-to-end command line behavior and exit codes."""

import json
import subprocess
import sys

import pytest

from polydegen.cli import main


def run(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_family_writes_verified_document(tmp_path, capsys):
    out = tmp_path / "fam.json"
    code, _, _ = run(["family", "--l", "1", "--out", str(out)], capsys)
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["kind"] == "family"
    assert doc["l"] == 1
    assert all(entry["pass"] for entry in doc["transcript"])


def test_family_stdout_and_text_format(capsys):
    code, stdout, _ = run(["family", "--l", "1"], capsys)
    assert code == 0
    assert json.loads(stdout)["kind"] == "family"
    code, stdout, _ = run(["family", "--l", "1", "--format", "text"], capsys)
    assert code == 0
    assert "result: pass" in stdout


def test_emission_is_deterministic(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert run(["family", "--l", "2", "--out", str(a)], capsys)[0] == 0
    assert run(["family", "--l", "2", "--out", str(b)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_round_trip(tmp_path, capsys):
    doc_path = tmp_path / "fam.json"
    run(["family", "--l", "1", "--out", str(doc_path)], capsys)
    code, stdout, _ = run(["verify", "--in", str(doc_path)], capsys)
    assert code == 0
    assert "transcript match: yes" in stdout
    code, stdout, _ = run(
        ["verify", "--in", str(doc_path), "--format", "json"], capsys
    )
    assert code == 0
    report = json.loads(stdout)
    assert report["verified"] is True
    assert report["transcript_matches"] is True


def test_specialize_nonzero_alpha_gives_word(tmp_path, capsys):
    out = tmp_path / "word.json"
    code, _, _ = run(
        ["specialize", "--l", "1", "--alpha", "1/2", "--out", str(out)], capsys
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["kind"] == "tameness_word"
    assert doc["alpha"] == "1/2"
    assert len(doc["factors"]) == 3
    assert run(["verify", "--in", str(out)], capsys)[0] == 0


def test_specialize_zero_alpha_gives_wildness(tmp_path, capsys):
    out = tmp_path / "wild.json"
    code, _, _ = run(
        ["specialize", "--l", "1", "--alpha", "0", "--out", str(out)], capsys
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["kind"] == "wildness"
    assert doc["verdict"] == "wild"
    assert run(["verify", "--in", str(out)], capsys)[0] == 0


def test_specialize_reads_family_document(tmp_path, capsys):
    fam_path = tmp_path / "fam.json"
    run(["family", "--l", "2", "--out", str(fam_path)], capsys)
    out = tmp_path / "word.json"
    code, _, _ = run(
        ["specialize", "--in", str(fam_path), "--alpha", "3", "--out", str(out)],
        capsys,
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["l"] == 2
    assert doc["alpha"] == "3"


def test_specialize_flag_conflicts(tmp_path, capsys):
    fam_path = tmp_path / "fam.json"
    run(["family", "--l", "1", "--out", str(fam_path)], capsys)
    code, _, err = run(
        ["specialize", "--l", "1", "--in", str(fam_path), "--alpha", "1"], capsys
    )
    assert code == 2
    assert "either --l or --in" in err
    code, _, _ = run(["specialize", "--alpha", "1"], capsys)
    assert code == 2


def test_smith_document(tmp_path, capsys):
    out = tmp_path / "smith.json"
    code, _, _ = run(["smith", "--l", "1", "--out", str(out)], capsys)
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["kind"] == "stabilization"
    assert doc["factor_count"] == 4
    assert doc["extended_arity"] == 4
    assert doc["length_bounds"]["zero_alpha"] == 4
    assert run(["verify", "--in", str(out)], capsys)[0] == 0


def test_verify_flags_tampered_document(tmp_path, capsys):
    doc_path = tmp_path / "fam.json"
    run(["family", "--l", "1", "--out", str(doc_path)], capsys)
    doc = json.loads(doc_path.read_text())
    doc["h_limit"] = doc["h_limit"] + " + x2"
    doc_path.write_text(json.dumps(doc))
    code, stdout, _ = run(["verify", "--in", str(doc_path)], capsys)
    assert code == 1
    assert "FAIL" in stdout


def test_verify_flags_tampered_transcript(tmp_path, capsys):
    doc_path = tmp_path / "fam.json"
    run(["family", "--l", "1", "--out", str(doc_path)], capsys)
    doc = json.loads(doc_path.read_text())
    doc["transcript"][0]["identity"] = "something else"
    doc_path.write_text(json.dumps(doc))
    code, stdout, _ = run(["verify", "--in", str(doc_path)], capsys)
    assert code == 1
    assert "transcript match: NO" in stdout


def test_verify_parse_problems_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    assert run(["verify", "--in", str(bad)], capsys)[0] == 2
    missing = tmp_path / "missing.json"
    assert run(["verify", "--in", str(missing)], capsys)[0] == 2
    no_transcript = tmp_path / "no_transcript.json"
    doc = json.loads((run(["family", "--l", "1"], capsys))[1])
    del doc["transcript"]
    no_transcript.write_text(json.dumps(doc))
    assert run(["verify", "--in", str(no_transcript)], capsys)[0] == 2


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["family"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["family", "--l", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["specialize", "--l", "1", "--alpha", "pi"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_module_entry_point(tmp_path):
    out = tmp_path / "fam.json"
    result = subprocess.run(
        [sys.executable, "-m", "polydegen", "family", "--l", "1", "--out", str(out)],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert json.loads(out.read_text())["kind"] == "family"
    verify = subprocess.run(
        [sys.executable, "-m", "polydegen", "verify", "--in", str(out)],
        capture_output=True,
        text=True,
    )
    assert verify.returncode == 0
    assert "result: pass" in verify.stdout
