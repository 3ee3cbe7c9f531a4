import json
import subprocess
import sys

import pytest

from twisted_descents.cli import EXIT_CAP, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_conv(capsys):
    code, out, _ = run(capsys, "conv", "[{3,5}]", "[{1,4}]")
    assert code == EXIT_OK
    assert out == "1*[{3,5}|{1,4}]\n"


def test_conv_overlap_is_zero(capsys):
    code, out, _ = run(capsys, "conv", "[{1,2}]", "[{1,2}]")
    assert code == EXIT_OK
    assert out == "0\n"


def test_conv_unit(capsys):
    code, out, _ = run(capsys, "conv", "[]", "[{2}]")
    assert code == EXIT_OK
    assert out == "1*[{2}]\n"


def test_comp_support_mismatch(capsys):
    code, out, _ = run(capsys, "comp", "[{1}]", "[{2}]")
    assert code == EXIT_OK
    assert out == "0\n"


def test_comp(capsys):
    code, out, _ = run(capsys, "comp", "[{3,5}|{1,4}]", "[{5}|{1,3,4}]")
    assert code == EXIT_OK
    assert out == "1*[{5}|{3}|{1,4}]\n"


def test_coprod(capsys):
    code, out, _ = run(capsys, "coprod", "[]")
    assert code == EXIT_OK
    assert out == "1*[]⊗[]\n"
    code, out, _ = run(capsys, "coprod", "[]", "--ascii")
    assert out == "1*[](x)[]\n"
    code, out, _ = run(capsys, "coprod", "[{1,2}]")
    assert out == "1*[]⊗[{1,2}] + 1*[{1}]⊗[{2}] + 1*[{2}]⊗[{1}] + 1*[{1,2}]⊗[]\n"


def test_solomon(capsys):
    code, out, _ = run(capsys, "solomon", "1,1", "1,1")
    assert code == EXIT_OK
    assert out == "2*(1,1)\n"
    code, out, _ = run(capsys, "solomon", "1,2", "2,1")
    assert out == "1*(1,1,1) + 1*(1,2)\n"
    code, out, _ = run(capsys, "solomon", "2", "1,1")
    assert out == "1*(1,1)\n"
    code, out, _ = run(capsys, "solomon", "2", "3")
    assert out == "0\n"


def test_young(capsys):
    code, out, _ = run(capsys, "young", "2,2", "2,4,1,3")
    assert code == EXIT_OK
    assert out == "beta = 2,1,4,3\nshuffle = 1,3,2,4\n"
    code, out, _ = run(capsys, "young", "1,1,1", "3,1,2")
    assert out == "beta = 1,2,3\nshuffle = 3,1,2\n"
    code, out, _ = run(capsys, "young", "3", "3,1,2")
    assert out == "beta = 3,1,2\nshuffle = 1,2,3\n"


def test_json_output(capsys):
    code, out, _ = run(capsys, "conv", "[{3,5}]", "[{1,4}]", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out) == {"terms": [{"coeff": 1, "blocks": [[3, 5], [1, 4]]}]}
    code, out, _ = run(capsys, "coprod", "[]", "--format", "json")
    assert json.loads(out) == {"terms": [{"coeff": 1, "left": [], "right": []}]}
    code, out, _ = run(capsys, "solomon", "1,1", "1,1", "--format", "json")
    assert json.loads(out) == {"terms": [{"coeff": 2, "parts": [1, 1]}]}
    code, out, _ = run(capsys, "young", "2,2", "2,4,1,3", "--format", "json")
    assert json.loads(out) == {"beta": [2, 1, 4, 3], "shuffle": [1, 3, 2, 4]}


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "conv", "[{1,1}]", "[{2}]")
    assert code == EXIT_USAGE
    assert "parse error" in err


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "young", "2,1", "1,2")  # degree mismatch
    assert code == EXIT_USAGE


def test_cap_exit_code(capsys):
    code, _, err = run(capsys, "coprod", "[{1,2,3,4,5}]", "--max-terms", "16")
    assert code == EXIT_CAP
    assert "size limit" in err


def test_env_cap_and_flag_precedence(capsys, monkeypatch):
    monkeypatch.setenv("TDA_MAX_TERMS", "16")
    code, _, _ = run(capsys, "coprod", "[{1,2,3,4,5}]")
    assert code == EXIT_CAP
    # an explicit flag overrides the environment
    code, out, _ = run(capsys, "coprod", "[{1,2,3,4,5}]", "--max-terms", "32")
    assert code == EXIT_OK
    assert out.count("⊗") == 32
    monkeypatch.setenv("TDA_MAX_TERMS", "not-a-number")
    code, _, err = run(capsys, "coprod", "[{1,2}]")
    assert code == EXIT_USAGE


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "dims")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "PASS [dims] fubini: 1 1 3 13 75 541"
    assert lines[-1] == "1/1 laws hold"


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "nope")
    assert code == EXIT_USAGE
    assert "unknown suite" in err


def test_verify_respects_caps(capsys):
    code, out, _ = run(capsys, "verify", "dims", "--max-n", "3")
    assert code == EXIT_OK
    assert "1 1 3 13" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "dims", "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc["results"][0]["suite"] == "dims"
    assert doc["results"][0]["ok"] is True


def test_verify_is_deterministic(capsys):
    args = ["verify", "assoc-conv", "--max-n", "3", "--trials", "20", "--seed", "7"]
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert (code1, out1) == (code2, out2)
    assert code1 == EXIT_OK


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "twisted_descents.cli", "conv", "[{3,5}]", "[{1,4}]"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1*[{3,5}|{1,4}]\n"


def test_console_script_if_installed():
    import shutil

    exe = shutil.which("twisted-descents")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run(
        [exe, "solomon", "1,1", "1,1"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout == "2*(1,1)\n"
