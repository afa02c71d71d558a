import json
import subprocess
import sys

import pytest

from jtsnf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_snf_example(capsys):
    code, out, _ = run(capsys, "snf", "--shape", "7,5,5,2", "-t", "4", "--ring", "n")
    assert code == 0
    assert "(n - 3)(n - 2)(n - 1)(n)(n + 1)(n + 2)(n + 3)(n + 4)(n + 5)(n + 6)" in out
    assert "n^10 + 15*n^9" in out
    assert out.rstrip().endswith("match")


def test_snf_empty_shape(capsys):
    code, out, _ = run(capsys, "snf", "--shape", "-", "-t", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["computed"] == ["1", "1", "1"]


def test_snf_qbracket(capsys):
    code, out, _ = run(capsys, "snf", "--shape", "2,1", "--ring", "qbracket", "--method", "both", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["match"]
    assert data["predicted_factored"] == ["1", "(y + [-1])(y)(y + [1])"]


def test_text_and_json_agree(capsys):
    for ring in ("n", "qy", "qbracket"):
        c1, text, _ = run(capsys, "snf", "--shape", "3,1", "-t", "3", "--ring", ring)
        c2, js, _ = run(capsys, "snf", "--shape", "3,1", "-t", "3", "--ring", ring, "--format", "json")
        assert c1 == c2 == 0
        assert json.loads(js)["match"] is True and text.rstrip().endswith("match")


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["snf", "--shape", "3,x"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "snf", "--shape", "2,1,1", "-t", "2")
    assert code == 2 and "below the length" in err
    code, _, err = run(capsys, "minor", "--shape", "2,1", "--rows", "1,3", "--cols", "1,2")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["minor", "--shape", "2,1", "--rows", "2,1", "--cols", "1,2"])
    assert exc.value.code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--max-weight", "1", "--extra-rows", "0", "--ring", "all")
    assert code == 0
    assert out.strip().startswith("cases 3  failures 0")
    code, out, _ = run(capsys, "verify", "--max-weight", "4", "--ring", "qbracket", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["failures"] == []
    assert {c["kind"] for c in data["cases"]} == {"Q_BRACKET"}
    assert json.loads(json.dumps(data)) == data


def test_verify_out_file(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--max-weight", "2", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["failures"] == []


def test_minor(capsys):
    code, out, _ = run(capsys, "minor", "--shape", "7,6,6,5,3", "-t", "5", "--rows", "3,4,5", "--cols", "1,3,5")
    assert code == 0
    assert "skew    6,5,3/2,1" in out and "divisible by det M_3: yes" in out
    code, out, _ = run(capsys, "minor", "--shape", "3,2", "--rows", "1,2", "--cols", "1,2", "--format", "json")
    assert json.loads(out)["skew"] == "3,2/-"
    # row 4 of (7,5,5,2) has its leading 1 in column 2, so column 1 alone is a zero minor
    code, out, _ = run(capsys, "minor", "--shape", "7,5,5,2", "--rows", "4", "--cols", "1")
    assert code == 0 and "zero minor" in out and "n/a" in out


def test_lr(capsys):
    assert run(capsys, "lr", "--outer", "2,1", "--inner", "1", "--content", "1,1")[1].strip() == "1"
    assert run(capsys, "lr", "--outer", "3", "--inner", "-", "--content", "3")[1].strip() == "1"
    assert run(capsys, "lr", "--outer", "6,5,3", "--inner", "2,1", "--content", "3,3,3,2")[1].strip() == "0"
    code, out, _ = run(capsys, "lr", "--outer", "2", "--inner", "-", "--content", "1")
    assert code == 0 and out.strip() == "0"


def test_qh_and_predict(capsys):
    code, out, _ = run(capsys, "qh", "3", "--ring", "n")
    assert out.strip() == "1/6*n^3 + 1/2*n^2 + 1/3*n"
    code, out, _ = run(capsys, "predict", "--shape", "1,1", "--ring", "qy", "--format", "json")
    assert json.loads(out)["factored"] == ["1", "(1 - q^-1*y)(1 - y)"]


def test_deterministic_output(capsys):
    a = run(capsys, "verify", "--max-weight", "3", "--ring", "n")[1]
    b = run(capsys, "verify", "--max-weight", "3", "--ring", "n")[1]
    strip = lambda s: s.rsplit("total_ms", 1)[0]
    assert strip(a) == strip(b)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "jtsnf.cli", "lr", "--outer", "2,1", "--content", "2,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
