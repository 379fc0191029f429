import io
import json
import subprocess
import sys

import pytest

from iswreath.cli import main
from iswreath.wreath import size_wreath


def run(*argv, stdin=""):
    out = io.StringIO()
    code = main(list(argv), out=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def test_enumerate_counts():
    assert run("enumerate", "--semigroup", "isn", "--n", "2", "--count-only") == (0, "7\n")
    assert run("enumerate", "--semigroup", "wreath", "--m", "2", "--n", "2", "--count-only") == (0, "127\n")


def test_enumerate_streams(capsys):
    code, text = run("enumerate", "--n", "2")
    assert code == 0 and text.splitlines()[0] == "0" and len(text.splitlines()) == 7
    code, text = run("enumerate", "--n", "1", "--format", "json")
    assert [json.loads(line) for line in text.splitlines()] == [{"n": 1, "map": [None]}, {"n": 1, "map": [1]}]


def test_enumerate_bound(capsys):
    code, _ = run("enumerate", "--semigroup", "isn", "--n", "99")
    assert code == 2 and "max_n" in capsys.readouterr().err
    assert run("enumerate", "--semigroup", "wreath", "--m", "2", "--n", "3")[0] == 2
    spot = run("enumerate", "--semigroup", "wreath", "--m", "2", "--n", "3", "--spot", "--count-only")
    assert spot == (0, f"{size_wreath(2, 3)}\n")


def test_build_and_validate_round_trip():
    code, text = run("cross-section", "build", "--kind", "R", "--partition", "[1<2]", "--format", "json")
    assert code == 0
    assert run("cross-section", "validate", stdin=text)[0] == 0
    code, text = run("cross-section", "build", "--kind", "L", "--partition", "[2<1][3]", "--format", "json")
    code, report = run("cross-section", "validate", stdin=text)
    assert code == 0 and report.startswith("VALID L")


def test_build_counts():
    assert run("cross-section", "build", "--kind", "R", "--partition", "[1<2][3]", "--count-only") == (0, "8\n")
    args = ("cross-section", "build", "--partition", "[1<2]", "--m", "2", "--components", "[2<1]", "--count-only")
    assert run(*args) == (0, "25\n")
    code, text = run("cross-section", "build", "--partition", "[1][2]", "--m", "2",
                     "--components", "[1<2]", "[1][2]", "--format", "json")
    assert code == 0 and len(json.loads(text)["elements"]) == 25


def test_validate_failure_and_parse_error(tmp_path):
    code, text = run("cross-section", "build", "--partition", "[1<2]", "--format", "json")
    doc = json.loads(text)
    doc["elements"] = doc["elements"][:-1]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, report = run("cross-section", "validate", "--in", str(path))
    assert code == 1 and report.startswith("INVALID")
    assert run("cross-section", "validate", stdin="not json")[0] == 2
    assert run("cross-section", "build", "--partition", "[1<1]")[0] == 2


def test_verify_commands():
    assert run("verify", "--theorem", "green-criteria", "--m", "2", "--n", "2") == (0, "PASS 16129 pairs\n")
    assert run("verify", "--theorem", "counting", "--m", "2", "--n", "2") == (0, "PASS formula=5 classified=5\n")
    code, text = run("verify", "--theorem", "isom-conjugacy-isn", "--n", "3")
    assert code == 0 and text.startswith("PASS") and "isomorphisms=78" in text
    code, text = run("verify", "--theorem", "gm-classification", "--n", "3")
    assert code == 0 and text.startswith("PASS")


def test_count_commands():
    code, text = run("count", "--noniso", "--m", "2", "--n", "2")
    doc = json.loads(text)
    assert code == 0 and doc["count"] == 5 and [t["value"] for t in doc["terms"]] == [2, 3]
    assert json.loads(run("count", "--noniso", "--m", "1", "--n", "4")[1])["count"] == 5
    assert run("count", "--pn", "5") == (0, "7\n")
    assert run("count", "--isn", "3") == (0, "13\n")
    assert run("count", "--noniso", "--m", "2")[0] == 2


def test_oracle_command():
    code, text = run("oracle", "--n", "2")
    assert code == 0 and len(text.splitlines()) == 3
    assert run("oracle", "--n", "2", "--m", "2")[0] == 2
    code, text = run("oracle", "--n", "2", "--m", "2", "--allow-wreath")
    assert code == 0 and len(text.splitlines()) == 21
    assert run("oracle", "--n", "2", "--m", "2", "--allow-wreath", "--time-budget", "0")[0] == 2


def test_config_file_and_env(tmp_path, monkeypatch):
    cfg = tmp_path / "bounds.cfg"
    cfg.write_text("# tighter\nmax_n=2\n")
    assert run("--config", str(cfg), "enumerate", "--n", "3", "--count-only")[0] == 2
    monkeypatch.setenv("IW_CONFIG", str(cfg))
    assert run("enumerate", "--n", "3", "--count-only")[0] == 2
    cfg.write_text("max_n=5\n")
    assert run("enumerate", "--n", "5", "--count-only") == (0, "1546\n")


def test_deterministic_output():
    args = ("cross-section", "build", "--partition", "[2<1][3]", "--m", "1",
            "--components", "[1]", "[1]", "--format", "json")
    assert run(*args) == run(*args)
    assert run("oracle", "--n", "3") == run("oracle", "--n", "3")


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        run("verify", "--theorem", "nope", "--n", "2")
    assert exc.value.code == 2


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "iswreath.cli", "count", "--pn", "10"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "42\n"
