import json
import subprocess
import sys

import pytest

from totalpp.cli import main
from totalpp.golden import L8_LAMBDA


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def l8_file(tmp_path):
    p = tmp_path / "l8.txt"
    p.write_text(L8_LAMBDA)
    return str(p)


def test_parse_echoes_presentation(capsys, l8_file):
    code, out, _ = run(capsys, "parse", l8_file, "--dim")
    assert code == 0
    assert "quiver" in out and "relations" in out


def test_parse_json_is_deterministic(capsys, l8_file):
    _, a, _ = run(capsys, "parse", l8_file, "--format", "json")
    _, b, _ = run(capsys, "parse", l8_file, "--format", "json")
    assert a == b
    assert len(json.loads(a)["relations"]) == 8


@pytest.mark.parametrize("t,dim", [("A2", 4), ("A3", 10), ("D4", 28)])
def test_pi_modes_agree(capsys, t, dim):
    code, out, _ = run(capsys, "pi", "--type", t, "--mode", "all", "--format", "json")
    assert code == 0
    assert str(dim) in out


def test_psi_check_passes(capsys):
    code, out, _ = run(capsys, "psi", "--type", "A2", "--mode", "all", "--check")
    assert code == 0
    assert "graded dims (5, 2), total 7" in out
    assert "iso via surjection: True" in out


def test_psi_json_same_across_runs(capsys):
    _, a, _ = run(capsys, "psi", "--type", "A3", "--format", "json", "--seed", "4")
    _, b, _ = run(capsys, "psi", "--type", "A3", "--format", "json", "--seed", "4")
    assert a == b and json.loads(a)


def test_family_verify(capsys):
    code, out, _ = run(capsys, "family", "--d", "1", "--n", "3", "--verify", "--format", "json")
    assert code == 0
    assert json.loads(out)


def test_check_suite(capsys):
    code, out, _ = run(capsys, "check", "golden")
    assert code == 0
    assert "FAIL" not in out


def test_auslander_dot(capsys):
    code, out, _ = run(capsys, "auslander", "--type", "A3", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")


def test_export_writes_files(capsys, tmp_path):
    code, _, _ = run(capsys, "export", "psi", "--type", "A2", "--output-dir", str(tmp_path))
    assert code == 0
    assert list(tmp_path.iterdir())


@pytest.mark.parametrize("argv", [
    ["pi", "--type", "A3", "--field", "gf:4"],
    ["pi", "--type", "Z9"],
    ["psi", "--input", "/nonexistent/file"],
    ["check", "nosuchsuite"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error")


def test_empty_file_exits_2(capsys, tmp_path):
    p = tmp_path / "empty.txt"
    p.write_text("")
    assert run(capsys, "parse", str(p))[0] == 2


def test_infinite_algebra_exits_3(capsys, tmp_path):
    p = tmp_path / "loop.txt"
    p.write_text("quiver L { vertices: 1; arrows: x: 1 -> 1; }\nrelations { }\n")
    code, _, err = run(capsys, "parse", str(p), "--dim", "--max-degree", "5")
    assert code == 3
    assert "bound" in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["family", "--d", "0", "--n", "3"])
    assert e.value.code == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "totalpp", "pi", "--type", "A2"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout
