import subprocess
import sys

import pytest

from goodsemigroup.cli import run
from helpers import EXAMPLE_FILE, GOLDEN

EX = str(EXAMPLE_FILE)


@pytest.fixture
def cli(capsys):
    def call(*argv):
        rc = run(list(argv))
        out, err = capsys.readouterr()
        return rc, out, err
    return call


def _write(tmp_path, text, name="s.gs"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_validate_good_file(cli):
    rc, out, _ = cli("validate", EX)
    assert rc == 0
    assert "G1" in out and "conductor" in out


def test_validate_broken_file(cli, tmp_path):
    path = _write(tmp_path, "d 2\n(0,0)\n(2,3)\n(3,2)\n(3,3)\n")
    rc, out, _ = cli("validate", path)
    assert rc == 1
    assert "G1" in out


def test_validate_declared_conductor_mismatch(cli, tmp_path):
    text = EXAMPLE_FILE.read_text().replace("c (3,5,9)", "c (3,5,8)")
    rc, out, _ = cli("validate", _write(tmp_path, text))
    assert rc == 1 and "maximum" in out


@pytest.mark.parametrize("argv", [
    ("validate", "/nonexistent/file.gs"),
    ("apery", EX, "--omega", "(1,2)"),
    ("apery", EX, "--omega", "(a,b,c)"),
    ("check-theorem", EX, "--omega", "(1,2,3)", "--all-small"),
    ("generate", "--seed", "1", "--d", "2", "--kind", "nope"),
    ("bogus-command",),
])
def test_usage_errors_exit_2(cli, argv):
    rc, _, err = cli(*argv)
    assert rc == 2
    assert err


def test_malformed_file_exits_2(cli, tmp_path):
    rc, _, err = cli("apery", _write(tmp_path, "dimension two\n"))
    assert rc == 2 and err.startswith("error:")


def test_computation_errors_exit_1(cli):
    rc, _, err = cli("apery", EX, "--omega", "(1,2,4)")
    assert rc == 1 and "not in the semigroup" in err
    rc, _, err = cli("levels", EX, "--generator", "(1,2,3)", "--generator", "(2,3,3)")
    assert rc == 1 and "G1" in err


def test_apery_matches_golden(cli):
    rc, out, _ = cli("apery", EX, "--omega", "(1,2,3)")
    assert rc == 0
    assert out == (GOLDEN / "apery_1_2_3.txt").read_text()
    # omega defaults to the least nonzero element
    assert cli("apery", EX)[1] == out


def test_apery_is_deterministic(cli):
    first = cli("apery", EX, "--omega", "(2,3,3)")[1]
    assert first == cli("apery", EX, "--omega", "(2,3,3)")[1]
    assert first.count("A") == 8


def test_levels_with_generators(cli):
    rc, out, _ = cli("levels", EX, "--generator", "(1,2,3)")
    assert rc == 0 and out == cli("apery", EX, "--omega", "(1,2,3)")[1]


def test_non_local_needs_omega(cli, tmp_path):
    path = _write(tmp_path, "d 2\n(0,0)\n")
    rc, _, err = cli("apery", path)
    assert rc == 2 and "--omega" in err
    rc, out, _ = cli("apery", path, "--omega", "(1,1)")
    assert rc == 0 and out == "A1 (1)\n(0,0)\nA2 (2)\n(0,inf)\n(inf,0)\n"


def test_subspaces(cli):
    rc, out, _ = cli("subspaces", EX, "--omega", "(1,2,3)")
    assert rc == 0
    lines = out.splitlines()
    top = lines[lines.index("A6") + 1:]
    assert top == ["dim=2 (3,inf,inf)", "dim=2 (inf,6,inf)", "dim=2 (inf,inf,11)"]


def test_check_theorem(cli):
    rc, out, _ = cli("check-theorem", EX, "--omega", "(2,3,3)")
    assert rc == 0 and out == "N=8 expected=8 PASS\n"
    rc, out, _ = cli("check-theorem", EX, "--all-small")
    lines = out.splitlines()
    assert rc == 0 and len(lines) == 16
    assert all(line.startswith("omega=(") and line.endswith("PASS") for line in lines)


def test_generate_then_validate(cli, tmp_path):
    rc, out, _ = cli("generate", "--seed", "9", "--d", "3", "--count", "2",
                     "--caps", "(4,4,4)", "--out", str(tmp_path))
    assert rc == 0
    paths = out.split()
    assert len(paths) == 2
    for p in paths:
        assert cli("validate", p)[0] == 0
    again = tmp_path / "again"
    cli("generate", "--seed", "9", "--d", "3", "--count", "2", "--caps", "(4,4,4)",
        "--out", str(again))
    assert (again / "9-1.gs").read_text() == (tmp_path / "9-1.gs").read_text()


def test_oracle_diff(cli):
    rc, out, _ = cli("oracle-diff", EX, "--omega", "(1,2,3)")
    assert rc == 0
    assert out.startswith("grid (9,12,17) ") and out.strip().endswith("levels=6/6 mismatches=0")
    rc, out, _ = cli("oracle-diff", EX, "--omega", "(1,2,3)", "--padding", "2")
    assert rc == 0 and "grid (6,9,14)" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "goodsemigroup.cli", "apery", EX],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "apery_1_2_3.txt").read_text()
