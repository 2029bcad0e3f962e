"""End-to-end CLI behavior: outputs, determinism, exit codes."""

import json

import pytest

from tropvertex.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_scatter_text_single_wall(capsys):
    code, out = run(capsys, "scatter", "--l1", "1", "--l2", "1", "--order", "6",
                    "--format", "text")
    assert code == 0
    rows = [line for line in out.splitlines() if not line.startswith("#")]
    assert len(rows) == 1
    assert rows[0].startswith("(1,1): 1 + z")


def test_scatter_json_two_two(capsys):
    code, out = run(capsys, "scatter", "--l1", "2", "--l2", "2", "--order", "12")
    assert code == 0
    doc = json.loads(out)
    dirs = [(w["a"], w["b"]) for w in doc["walls"]]
    assert dirs == [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 1),
                    (6, 5), (5, 4), (4, 3), (3, 2), (2, 1)]


def test_scatter_polynomial_generators(capsys):
    code, out = run(capsys, "scatter", "--p1", "1,2,1", "--p2", "1,2,1",
                    "--order", "8")
    assert code == 0
    doc = json.loads(out)
    assert doc["p1"] == [["1", "1"], ["2", "1"], ["1", "1"]]
    assert any((w["a"], w["b"]) == (1, 1) for w in doc["walls"])


def test_scatter_guards_are_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["scatter", "--l1", "1", "--l2", "1", "--order", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["scatter", "--order", "6"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["scatter", "--l1", "1", "--p2", "1,1", "--order", "6"])
    assert exc.value.code == 2


def test_scatter_svg_deterministic(tmp_path, capsys):
    p1 = tmp_path / "a.svg"
    p2 = tmp_path / "b.svg"
    for p in (p1, p2):
        code = main(["scatter", "--l1", "2", "--l2", "2", "--order", "8",
                     "--format", "svg", "--out", str(p)])
        capsys.readouterr()
        assert code == 0
    data = p1.read_bytes()
    assert data == p2.read_bytes()
    assert b'version="1.1"' in data
    assert data.count(b'id="ray-') == 7  # one ray element per nontrivial wall


def test_gw_values(capsys):
    code, out = run(capsys, "gw", "--l1", "2", "--l2", "3", "--a", "1", "--b", "1",
                    "--order", "8")
    assert code == 0
    rows = dict(line.split("\t") for line in out.splitlines() if not line.startswith("#"))
    assert rows["1"] == "6" and rows["2"] == "9/2" and rows["3"] == "20/3"


def test_gw_non_primitive_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["gw", "--l1", "1", "--l2", "1", "--a", "2", "--b", "4", "--order", "6"])
    assert exc.value.code == 2


def test_quiver_table(capsys):
    code, out = run(capsys, "quiver", "--m", "2", "--a", "1", "--b", "1",
                    "--order", "12")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()[2:]]
    assert [r[1] for r in rows[:5]] == ["2", "3", "4", "5", "6"]
    assert all(r[2] == "True" for r in rows)


def test_permissible_table(capsys):
    code, out = run(capsys, "permissible", "--l1", "1", "--l2", "3",
                    "--max-degree", "10")
    assert code == 0
    rows = {(int(r[0]), int(r[1])): r[2] for r in
            (line.split("\t") for line in out.splitlines()[2:])}
    permitted = {d for d, c in rows.items() if c != "not-permissible"}
    assert permitted == {(1, 3), (2, 3), (1, 1), (1, 2)}


def test_permissible_with_wall_status(capsys):
    code, out = run(capsys, "permissible", "--l1", "2", "--l2", "2",
                    "--max-degree", "6", "--order", "8")
    assert code == 0
    rows = {(int(r[0]), int(r[1])): r[3] for r in
            (line.split("\t") for line in out.splitlines()[2:])}
    assert rows[(1, 1)] == "nontrivial"
    assert rows[(1, 2)] == "nontrivial"
    assert rows[(5, 1)] == "trivial-so-far"


def test_verify_filter(capsys):
    code, out = run(capsys, "verify", "--filter", "single-wall")
    assert code == 0
    assert "PASS  single-wall" in out
    assert "1/1 checks passed" in out
