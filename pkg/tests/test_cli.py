import json
import subprocess
import sys
from pathlib import Path

import pytest

from arrowhead.cli import main

ROOT = Path(__file__).resolve().parents[1]
CHECKER = ROOT / "scripts" / "check_edge_list.py"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_level_one_undirected(capsys):
    code, out, _ = run(capsys, "generate", "--n", "1", "--variant", "arrowhead", "--undirected", "--format", "edge_list")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 12
    assert lines.count("0,0 -- 1,1") == 2


def test_generate_level_zero_loops(capsys):
    code, out, _ = run(capsys, "generate", "--n", "0")
    assert code == 0
    assert out.splitlines() == ["0,0 -- 0,0"] * 3


def test_generate_diamond_directed(capsys, tmp_path):
    dest = tmp_path / "dt2.txt"
    code, out, _ = run(capsys, "generate", "--n", "2", "--variant", "diamond", "--directed", "--out", str(dest))
    lines = dest.read_text().splitlines()
    assert code == 0 and out == ""
    assert len(lines) == 48
    assert lines[:3] == ["0,0 -> 0,1", "0,0 -> 1,0", "0,0 -> 1,1"]
    keys = [tuple(int(t) for t in l.replace(" -> ", ",").split(",")) for l in lines]
    assert keys == sorted(keys)


def test_generate_is_byte_deterministic(capsys):
    first = run(capsys, "generate", "--n", "3", "--format", "dot")[1]
    second = run(capsys, "generate", "--n", "3", "--format", "dot")[1]
    assert first == second


def test_dot_format(capsys):
    _, out, _ = run(capsys, "generate", "--n", "1", "--directed", "--format", "dot")
    lines = out.splitlines()
    assert lines[0] == "digraph AT_1 {"
    assert lines[1] == "  v_0_0;"
    assert "  v_0_0 -> v_1_1;" in lines
    assert lines[-1] == "}"
    assert sum("->" in l for l in lines) == 12
    _, out, _ = run(capsys, "generate", "--n", "2", "--format", "dot")
    assert out.startswith("graph T_2 {") and " -- " in out


def test_adjacency_csv(capsys):
    _, out, _ = run(capsys, "generate", "--n", "1", "--format", "adjacency_csv")
    assert out.splitlines() == ["0,2,2,2", "2,0,2,2", "2,2,0,2", "2,2,2,0"]
    _, out, _ = run(capsys, "generate", "--n", "2", "--format", "adjacency_csv")
    rows = [list(map(int, r.split(","))) for r in out.splitlines()]
    assert len(rows) == 16 and all(sum(r) == 6 for r in rows)
    assert all(rows[i][j] == rows[j][i] for i in range(16) for j in range(16))
    _, out, _ = run(capsys, "generate", "--n", "2", "--directed", "--format", "adjacency_csv")
    rows = [list(map(int, r.split(","))) for r in out.splitlines()]
    assert all(sum(r) == 3 for r in rows)
    assert rows[0][15] == 1  # (0,0) -> (3,3)


def test_adjacency_csv_capped(capsys):
    code, _, err = run(capsys, "generate", "--n", "6", "--format", "adjacency_csv")
    assert code == 3 and "adjacency_csv" in err


def test_generate_json_stats(capsys):
    _, out, _ = run(capsys, "generate", "--n", "2", "--format", "json_stats")
    assert json.loads(out)["diameter"] == {"formula": 2, "oracle": 2}


@pytest.mark.parametrize(
    "argv,diameter,count",
    [
        (["--n", "5", "--variant", "arrowhead", "--undirected"], 21, 6),
        (["--n", "2", "--variant", "diamond", "--directed"], 3, 7),
        (["--n", "4", "--variant", "arrowhead", "--directed"], 15, 6),
    ],
)
def test_stats_examples(capsys, argv, diameter, count):
    code, out, _ = run(capsys, "stats", *argv)
    s = json.loads(out)
    assert code == 0
    assert s["diameter"] == {"formula": diameter, "oracle": diameter}
    assert s["antipodal_count"] == {"formula": count, "oracle": count}
    assert sum(s["histogram"]["oracle"].values()) == s["order"]
    assert s["edge_count"] == 3 * s["order"]


def test_stats_anchor(capsys):
    _, out, _ = run(capsys, "stats", "--n", "3")
    anchor = json.loads(out)["anchor"]
    assert anchor["formula"]["anchor"] == "2,5" and anchor["formula"]["inverse"] == "5,2"
    assert anchor["oracle"] == {"anchor_is_antipodal": True, "inverse_is_antipodal": True}


def test_stats_level_zero(capsys):
    _, out, _ = run(capsys, "stats", "--n", "0")
    s = json.loads(out)
    assert s["antipodal_count"] == {"formula": None, "oracle": 1}
    assert s["anchor"] is None


def test_stats_ceiling(capsys):
    code, _, err = run(capsys, "stats", "--n", "13")
    assert code == 3 and "resource limit" in err
    code, _, _ = run(capsys, "--max-level", "2", "stats", "--n", "3")
    assert code == 3


def test_verify_writes_report(capsys, tmp_path):
    dest = tmp_path / "report.txt"
    code, out, _ = run(capsys, "verify", "--n", "1..6", "--seed", "42", "--out", str(dest))
    text = dest.read_text()
    assert code == 0
    assert "0 failed" in out
    rows = [l for l in text.splitlines() if l.startswith("check claim=Tn.diameter ")]
    assert [r.split("expected=")[1].split()[0] for r in rows] == ["1", "2", "5", "10", "21", "42"]


def test_verify_single_claim(capsys):
    code, out, _ = run(capsys, "verify", "--n", "1..1", "--claims", "relations.eq3")
    assert code == 0
    assert "check claim=relations.eq3 family=T n=1 status=pass" in out
    assert "expected=1 observed=1" in out
    code, out, _ = run(capsys, "verify", "--n", "2..2", "--claims", "iso.AT_DT")
    assert code == 0 and "status=pass" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    from arrowhead import formulas

    monkeypatch.setattr(formulas, "undirected_diameter", lambda n: 99)
    code, _, err = run(capsys, "verify", "--n", "2..2", "--claims", "Tn.diameter")
    assert code == 1 and "FAILED Tn.diameter" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--n", "3..1"],
        ["verify", "--n", "x"],
        ["verify", "--claims", "nope"],
        ["verify", "--families", "HX"],
        ["generate", "--n", "1..3"],
        ["route", "--n", "2", "0,0", "4,0"],
        ["route", "--n", "2", "0;0", "1,1"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["generate", "--n", "2", "--variant", "hexagon"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["generate", "--n", "2", "--directed", "--undirected"])
    assert exc.value.code == 2


def test_route_examples(capsys):
    _, out, _ = run(capsys, "route", "--n", "2", "--variant", "arrowhead", "--undirected", "0,0", "2,3")
    assert out.splitlines()[0] == "2"
    _, out, _ = run(capsys, "route", "--n", "3", "--variant", "diamond", "--directed", "0,0", "0,0")
    assert out.splitlines() == ["0", "(0,0)"]
    _, out, _ = run(capsys, "route", "--n", "2", "--variant", "arrowhead", "--directed", "0,0", "1,3")
    assert out.splitlines() == ["3", "(0,0) (3,3) (0,3) (1,3)"]


@pytest.mark.parametrize("n", range(0, 6))
@pytest.mark.parametrize("flags", [["--undirected"], ["--directed"], ["--variant", "diamond", "--directed"]])
def test_edge_list_roundtrip_with_independent_checker(capsys, tmp_path, n, flags):
    dest = tmp_path / "g.txt"
    assert run(capsys, "generate", "--n", str(n), *flags, "--out", str(dest))[0] == 0
    proc = subprocess.run(
        [sys.executable, str(CHECKER), "--n", str(n), str(dest)], capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stdout
    assert proc.stdout.strip() == "OK"


def test_checker_catches_corruption(tmp_path):
    dest = tmp_path / "bad.txt"
    dest.write_text("0,0 -- 1,1\n" * 12)
    proc = subprocess.run([sys.executable, str(CHECKER), "--n", "1", str(dest)], capture_output=True, text=True)
    assert proc.returncode == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "arrowhead", "route", "--n", "1", "--directed", "0,0", "1,1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["1", "(0,0) (1,1)"]


@pytest.mark.parametrize("script", ["diameter_table.py", "antipodal_census.py"])
def test_experiment_scripts_run(script):
    proc = subprocess.run(
        [sys.executable, str(ROOT / "scripts" / script), "--n-max", "4"], capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout
