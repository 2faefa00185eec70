import csv
import json
import subprocess
import sys

import pytest

from qorbits.cli import build_parser, main


def run(tmp_path, *args):
    return main([*args, "--out", str(tmp_path)])


def test_groups(tmp_path, capsys):
    assert run(tmp_path, "groups", "--group", "real") == 0
    data = json.loads((tmp_path / "groups.json").read_text())
    assert data["real"]["order"] == 16
    assert [v["elements"] for v in data["real"]["local"].values()] == [16, 128, 1024]
    assert "|G| = 16" in capsys.readouterr().out


def test_states_flags_headline_count(tmp_path, capsys):
    assert run(tmp_path, "states") == 0
    out = capsys.readouterr().out
    assert "8640 states" in out and "8460 does not match" in out
    assert json.loads((tmp_path / "states.json").read_text())["count"] == 8640


def test_orbits(tmp_path, capsys):
    assert run(tmp_path, "orbits", "--group", "real") == 0
    data = json.loads((tmp_path / "orbits.json").read_text())
    assert [o["size"] for o in data["orbits"]] == [128, 64, 64, 64, 128, 32]


def test_transitions_outputs(tmp_path, capsys):
    assert run(tmp_path, "transitions", "--topology", "line") == 0
    rows = list(csv.DictReader((tmp_path / "transitions.csv").open()))
    assert len(rows) == 3 * 25
    assert {"control": "1", "target": "2", "source_orbit": "S_0", "target_orbit": "S_0", "count": "960"} in rows
    dot = (tmp_path / "orbitgraph.dot").read_text()
    assert dot.startswith("graph") or dot.startswith("digraph")
    out = capsys.readouterr().out
    assert "CNOT(1, 3)" not in out and "CNOT(1, 2)" in out


@pytest.mark.parametrize("group,topology,want", [("clifford", "all", 2), ("real", "all", 3)])
def test_diameter(tmp_path, group, topology, want):
    assert run(tmp_path, "diameter", "--group", group, "--topology", topology) == 0
    assert json.loads((tmp_path / "diameter.json").read_text())["diameter"] == want


def test_verify_theorem1_quick(tmp_path):
    assert run(tmp_path, "verify-theorem1", "--restarts", "4") == 0
    data = json.loads((tmp_path / "theorem1.json").read_text())
    assert all(c["basis"] == ["1"] and c["other_order_agrees"] for c in data["cases"])
    assert data["explicit_gate"]["direction"] == "xi2->xi1"


def test_bad_arguments_exit_nonzero():
    parser = build_parser()
    for argv in (["states", "--group", "pauli"], ["diameter", "--topology", "ring"], ["nonsense"]):
        with pytest.raises(SystemExit) as exc:
            parser.parse_args(argv)
        assert exc.value.code != 0


def test_unwritable_output(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    with pytest.raises(SystemExit, match="cannot write"):
        main(["groups", "--out", str(blocker / "sub")])


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "qorbits", "groups", "--group", "real", "--out", str(tmp_path)],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0, proc.stderr
    bad = subprocess.run([sys.executable, "-m", "qorbits", "--bogus"], capture_output=True, text=True)
    assert bad.returncode != 0
