import json
import subprocess
import sys

import pytest

from nccount.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--quiver", "K(2)")
    assert code == 0 and out == "ExtendedDynkin Ã₁, rank 2, δ=(1,1)\n"
    code, out, _ = run(capsys, "classify", "--quiver", "A~(2,2)")
    assert out.startswith("ExtendedDynkin Ã₃, rank 4, δ=(1,1,1,1)")


def test_classify_json_file(capsys, tmp_path):
    f = tmp_path / "q.json"
    f.write_text('{"vertices":["1","2","3"],"arrows":[["1","2"],["2","3"],["1","3"]]}')
    code, out, _ = run(capsys, "classify", "--quiver", str(f), "--format", "json")
    assert code == 0 and json.loads(out)["label"] == "A~2"
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": [')
    code, _, err = run(capsys, "classify", "--quiver", str(bad))
    assert code == 2 and "malformed" in err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--quiver", "D~(4)", "--genus", "1", "--window", "6")
    assert code == 0
    head, row = out.splitlines()
    assert head.split("\t") == ["quiver", "l", "window", "count", "truncated"]
    assert row.split("\t")[3] == "8"
    code, out, _ = run(capsys, "count", "--quiver", "A(3)", "--genus", "1")
    assert out.splitlines()[1].split("\t")[3] == "0"
    code, out, _ = run(capsys, "count", "--quiver", "K(3)", "--genus", "2", "--window", "4")
    assert int(out.splitlines()[1].split("\t")[3]) >= 1


def test_count_grid_and_json(capsys):
    code, out, _ = run(capsys, "count", "--quiver", "K(2)", "--quiver", "A~(2,1)",
                       "--genus", "1,2", "--window", "3", "--format", "json")
    recs = [json.loads(line) for line in out.splitlines()]
    assert [(r["quiver"], r["l"], r["count"]) for r in recs] == [
        ("K(2)", 1, 1), ("K(2)", 2, 0), ("A~(2,1)", 1, 2), ("A~(2,1)", 2, 0)]


def test_embed(capsys):
    assert run(capsys, "embed", "--from", "2,2,2", "--into", "2,3,5")[1].endswith("NonEmptyFinite\n")
    assert run(capsys, "embed", "--from", "2,3,3", "--into", "2,2,9")[1].endswith("Empty\n")
    code, out, _ = run(capsys, "embed", "--from", "1,1,1", "--into", "2,1,1", "--witness")
    assert code == 0 and "witness\t(0,0,1)[0] (1,1,2)[0]" in out
    code, _, err = run(capsys, "embed", "--from", "3,3,3", "--into", "2,3,5")
    assert code == 2 and "Dynkin type" in err


def test_graph_and_enumerate(capsys, tmp_path):
    code, out, _ = run(capsys, "graph", "--quiver", "K(2)", "--genus", "1", "--window", "4")
    assert code == 0 and out.count("[label=") == 1 and "->" not in out
    target = tmp_path / "objs.jsonl"
    code, out, _ = run(capsys, "enumerate", "--quiver", "A(2)", "--window", "1",
                       "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert [json.loads(x)["dims"] for x in target.read_text().splitlines()] == [[0, 1], [1, 0], [1, 1]]


def test_usage_errors(capsys):
    assert run(capsys, "count", "--quiver", "Q(3)")[0] == 2
    assert run(capsys, "count", "--quiver", "K(2)", "--window", "0")[0] == 2
    assert run(capsys, "count", "--quiver", "K(2)", "--genus", "-2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["count"])
    assert exc.value.code == 2


def test_integrity_exit_code(capsys, monkeypatch):
    from nccount import cli
    from nccount.reps import IntegrityError

    def boom(args):
        raise IntegrityError("negative ext")
    monkeypatch.setitem(cli.COMMANDS, "count", boom)
    assert run(capsys, "count", "--quiver", "K(2)")[0] == 3


def test_deterministic_output_module_entry():
    argv = [sys.executable, "-m", "nccount", "count", "--quiver", "A~(2,2)", "--genus", "1",
            "--window", "3", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True, env={"NCCOUNT_THREADS": "3",
                                                                   "PATH": ""}).stdout
    assert a == b and json.loads(a)["count"] == 4
