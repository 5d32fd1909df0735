import json
import xml.dom.minidom

import pytest

from fillpairs.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    code, out, err = run(capsys, "count", "--genus", "3")
    assert (code, out) == (0, "1\n")
    assert "count=1" in err


def test_count_genus2(capsys):
    assert run(capsys, "count", "--genus", "2")[:2] == (0, "1\n")


def test_count_csv_cross_check(capsys):
    code, out, _ = run(capsys, "count", "--genus", "4", "--format", "csv", "--cross-check")
    assert code == 0
    assert out == "genus,squares,count,asymptotic_bound\n4,7,8,292\n"


def test_long_runs_gated(capsys):
    code, out, err = run(capsys, "count", "--genus", "7")
    assert code == 2 and out == ""
    assert "--allow-long" in err


def test_bad_arguments_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count"])
    assert exc.value.code == 2
    assert run(capsys, "verify", "--perm", "(1 2 2)")[0] == 2
    assert run(capsys, "count", "--genus", "1")[0] == 2
    assert run(capsys, "menage", "--n", "2")[0] == 2


def test_enumerate_jsonl(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "--genus", "4")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 8
    assert set(rows[0]) == {"genus", "n", "canonical_diffs", "orbit_size", "stratum"}
    # byte-identical whatever the worker count
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    run(capsys, "enumerate", "--genus", "5", "-o", str(a))
    run(capsys, "enumerate", "--genus", "5", "-o", str(b), "--workers", "2")
    assert a.read_bytes() == b.read_bytes()


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n", "5", "--perm", "(1 2 5 3 4)")
    assert code == 0
    assert out.splitlines()[0] == "(1 2 5 3 4): valid, genus 3"
    code, out, _ = run(capsys, "verify", "--perm", "(1 2 5 3 4)", "--format", "jsonl")
    assert json.loads(out)["orbit_size"] == 10


def test_polygon(capsys):
    code, out, _ = run(capsys, "polygon", "--perm", "(1 2 5 3 4)")
    assert code == 0 and len(out.splitlines()) == 20
    assert run(capsys, "polygon", "--perm", "(1 2 3 4 5)")[0] == 1


def test_menage(capsys):
    assert run(capsys, "menage", "--n", "5")[1] == "13\n"
    assert run(capsys, "menage", "--n", "5", "--exclude-opposite")[1] == "12\n"
    out = run(capsys, "menage", "--n", "5", "--classes", "--exclude-opposite")[1]
    assert len(out.splitlines()) == 4


def test_bound(capsys):
    code, out, _ = run(capsys, "bound", "--genus", "3")
    assert code == 0 and out.splitlines()[1] == "3,5,6,10,8,5"
    out = run(capsys, "bound", "--table", "--max", "5")[1]
    assert out.splitlines()[-1] == "5,9,436,21826,19372,19368"
    assert run(capsys, "bound")[0] == 2


def test_render(capsys):
    code, out, _ = run(capsys, "render", "--perm", "(1 2 3)")
    assert code == 0
    assert out.splitlines()[2].split() == ["2", "3", "1"]
    out = run(capsys, "render", "--perm", "(1 2 5 3 4)")[1]
    assert out.splitlines()[2].split() == ["2", "5", "4", "1", "3"]
    out = run(capsys, "render", "--perm", "(1 2 5 3 4)", "--format", "svg")[1]
    xml.dom.minidom.parseString(out)
