import json
import subprocess
import sys

import pytest

from hforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def last(out):
    return out.rstrip("\n").split("\n")[-1].split("\t")


def test_construct_gnk(tmp_path, capsys):
    path = tmp_path / "g62.json"
    code, out, _ = run(capsys, "construct", "gnk", "--n", "6", "--k", "2", "-o", str(path))
    assert code == 0
    assert len(json.loads(path.read_text())["edges"]) == 35
    rows = [r.split("\t") for r in out.splitlines()]
    assert rows[0][:5] == ["kind", "n", "k", "t", "edges"]
    assert rows[1][4] == "35"
    assert last(out)[:2] == ["result", "ok"]


def test_construct_to_stdout(capsys):
    code, out, err = run(capsys, "construct", "gnkt", "--n", "20", "--k", "1", "--t", "6")
    assert code == 0
    d = json.loads(out)
    for e in d["edges"]:
        a = list(map(int, e["label"][1:].split(",")))
        assert a[-1] - a[0] <= 6
    assert "result\tok" in err


def test_verify_pass_and_planar(tmp_path, capsys):
    g = tmp_path / "g.json"
    run(capsys, "construct", "gnk", "--n", "6", "--k", "2", "-o", str(g))
    code, out, _ = run(capsys, "verify", str(g))
    assert code == 0 and last(out)[1] == "pass"
    p = tmp_path / "p.json"
    run(capsys, "construct", "planar-tight", "--n", "8", "-o", str(p))
    code, out, _ = run(capsys, "verify", str(p))
    assert code == 0
    assert "8\t28\t0\t" in out
    assert "Prop24\t8\t0\t28\t28\tok" in out


def test_verify_duplicated_edge(tmp_path, capsys):
    g = tmp_path / "g.json"
    run(capsys, "construct", "gnk", "--n", "5", "--k", "2", "-o", str(g))
    obj = json.loads(g.read_text())
    obj["edges"].append(dict(obj["edges"][3], label="copy"))
    g.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "verify", str(g))
    assert code == 1
    assert "IdenticalCurves" in out and last(out)[1] == "fail"


def test_verify_claimed_k_too_small(tmp_path, capsys):
    g = tmp_path / "g.json"
    run(capsys, "construct", "gnk", "--n", "6", "--k", "2", "-o", str(g))
    code, out, _ = run(capsys, "verify", str(g), "--k", "1")
    assert code == 1
    assert "max-crossings\t6\t1\t1\t2\tVIOLATED" in out


def test_encode(tmp_path, capsys):
    g = tmp_path / "g.json"
    run(capsys, "construct", "gnk", "--n", "6", "--k", "2", "-o", str(g))
    code, out, _ = run(capsys, "encode", str(g))
    assert code == 0
    assert "e1,3,6\t1\t6\t0++--0" in out
    assert "edges=35" in out and "distinct=35" in out


def test_encode_rejects_polyline(tmp_path, capsys):
    p = tmp_path / "p.json"
    run(capsys, "construct", "planar-tight", "--n", "3", "-o", str(p))
    code, _, _ = run(capsys, "encode", str(p))
    assert code == 2


@pytest.mark.parametrize("n,k,g", [(2, 0, 4), (1, 3, 1), (5, 1, 37)])
def test_maxfamily(n, k, g, tmp_path, capsys):
    w = tmp_path / "w.tsv"
    code, out, _ = run(capsys, "maxfamily", "--n", str(n), "--k", str(k), "-o", str(w))
    assert code == 0
    rows = [r.split("\t") for r in out.splitlines()]
    assert rows[0] == ["n", "k", "g", "witness_count", "exact", "nodes", "vertices"]
    assert rows[1][2] == str(g) and rows[1][4] == "true"
    seqs = w.read_text().splitlines()[1:]
    assert len(seqs) == g


def test_maxfamily_budget(capsys):
    code, out, _ = run(capsys, "maxfamily", "--n", "6", "--k", "2", "--budget", "5")
    assert code == 3
    assert "\tfalse\t" in out and last(out)[1] == "resource-limit"


def test_maxfamily_table_and_plot(tmp_path, capsys):
    fig = tmp_path / "g.png"
    code, out, _ = run(capsys, "maxfamily", "--n", "4", "--k", "2", "--table", "--plot", str(fig))
    assert code == 0 and fig.stat().st_size > 0
    assert "recurrence\tviolations=0\tok" in out


def test_bounds(tmp_path, capsys):
    fig = tmp_path / "r.svg"
    code, out, _ = run(capsys, "bounds", "--n", "20", "--k", "1", "--m", "80", "--t-values", "4,6", "--plot", str(fig))
    assert code == 0
    assert "Thm2a\t20\t1\t1560" in out
    assert "CrossLB_all\t80\t20\t1\t1280\ttrue" in out
    assert fig.read_text().startswith("<?xml")


def test_render(tmp_path, capsys):
    g = tmp_path / "g.json"
    s = tmp_path / "g.svg"
    run(capsys, "construct", "gnk", "--n", "6", "--k", "2", "-o", str(g))
    code, out, _ = run(capsys, "render", str(g), "-o", str(s), "--samples", "32")
    assert code == 0
    assert s.read_text().count("<path ") == 35


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "gnk", "--n", "3", "--k", "3"],
        ["construct", "gnkt", "--n", "6", "--k", "2"],
        ["verify", "/nonexistent/file.json"],
        ["render", "/nonexistent/file.json", "--samples", "8"],
        ["maxfamily", "--n", "0", "--k", "1"],
    ],
)
def test_usage_errors(argv, capsys):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err and last(out)[1] == "usage-error"


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["construct", "triangle"])
    assert info.value.code == 2


def test_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    code, _, _ = run(capsys, "verify", str(bad))
    assert code == 2


def test_module_entry_point(tmp_path):
    res = subprocess.run(
        [sys.executable, "-m", "hforge", "maxfamily", "--n", "3", "--k", "1"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0
    assert res.stdout.splitlines()[1].split("\t")[2] == "11"
