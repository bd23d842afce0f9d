import csv
import io
import json
import subprocess
import sys

import pytest

from netkit import build_graph
from netkit.cli import main
from netkit.io import read_graph, write_gml
from netkit.profiling.bench import CSV_COLUMNS, BenchRecord, run_benchmark, write_csv

TRI = [(0, 1), (1, 2), (0, 2)]


def test_profile_writes_both_documents(tmp_path, capsys):
    assert main(["profile", "ba:n=300,k=3,seed=1", "--out", str(tmp_path)]) == 0
    out = capsys.readouterr().out.split()
    assert len(out) == 2 and all(p.startswith(str(tmp_path)) for p in out)
    doc = json.loads((tmp_path / "ba:n=300,k=3,seed=1.profile.json").read_text())
    assert doc["graph"]["n"] == 300 and doc["diameter"]["status"] == "ok"
    assert (tmp_path / "ba:n=300,k=3,seed=1.profile.html").read_text().startswith("<!DOCTYPE")


def test_profile_file_input(tmp_path):
    write_gml(build_graph(TRI, 3), tmp_path / "tri.gml")
    assert main(["profile", str(tmp_path / "tri.gml"), "--out", str(tmp_path / "o"),
                 "--measures", "degree,pagerank", "--detail", "minimal"]) == 0
    doc = json.loads((tmp_path / "o" / "tri.profile.json").read_text())
    assert set(doc["measures"]) == {"degree", "pagerank"}


def test_profile_partial_failure_exit_code(tmp_path, capsys):
    write_gml(build_graph(TRI + [(u + 3, v + 3) for u, v in TRI], 6), tmp_path / "two.gml")
    assert main(["profile", str(tmp_path / "two.gml"), "--out", str(tmp_path)]) == 1
    assert "section failed: diameter" in capsys.readouterr().err
    assert (tmp_path / "two.profile.json").exists()


def test_fatal_errors(tmp_path, capsys):
    assert main(["profile", str(tmp_path / "missing.gml"), "--out", str(tmp_path)]) == 2
    bad = tmp_path / "bad.gml"
    bad.write_text("graph [ node [ id 0 ] edge [ source 0 target 9 ] ]")
    assert main(["profile", str(bad), "--out", str(tmp_path)]) == 2
    assert "undeclared node id 9" in capsys.readouterr().err
    assert main(["generate", "ba", "n=10", "k=oops"]) == 2
    assert main(["bench", "--kernels", "pagerank"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["nope"])
    assert exc.value.code == 2


def test_generate(tmp_path, capsys):
    p = tmp_path / "g.txt"
    assert main(["generate", "er", "n=50", "p=0.1", "--seed", "3", "--out", str(p)]) == 0
    g = read_graph(p)
    assert f"n={g.n} m={g.m}" in capsys.readouterr().out
    assert main(["generate", "er", "n=50", "p=0.1", "--seed", "3", "--format", "gml"]) == 0
    assert "graph [" in capsys.readouterr().out


def test_bench_csv(tmp_path):
    out = tmp_path / "b.csv"
    assert main(["bench", "--generate", "rmat:scale=10,edge_factor=8,seed=1",
                 "--generate", "er:n=500,p=0.02,seed=2", "--kernels",
                 "components,coreness,pagerank,plp", "--reps", "2", "--csv", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert tuple(rows[0]) == CSV_COLUMNS and len(rows) == 8
    for r in rows:
        assert float(r["seconds"]) > 0
        eps = float(r["edges_per_second"])
        assert abs(eps * float(r["seconds"]) - int(r["m"])) <= 1e-6 * int(r["m"])


def test_bench_failed_run_is_recorded(tmp_path, capsys):
    out = tmp_path / "b.csv"
    code = main(["bench", "--graphs", str(tmp_path / "missing.txt"), "--generate",
                 "er:n=100,p=0.05,seed=1", "--kernels", "components", "--reps", "1",
                 "--csv", str(out)])
    assert code == 1
    rows = list(csv.DictReader(out.open()))
    assert [r["seconds"] for r in rows][0] == "" and float(rows[1]["seconds"]) > 0
    assert "run failed" in capsys.readouterr().err


def test_bench_api():
    g = build_graph(TRI, 3)
    recs = run_benchmark([("tri", g)], kernels=["components"], threads=2, repetitions=1)
    assert recs[0].ok and recs[0].threads == 2 and recs[0].m == 3
    buf = io.StringIO()
    write_csv(recs + [BenchRecord("plp", "x", 0, 0, 1, error="boom")], buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS) and lines[2].endswith(",,")
    with pytest.raises(ValueError):
        run_benchmark([("tri", g)], kernels=["nope"])


def test_console_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "netkit.cli", "generate", "ba", "n=20",
                          "k=2", "--seed", "1"], capture_output=True, text=True)
    from netkit.generators import gen_barabasi_albert

    assert res.returncode == 0
    assert len(res.stdout.splitlines()) == gen_barabasi_albert(20, 2, seed=1).m
