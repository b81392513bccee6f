import json
import os
import subprocess

import pytest

CLI = os.environ.get("LIGHTSPAN_CLI", "lightspan")


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


@pytest.fixture
def petersen(tmp_path):
    out = tmp_path / "petersen.txt"
    assert run("gen", "petersen", "--out", str(out)).returncode == 0
    return out


def test_gen_is_deterministic():
    a = run("gen", "gnm", "--n", "12", "--m", "20", "--wmax", "5", "--seed", "7")
    b = run("gen", "gnm", "--n", "12", "--m", "20", "--wmax", "5", "--seed", "7")
    assert a.returncode == 0 and a.stdout == b.stdout


def test_spanner_reads_stdin():
    k4 = run("gen", "complete", "--n", "4").stdout
    res = run("spanner", "-", "--t", "3", "--format", "json", stdin=k4)
    assert res.returncode == 0
    assert json.loads(res.stdout)["edges"] == 3


def test_analyze_petersen(petersen):
    res = run("analyze", str(petersen), "--format", "json")
    assert res.returncode == 0
    values = json.loads(res.stdout)["counts"]
    assert values["girth"] == 5 and values["weighted_girth"] == "5"


def test_verify_pass_and_fail(tmp_path, petersen):
    assert run("verify", "moore-dispersion", str(petersen)).returncode == 0
    scg = tmp_path / "heavy.scg"
    scg.write_text("20 1\n0 10 5/2\n")
    assert run("verify", "max-weight", str(scg), "--t", "5").returncode == 1


def test_reduce_round_trip(tmp_path):
    g = tmp_path / "g.txt"
    assert run("gen", "grid", "--rows", "2", "--cols", "3", "--wmax", "2", "--out", str(g)).returncode == 0
    res = run("reduce", str(g))
    assert res.returncode == 0
    first = res.stdout.split()
    assert int(first[0]) >= 6


def test_usage_errors(petersen):
    assert run("verify", "no-such", str(petersen)).returncode == 2
    assert run("verify", "full-counting-mc", "missing.scg").returncode == 2
    assert run("spanner", str(petersen), "--t", "x").returncode == 2
    assert run().returncode == 2


def test_bench_csv():
    res = run("bench", "--sizes", "16", "--ks", "1", "--format", "csv")
    assert res.returncode == 0
    assert res.stdout.splitlines()[0].startswith("n,m,k,eps")
