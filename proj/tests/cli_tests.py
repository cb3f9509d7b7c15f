#!/usr/bin/env python3
"""End-to-end checks of the bsssp command line. Usage: cli_tests.py BINARY SCHEMA CASE"""

import csv
import io
import json
import math
import os
import subprocess
import sys
import tempfile

BIN, SCHEMA, CASE = sys.argv[1], sys.argv[2], sys.argv[3]
TMP = tempfile.mkdtemp(prefix="bsssp_cli_")


def run(*args, env=None, ok=(0,)):
    p = subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, env=env)
    if p.returncode not in ok:
        sys.exit(f"{' '.join(map(str, args))}: exit {p.returncode}\n{p.stdout}\n{p.stderr}")
    return p


def write(name, text):
    path = os.path.join(TMP, name)
    with open(path, "w") as f:
        f.write(text)
    return path


def read(path):
    with open(path) as f:
        return f.read()


PATH3 = "p sp 3 2\na 1 2 1\na 2 3 2\n"


def case_gen():
    out = run("gen", "--model", "cycle", "--n", 4, "--weights", "unit").stdout
    lines = out.splitlines()
    assert lines[0] == "p sp 4 4", lines
    assert len([l for l in lines if l.startswith("a ")]) == 4
    assert all(l.endswith(" 1") for l in lines[1:])
    a, b = os.path.join(TMP, "a.gr"), os.path.join(TMP, "b.gr")
    for path in (a, b):
        run("gen", "--model", "gnm", "--n", 100, "--m", 300, "--seed", 7, "--out", path)
    assert read(a) == read(b)
    p = run("gen", "--model", "grid", "--n", 7, ok=(2,))
    assert "square" in p.stderr
    run("gen", "--model", "gnm", "--n", 10, "--m", 2, ok=(2,))
    run("gen", "--model", "tree", "--n", 10, ok=(2,))
    run("gen", "--n", 10, "--weights", "gauss", ok=(2,))


def case_solve():
    g = write("p3.gr", PATH3)
    d1, d2 = os.path.join(TMP, "d1"), os.path.join(TMP, "d2")
    run("solve", "--graph", g, "--source", 0, "--algo", "dijkstra", "--dist-out", d1)
    assert read(d1) == "0 0\n1 1\n2 3\n", read(d1)
    run("solve", "--graph", g, "--source", 0, "--algo", "bundle", "--dist-out", d2)
    assert read(d1) == read(d2)
    for flags in (["--construction", "simple"], ["--transform", "cap:auto"], ["--transform", "none", "--k", "3"],
                  ["--check", "--metered"]):
        run("solve", "--graph", g, *flags, "--dist-out", d2)
        assert read(d1) == read(d2), flags
    iso = write("iso.gr", "p sp 3 1\na 1 2 0.5\n")
    run("solve", "--graph", iso, "--dist-out", d2)
    assert read(d2) == "0 0\n1 0.5\n2 inf\n"


def case_solve_fromR():
    g = write("p3.gr", PATH3)
    r = write("r.txt", "0 2\n")
    d = os.path.join(TMP, "d")
    rep = json.loads(run("solve", "--graph", g, "--transform", "none", "--construction", f"fromR:{r}",
                         "--dist-out", d).stdout)
    assert read(d) == "0 0\n1 1\n2 3\n"
    assert rep["construction"] == "fromR" and rep["sizeR"] == 2 and rep["extract_mins"] == 2
    bad = write("bad.txt", "1 2\n")
    run("solve", "--graph", g, "--transform", "none", "--construction", f"fromR:{bad}", ok=(2,))


def case_csv():
    g = write("p3.gr", PATH3)
    out = run("solve", "--graph", g, "--format", "csv").stdout
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 2, rows
    assert rows[0][0] == "input" and len(rows[0]) == len(rows[1])


def case_schema():
    import jsonschema
    schema = json.load(open(SCHEMA))
    g = write("p3.gr", PATH3)
    gen = os.path.join(TMP, "gen.gr")
    run("gen", "--model", "gnm", "--n", 500, "--m", 1500, "--weights", "exp-ratio:1e6", "--out", gen)
    for args in (["--graph", g], ["--graph", g, "--algo", "dijkstra"], ["--graph", gen, "--metered"],
                 ["--graph", gen, "--construction", "simple", "--transform", "cap:4"]):
        jsonschema.validate(json.loads(run("solve", *args).stdout), schema)


def case_errors():
    run("solve", "--graph", os.path.join(TMP, "missing.gr"), ok=(2,))
    g = write("p3.gr", PATH3)
    run("solve", "--graph", g, "--algo", "astar", ok=(2,))
    run("solve", "--graph", g, "--source", 3, ok=(2,))
    run("solve", "--graph", g, "--format", "xml", ok=(2,))
    run("solve", "--graph", g, "--transform", "cap:2", ok=(2,))
    run("solve", "--graph", write("bad.gr", "p sp 3 1\na 1 4 1\n"), ok=(2,))
    run("solve", ok=(2,))
    run(ok=(2,))


def case_verify():
    p = run("verify", "--trials", 100, "--nmax", 200)
    assert "ok: 100 trials" in p.stdout
    p = run("verify", "--trials", 0)
    assert "ok: 0 trials" in p.stdout


def case_verify_mutations():
    for mutation in ("step3", "zloop"):
        p = run("verify", "--trials", 300, "--nmax", 100, "--mutate", mutation, ok=(1,))
        assert "reproduce: bsssp verify" in p.stdout, p.stdout
        lines = p.stdout.splitlines()
        start = next(i for i, l in enumerate(lines) if l.startswith("p sp"))
        repro = write(f"repro_{mutation}.gr", "\n".join(lines[start:]) + "\n")
        run("solve", "--graph", repro, "--metered")  # reproducer parses
        again = run("verify", "--trials", 300, "--nmax", 100, "--mutate", mutation, ok=(1,))
        assert again.stdout == p.stdout


def case_seed_env():
    env = dict(os.environ, BSSSP_SEED="42")
    a = run("gen", "--n", 50, "--m", 100, env=env).stdout
    b = run("gen", "--n", 50, "--m", 100, "--seed", 42).stdout
    c = run("gen", "--n", 50, "--m", 100, "--seed", 43, env=env).stdout
    assert a == b and a != c


def case_bench():
    out = run("bench", "--sizes", "2^8..2^10", "--reps", 2, "--algo", "bundle,dijkstra").stdout
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 12, len(rows)
    for n in (256, 512, 1024):
        sums = {r["checksum"] for r in rows if r["input"].startswith(f"gen:gnm:n={n}:")}
        assert len(sums) == 1, sums  # reps and algorithms agree
    out = run("bench", "--sizes", "2^10,2^12,2^14", "--algo", "dijkstra", "--metered").stdout
    ratios = [int(r["comparisons"]) / (int(r["n"]) * math.log2(int(r["n"]))) for r in csv.DictReader(io.StringIO(out))]
    assert max(ratios) / min(ratios) < 1.5, ratios
    per_vertex = [int(r["comparisons"]) / int(r["n"]) for r in csv.DictReader(io.StringIO(out))]
    assert per_vertex == sorted(per_vertex), per_vertex  # super-linear growth


def case_stats():
    s = json.loads(run("stats", "--k", 1, "--seeds", 3, "--n", 2000).stdout)
    assert s["simple"]["sum_ball_per_seed"] == [0, 0, 0]
    assert "improved" not in s
    s = json.loads(run("stats", "--k", 4, "--seeds", 30).stdout)
    assert 3.6 <= s["simple"]["mean_Sv"]["mean"] <= 4.4, s["simple"]["mean_Sv"]
    exp = s["expected"]
    assert abs(s["simple"]["sizeR1"]["mean"] - exp["sizeR1_mean"]) <= 4 * exp["sizeR1_sd"]
    assert s["improved"]["sizeR2_fraction"]["mean"] <= exp["sizeR2_fraction_bound"]


globals()["case_" + CASE]()
print(f"cli {CASE}: ok")
