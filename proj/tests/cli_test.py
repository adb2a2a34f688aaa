import json
import subprocess
import sys
import tempfile
from pathlib import Path

exe = sys.argv[1]
failures = []


def run(*args):
    return subprocess.run([exe, *args], capture_output=True, text=True)


def report(*args):
    with tempfile.TemporaryDirectory() as d:
        path = Path(d) / "r.json"
        p = run(*args, "--json", str(path))
        return p.returncode, json.loads(path.read_text()) if path.exists() else None


def check(name, cond):
    print(("ok    " if cond else "FAIL  ") + name)
    if not cond:
        failures.append(name)


code, r = report("analyze", "alt5", "--pi", "2,3")
check("analyze alt5", code == 0 and r["results"]["C"] is True and r["results"]["k"] == 1)
code, r = report("analyze", "gl32", "--pi", "2,3")
check("analyze gl32", code == 0 and r["results"]["C"] is False and r["results"]["k"] == 2)
code, r = report("analyze", "sym4", "--pi", "7")
check("analyze sym4 outside its primes", code == 0 and r["results"]["C"] is True and r["results"]["hall_order"] == "1")
check("report carries schema, budgets and seed",
      r["schema_version"] == "hallkit-report/1" and r["budgets"]["order_limit"] == 1000000 and r["seed"] == 1)

code, r = report("reduce", "sym5", "--pi", "2,3", "--compare-oracle")
check("reduce sym5 against the oracle", code == 0 and r["results"]["comparison"]["agree"] and r["results"]["verdict"] is True)
check("trace lists H generators", all("H_generators" in lv for lv in r["results"]["trace"]["levels"]))
code, r = report("reduce", "gl32", "--pi", "2,3", "--compare-oracle")
check("reduce gl32 against the oracle", code == 0 and r["results"]["comparison"]["agree"] and r["results"]["verdict"] is False)
code, r = report("reduce", "sym4", "--pi", "2")
check("reduce sym4 for a single prime", code == 0 and r["results"]["verdict"] is True)

code, r = report("k", "sym5", "--normal", "alt5", "--pi", "2,3")
check("k sym5 over alt5", code == 0 and r["results"]["k_induced"] == 1 and r["results"]["k_total"] == 1)
code, r = report("k", "alt5xalt5", "--normal", "alt5", "--pi", "2,3")
check("k alt5xalt5 over its first factor", code == 0 and r["results"]["k_induced"] == 1)
code, r = report("k", "gl32", "--normal", "whole", "--pi", "2,3")
check("k of the whole group is the total", code == 0 and r["results"]["k_induced"] == r["results"]["k_total"] == 2)

check("bad prime exits 4", run("analyze", "alt5", "--pi", "2,4").returncode == 4)
check("missing pi exits 4", run("analyze", "alt5").returncode == 4)
check("unknown group exits 2", run("analyze", "nosuch", "--pi", "2").returncode == 2)
check("order budget exits 3", run("analyze", "alt7", "--pi", "2,3", "--budget-order", "100").returncode == 3)
check("non-normal subgroup exits 6", run("k", "sym4", "--normal", "sym3", "--pi", "2").returncode == 6)
check("unknown subgroup spec exits 6", run("k", "sym4", "--normal", "nothing", "--pi", "2").returncode == 6)

with tempfile.TemporaryDirectory() as d:
    bad = Path(d) / "bad.json"
    bad.write_text('{\n  "name": "x",\n  "degree": 3,\n  "generators": [\n    [1, 2, 0],\n    [0, 0, 1]\n  ]\n}\n')
    p = run("analyze", str(bad), "--pi", "2")
    check("malformed group file exits 2 with line and generator", p.returncode == 2 and ":6" in p.stderr and "generator 1" in p.stderr)

    g = Path(d) / "s4.json"
    check("zoo emit", run("zoo", "emit", "sym4", "-o", str(g)).returncode == 0)
    code, r = report("analyze", str(g), "--pi", "2,3")
    check("analyze a group file", code == 0 and r["input"]["kind"] == "file" and r["results"]["k"] == 1)

    m = Path(d) / "m.json"
    m.write_text(json.dumps({"entries": [{"name": "sym4", "pi": [2, 3]}]}))
    code, r = report("corpus", "--manifest", str(m), "--jobs", "2")
    check("single-entry corpus", code == 0 and len(r["results"]["entries"]) == 1 and r["results"]["ok"])
    m.write_text(json.dumps({"entries": [{"name": "alt5", "pi": [2, 3],
                                          "expected": {"E": "true", "C": "false", "D": "false", "k": 2}}]}))
    check("corpus with a wrong expectation exits 5", run("corpus", "--manifest", str(m)).returncode == 5)

p = run("zoo", "list")
check("zoo list", p.returncode == 0 and "sym<n>" in p.stdout)

code, r = report("example-gl52")
check("example-gl52", code == 0 and r["results"]["ok"] and r["results"]["k_exhaustive_verified"] is False)

sys.exit(1 if failures else 0)
