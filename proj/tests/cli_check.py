#!/usr/bin/env python3
"""Exit-code and output contract checks for the coble binary.

Usage: cli_check.py <path-to-coble> <test-data-dir>
"""

import json
import subprocess
import sys
import tempfile
import os

failures = []


def run(*args, stdin=None):
    return subprocess.run(
        [BINARY, *args], capture_output=True, text=True, input=stdin
    )


def check(label, cond, detail=""):
    mark = "ok" if cond else "FAIL"
    print(f"[{mark}] {label}")
    if not cond:
        failures.append(label + (f": {detail}" if detail else ""))


def main():
    r = run("run", "section4")
    check("strict section4 exits 1", r.returncode == 1, f"got {r.returncode}")
    check("strict section4 reports the delta failure",
          "[fail] isotropic-delta-identity" in r.stdout)

    r = run("run", "section4", "--allow-known-discrepancies")
    check("downgraded section4 exits 0", r.returncode == 0, f"got {r.returncode}")
    check("downgrade is marked, not hidden", "[known-discrepancy]" in r.stdout)

    a = run("run", "section4", "--format", "machine")
    b = run("run", "section4", "--format", "machine")
    check("machine output is byte-identical", a.stdout == b.stdout)
    doc = json.loads(a.stdout)
    check("machine document has report/checks/passed",
          {"report", "checks", "passed"} <= set(doc))
    check("every check carries the four fields",
          all({"check", "status", "values", "paper_ref"} <= set(c) for c in doc["checks"]))
    check("no floats anywhere in values",
          all(isinstance(v, str) for c in doc["checks"] for v in c["values"].values()))

    r = run("--check-all", "--format", "machine", "--allow-known-discrepancies")
    check("check-all with downgrades exits 0", r.returncode == 0, f"got {r.returncode}")
    refs = {c["paper_ref"] for c in json.loads(r.stdout)["checks"]}
    check("check-all covers all five scenarios",
          refs == {"section4", "section5", "wahl-family", "degenerations", "t-chains"},
          str(refs))

    r = run("hj", "40", "19")
    check("hj 40 19", r.returncode == 0 and
          r.stdout.strip() == "40/19 = [3, 2, 2, 2, 2, 2, 2, 2, 2, 3]", r.stdout)
    r = run("hj", "6", "4")
    check("hj rejects non-coprime input with exit 2", r.returncode == 2)

    check("wahl accepts 2,2,6", run("wahl", "2,2,6").returncode == 0)
    r = run("wahl", "3,2,3")
    check("wahl rejects a non-Wahl chain with exit 1",
          r.returncode == 1 and "not a Wahl chain" in r.stdout)
    check("wahl flags a bad chain as input error", run("wahl", "2,1").returncode == 2)

    r = run("tchain", "10")
    check("tchain 10", r.returncode == 0 and "milnor rank 9" in r.stdout, r.stdout)
    check("tchain 0 is an input error", run("tchain", "0").returncode == 2)

    r = run("degenerations", "2")
    check("degenerations 2 lists four configurations",
          r.returncode == 0 and len(r.stdout.splitlines()) == 4, r.stdout)
    check("degenerations 11 is an input error",
          run("degenerations", "11").returncode == 2)

    with tempfile.TemporaryDirectory() as tmp:
        mpath = os.path.join(tmp, "m.txt")
        with open(mpath, "w") as f:
            f.write("# comment\n2 0\n0 3\n")
        r = run("snf", mpath)
        check("snf on a diagonal matrix", r.returncode == 0 and "divisors 1 6" in r.stdout,
              r.stdout)
        with open(mpath, "w") as f:
            f.write("1 2\n3\n")
        check("snf rejects ragged rows with exit 2", run("snf", mpath).returncode == 2)
    check("snf missing file is an input error",
          run("snf", "/no/such/file").returncode == 2)

    surface = os.path.join(DATA_DIR, "section4.surface")
    r = run("surface", "verify", surface)
    check("surface verify on the bundled model passes",
          r.returncode == 0 and "all 15 checks passed" in r.stdout, r.stdout)
    a = run("surface", "verify", surface, "--format", "machine")
    b = run("surface", "verify", surface, "--format", "machine")
    check("surface verify machine output is byte-identical", a.stdout == b.stdout)

    with tempfile.TemporaryDirectory() as tmp:
        spath = os.path.join(tmp, "bad.surface")
        with open(spath, "w") as f:
            f.write("surface W\ngen A self=oops\n")
        r = run("surface", "verify", spath)
        check("parse errors exit 2 and carry the line number",
              r.returncode == 2 and ":2:" in r.stderr, r.stderr)

    check("unknown scenario is a usage error",
          run("run", "section6").returncode == 2)
    check("unknown subcommand is a usage error", run("frobnicate").returncode == 2)
    check("bare invocation is a usage error", run().returncode == 2)
    check("--help exits 0", run("--help").returncode == 0)

    if failures:
        print(f"\n{len(failures)} CLI checks failed:")
        for f in failures:
            print(" -", f)
        return 1
    print("\nall CLI checks passed")
    return 0


if __name__ == "__main__":
    if len(sys.argv) != 3:
        print("usage: cli_check.py <binary> <data-dir>")
        sys.exit(2)
    BINARY, DATA_DIR = sys.argv[1], sys.argv[2]
    sys.exit(main())
