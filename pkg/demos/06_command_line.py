"""
The command line in one pass
============================

"""

import json
import os
import subprocess
import sys
import tempfile

run = lambda *args: subprocess.run([sys.executable, "-m", "structla", *args], capture_output=True, text=True)

with tempfile.TemporaryDirectory() as tmp:
    inst = os.path.join(tmp, "inst.json")
    sol = os.path.join(tmp, "sol.json")
    print(run("gen", "--structure", "cauchy", "--m", "3", "--n", "5", "--alpha", "2",
              "--seed", "2", "--wide", "--rhs", "zero", "--out", inst).returncode)
    r = run("solve", inst, sol)
    print(r.returncode, r.stderr.strip())
    print(json.load(open(sol))["nullspace"])
    print(run("verify", inst, sol).stdout)

print(run("bench", "--structure", "toeplitz", "--alpha", "4", "--sizes", "128,256,512", "--reps", "1").stdout)
