"""End-to-end checks of the gkmtool command line. Usage: cli_test.py TOOL FIXTURE_DIR"""

import json
import subprocess
import sys
from pathlib import Path

TOOL = sys.argv[1]
FIX = Path(sys.argv[2])
failures = []


def run(*args):
    p = subprocess.run([TOOL, *args], capture_output=True, text=True, timeout=120)
    return p.returncode, p.stdout, p.stderr


def expect(name, cond, info=""):
    if not cond:
        failures.append(f"{name}: {info}")


cp1 = str(FIX / "cp1.json")

rc, out, _ = run("character", "--input", cp1, "--xi", "1,0")
expect("character", rc == 0 and out.strip() == "1*x^(-1,0) + 1 + 1*x^(1,0)", out)

rc, out2, _ = run("character", "--input", cp1, "--xi", "-3,2", "--method", "oracle")
expect("character oracle", rc == 0 and out2 == out, out2)

rc, out, _ = run("character", "--input", cp1, "--xi", "1,0", "--output", "json")
doc = json.loads(out) if rc == 0 else {}
expect("character json", rc == 0 and "1" in json.dumps(doc), out)

rc, out, _ = run("qr-check", "--input", cp1, "--xi", "1,0")
expect("qr-check", rc == 0 and out.strip() == "PASS  chi_red = 1", out)

rc, out, _ = run("multiplicity", "--input", cp1, "--xi", "1,0", "--alpha", "0,0")
expect("multiplicity", rc == 0 and out.strip().endswith("1"), out)

rc, out, _ = run("reduce", "--input", cp1, "--xi", "1,0", "--c", "1/2")
expect("reduce", rc == 0 and "chi_red" in out, out)

rc, out, _ = run("residue", "--input", cp1, "--xi", "1,0")
expect("residue", rc == 0, out)

rc, out, _ = run("validate", "--input", cp1)
expect("validate ok", rc == 0, out)

rc, out, _ = run("validate", "--input", str(FIX / "proportional.json"))
expect("validate proportional", rc == 2 and "E_GKM" in out, out)

rc, out, _ = run("validate", "--input", str(FIX / "bad_orient.json"))
expect("validate orientation", rc == 2 and "E_ORIENT" in out, out)

rc, out, _ = run("validate", "--input", str(FIX / "cp1_bad_class.json"))
expect("validate class", rc == 2 and "E_COMPAT" in out, out)

rc, out, err = run("validate", "--input", str(FIX / "malformed.json"))
expect("malformed", rc == 1 and "line" in (out + err), out + err)

rc, out, err = run("character", "--input", cp1, "--xi", "0,1")
expect("non-generic xi", rc == 1, out + err)

rc, out, err = run("character", "--input", cp1, "--xi", "2,0")
expect("non-primitive xi", rc == 1, out + err)

rc, out, err = run("character", "--input", cp1)
expect("missing flag", rc != 0, out + err)

rc, a, _ = run("selftest", "--seed", "42")
rc2, b, _ = run("selftest", "--seed", "42")
expect("selftest passes", rc == 0, a)
expect("selftest deterministic", a == b)
rc, c, _ = run("selftest", "--seed", "7")
expect("selftest seed 7", rc == 0 and c != a, c)

rc, out, _ = run("selftest", "--seed", "42", "--inject-corrupt")
expect("selftest corrupt", rc == 2 and "FAIL" in out, out)

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} cli failures")
sys.exit(1 if failures else 0)
