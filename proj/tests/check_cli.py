"""CLI checks: exit codes, eval output, schema and byte-identical reports."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
schema = json.loads(pathlib.Path(schema_path).read_text())
failures = []


def run(*args):
    return subprocess.run([cli, *args], capture_output=True, text=True)


def expect(cond, what):
    if not cond:
        failures.append(what)


with tempfile.TemporaryDirectory() as tmp:
    a, b, t = (str(pathlib.Path(tmp) / n) for n in ("a.json", "b.json", "t.json"))
    r = run("verify", "all", "--json", a, "--no-timing")
    expect(r.returncode == 0, f"verify all exit {r.returncode}")
    run("verify", "all", "--json", b, "--no-timing")
    expect(pathlib.Path(a).read_bytes() == pathlib.Path(b).read_bytes(), "reports differ")
    run("verify", "ds2", "--dl", "5,3", "--json", t)
    for path in (a, t):
        jsonschema.validate(json.loads(pathlib.Path(path).read_text()), schema)
    cfg = pathlib.Path(tmp) / "cfg.json"
    cfg.write_text(json.dumps({"n": 3, "window": {"size": 5}}))
    run("verify", "lie", "--config", str(cfg), "--window", "3", "--json", t, "--no-timing")
    report = json.loads(pathlib.Path(t).read_text())
    expect(report["config"]["n"] == 3 and report["config"]["window"]["size"] == 3, "config precedence")
    bad = {k: v for k, v in report.items()}
    bad["results"] = [dict(report["results"][0], **{"pass": False})]
    bad["results"][0].pop("witness", None)
    try:
        jsonschema.validate(bad, schema)
        failures.append("schema accepted a failure without witness")
    except jsonschema.ValidationError:
        pass

expect(run("verify", "nope").returncode == 2, "unknown suite exit code")
expect(run("verify", "lie", "--bogus").returncode == 2, "unknown flag exit code")
expect(run("verify", "lie", "--window", "4").returncode == 2, "even window exit code")
expect(run("eval", "1 +").returncode == 2, "syntax error exit code")
r = run("eval", "vev( A[1](site(0;0)) * Ad[1](site(0;0)) )")
expect(r.returncode == 0 and r.stdout.strip() == "1", f"eval gave {r.stdout!r}")
r = run("eval", "comm( phi[1]([0];0), phid[1]([0];0) )")
expect(r.returncode == 0 and r.stdout.strip() == "1", f"eval gave {r.stdout!r}")

for f in failures:
    print("FAIL", f)
print("cli checks:", "ok" if not failures else f"{len(failures)} failed")
sys.exit(1 if failures else 0)
