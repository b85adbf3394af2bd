"""Runs the CLI, validates JSON output against the schema and checks exit codes."""

import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

failures = []


def run(args):
    return subprocess.run([cli, *args], capture_output=True, text=True)


def check(name, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'} {name}{': ' + detail if detail and not ok else ''}")
    if not ok:
        failures.append(name)


json_cases = [
    ["orbits", "--dim", "5", "--type", "odd"],
    ["orbits", "--dim", "4", "--type", "+", "--so"],
    ["orbits", "--dim", "4", "--type", "-"],
    ["orbits", "--dim", "12", "--type", "+", "--q", "8"],
    ["count", "--series", "B", "--max-rank", "3"],
    ["count", "--series", "SOD+", "--max-rank", "12"],
    ["pair", "--symbol", "(3)_2^2(1)_1", "--bits", "1"],
    ["pair", "--symbol", "(2)_1^2", "--so-tag", "II"],
    ["rep", "--symbol", "(3)_2^2(1)_1", "--bits", "1", "--q", "4"],
    ["verify", "--dim", "5", "--type", "odd"],
    ["verify", "--dim", "4", "--type", "+", "--so", "--timing"],
    ["verify", "--dim", "3", "--type", "odd", "--q", "4"],
]

for args in json_cases:
    name = " ".join(args)
    first = run([*args, "--format", "json"])
    if first.returncode != 0:
        check(name, False, f"exit {first.returncode}: {first.stderr.strip()}")
        continue
    doc = json.loads(first.stdout)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
    check(f"schema {name}", not errors, errors[0].message if errors else "")
    if "--timing" not in args:
        again = run([*args, "--format", "json"])
        check(f"deterministic {name}", again.stdout == first.stdout)

# Table and JSON list the same orbits.
for args in (["orbits", "--dim", "7", "--type", "odd"], ["orbits", "--dim", "6", "--type", "+", "--so"]):
    doc = json.loads(run([*args, "--format", "json"]).stdout)
    table = run([*args, "--format", "table"]).stdout.splitlines()
    rows = [line.split()[0] for line in table[1:-1]]
    check(f"table matches json {' '.join(args)}", rows == [o["symbol"] for o in doc["orbits"]])

counts = {
    ("orbits", "--dim", "5", "--type", "odd"): 5,
    ("orbits", "--dim", "4", "--type", "+", "--so"): 4,
    ("orbits", "--dim", "4", "--type", "-"): 2,
}
for args, expected in counts.items():
    doc = json.loads(run([*args, "--format", "json"]).stdout)
    check(f"row count {' '.join(args)}", doc["count"] == expected == len(doc["orbits"]))

values = {
    ("B", "3"): [2, 5, 10],
    ("SOD+", "2"): [1, 4],
    ("D-", "2"): [1, 2],
}
for (series, rank), expected in values.items():
    doc = json.loads(run(["count", "--series", series, "--max-rank", rank, "--format", "json"]).stdout)
    check(f"count {series} {rank}", [r["value"] for r in doc["rows"]] == expected)

exit_cases = [
    (["orbits", "--dim", "201", "--type", "odd"], 2),
    (["orbits", "--dim", "5", "--type", "+"], 2),
    (["orbits", "--dim", "120", "--type", "+"], 3),
    (["count", "--series", "C", "--max-rank", "3"], 2),
    (["count", "--series", "B", "--max-rank", "61"], 2),
    (["pair", "--symbol", "(3)_2^2(1)_1", "--bits", "10"], 2),
    (["pair", "--symbol", "(3)_2^3"], 2),
    (["pair", "--symbol", "garbage"], 2),
    (["verify", "--dim", "8", "--type", "+"], 3),
    (["verify", "--dim", "5", "--type", "odd", "--q", "4"], 3),
    (["verify", "--dim", "5", "--type", "odd", "--q", "8"], 2),
    (["frobnicate"], 2),
    ([], 2),
    (["--help"], 0),
]
for args, code in exit_cases:
    got = run(args).returncode
    check(f"exit {code} for {' '.join(args) or '(no args)'}", got == code, f"got {got}")

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
