#!/usr/bin/env python3
"""Checks on the altchar command-line tool.

  cli_checks.py BINARY golden NAME      compare one case with its golden file
  cli_checks.py BINARY schema           validate every JSON case against the schema
  cli_checks.py BINARY agreement        --format csv and --format json carry the same rows
  cli_checks.py BINARY determinism      repeated runs are byte-identical
  cli_checks.py BINARY update           rewrite the golden files
"""

import csv
import io
import json
import pathlib
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parents[2]
GOLDEN = ROOT / "tests" / "golden"
SCHEMA = ROOT / "schema" / "output.schema.json"


def load_cases():
    return json.loads((GOLDEN / "cases.json").read_text())


def run(binary, args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True, timeout=600)
    return proc.returncode, proc.stdout, proc.stderr


def with_format(args, fmt):
    out = []
    skip = False
    for a in args:
        if skip:
            skip = False
            continue
        if a == "--format":
            skip = True
            continue
        out.append(a)
    return out + ["--format", fmt]


def successful(cases):
    return [c for c in cases if c["exit"] == 0]


def check_golden(binary, name):
    case = next((c for c in load_cases() if c["name"] == name), None)
    if case is None:
        print(f"unknown case {name}")
        return 1
    code, out, err = run(binary, case["args"])
    if code != case["exit"]:
        print(f"exit code {code}, expected {case['exit']}\nstderr: {err}")
        return 1
    if "stdout" not in case:
        if out:
            print(f"failing command wrote to stdout:\n{out}")
            return 1
        if not err.strip():
            print("failing command gave no diagnostic")
            return 1
        return 0
    expected = (GOLDEN / case["stdout"]).read_text()
    if out != expected:
        print(f"output differs from {case['stdout']}\n--- got ---\n{out}")
        return 1
    return 0


def check_schema(binary):
    import jsonschema

    schema = json.loads(SCHEMA.read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for case in successful(load_cases()):
        code, out, err = run(binary, with_format(case["args"], "json"))
        doc = json.loads(out)
        errors = sorted(validator.iter_errors(doc), key=str)
        for e in errors:
            print(f"{case['name']}: {e.message}")
        failures += bool(errors)
        for row in doc["results"]:
            if list(row.keys()) != doc["columns"]:
                print(f"{case['name']}: result keys {list(row.keys())} != columns")
                failures += 1
                break
        if json.loads(json.dumps(doc)) != doc:
            failures += 1
    # The timing field is optional and must validate too.
    code, out, _ = run(binary, ["swanson", "--n", "5", "--timing"])
    errors = list(validator.iter_errors(json.loads(out)))
    failures += bool(errors)
    for e in errors:
        print(f"timing: {e.message}")
    return 1 if failures else 0


def csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def check_agreement(binary):
    failures = 0
    for case in successful(load_cases()):
        _, out_json, _ = run(binary, with_format(case["args"], "json"))
        _, out_csv, _ = run(binary, with_format(case["args"], "csv"))
        doc = json.loads(out_json)
        table = list(csv.reader(io.StringIO(out_csv)))
        if table[0] != doc["columns"]:
            print(f"{case['name']}: CSV header {table[0]} != JSON columns {doc['columns']}")
            failures += 1
            continue
        rows = [[csv_cell(row[c]) for c in doc["columns"]] for row in doc["results"]]
        if rows != table[1:]:
            print(f"{case['name']}: CSV rows differ from JSON results")
            failures += 1
    return 1 if failures else 0


def check_determinism(binary):
    failures = 0
    for case in successful(load_cases()):
        first = run(binary, case["args"])
        second = run(binary, case["args"])
        if first != second:
            print(f"{case['name']}: output changed between runs")
            failures += 1
    return 1 if failures else 0


def update(binary):
    for case in load_cases():
        code, out, err = run(binary, case["args"])
        if code != case["exit"]:
            print(f"{case['name']}: exit {code}, expected {case['exit']}: {err}")
            return 1
        if "stdout" in case:
            (GOLDEN / case["stdout"]).write_text(out)
    return 0


def main(argv):
    if len(argv) < 3:
        print(__doc__)
        return 2
    binary, mode = argv[1], argv[2]
    if mode == "golden":
        return check_golden(binary, argv[3])
    if mode == "schema":
        return check_schema(binary)
    if mode == "agreement":
        return check_agreement(binary)
    if mode == "determinism":
        return check_determinism(binary)
    if mode == "update":
        return update(binary)
    print(__doc__)
    return 2


if __name__ == "__main__":
    sys.exit(main(sys.argv))
