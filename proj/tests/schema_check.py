#!/usr/bin/env python3
"""Validates every CLI JSON output shape against the published schemas."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema
from referencing import Registry, Resource


def main() -> int:
    cli = sys.argv[1]
    schema_dir = Path(sys.argv[2])

    schemas = {}
    resources = []
    for path in schema_dir.glob("*.schema.json"):
        schema = json.loads(path.read_text())
        schemas[path.name] = schema
        resources.append((path.name, Resource.from_contents(schema)))
    registry = Registry().with_resources(resources)

    def validate(name: str, instance):
        jsonschema.validate(instance=instance, schema=schemas[name],
                            registry=registry)

    def run(*args, expect_code=0, stdin=None):
        proc = subprocess.run([cli, *args], capture_output=True, text=True)
        assert proc.returncode == expect_code, (
            f"{args}: exit {proc.returncode}, expected {expect_code}\n"
            f"stderr: {proc.stderr}")
        return proc

    # mt: consistent and inconsistent
    out = run("mt", "--nu-p1", "0.95", "--nu-p2", "1")
    validate("mt_result.schema.json", json.loads(out.stdout))
    out = run("mt", "--nu-p1", "0.95", "--nu-p2", "1", "--tnorm", "godel",
              "--impl", "r", "--neg", "r", expect_code=2)
    validate("mt_result.schema.json", json.loads(out.stdout))
    out = run("mt", "--nu-p1", "0.5", "--nu-p2", "0.9")  # generalized S/S
    validate("mt_result.schema.json", json.loads(out.stdout))

    # sht: plain, with statistic, insignificant, inconsistent
    out = run("sht", "--alpha", "0.05")
    validate("sht_verdict.schema.json", json.loads(out.stdout))
    out = run("sht", "--alpha", "0.05", "--observed", "3.0",
              "--null-mean", "0", "--null-sd", "1")
    validate("sht_verdict.schema.json", json.loads(out.stdout))
    out = run("sht", "--alpha", "0.05", "--observed", "1.0",
              "--null-mean", "0", "--null-sd", "1")
    v = json.loads(out.stdout)
    validate("sht_verdict.schema.json", v)
    assert v["p2_established"] is False and v["result"] is None
    out = run("sht", "--alpha", "0.05", "--tnorm", "product",
              "--impl", "r", "--neg", "r", expect_code=2)
    validate("sht_verdict.schema.json", json.loads(out.stdout))

    # eval json format
    out = run("eval", "--formula", "a & b", "--assign", "a=0.5,b=0.4",
              "--format", "json")
    validate("eval_result.schema.json", json.loads(out.stdout))

    # check
    out = run("check", "--tnorm", "lukasiewicz", "--samples", "500",
              "--seed", "7")
    validate("law_report.schema.json", json.loads(out.stdout))

    # bayes-map summary (file output) and error diagnostics
    with tempfile.TemporaryDirectory() as tmp:
        out = run("bayes-map", "--p-e-h", "0.04", "--resolution", "51",
                  "--format", "pgm", "--out", f"{tmp}/map.pgm")
        validate("bayes_summary.schema.json", json.loads(out.stdout))
        assert Path(f"{tmp}/map.pgm").read_bytes().startswith(b"P5\n")

    out = run("eval", "--formula", "a & | b", expect_code=1)
    validate("error.schema.json", json.loads(out.stderr))
    out = run("mt", "--nu-p1", "1.5", "--nu-p2", "1", expect_code=1)
    validate("error.schema.json", json.loads(out.stderr))

    # determinism: identical argv, identical bytes
    a = run("sht", "--alpha", "0.05").stdout
    b = run("sht", "--alpha", "0.05").stdout
    assert a == b

    print("all CLI outputs validate against the schemas")
    return 0


if __name__ == "__main__":
    sys.exit(main())
