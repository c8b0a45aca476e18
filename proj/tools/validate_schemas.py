#!/usr/bin/env python3
# Copyright 2026 The htdp Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Runs the htdp CLI on sample inputs and validates every JSON it prints."""

import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema
import referencing


def load_registry(schema_dir):
  resources = []
  for path in sorted(schema_dir.glob("*.json")):
    contents = json.loads(path.read_text())
    resources.append((contents["$id"], referencing.Resource.from_contents(contents)))
  return referencing.Registry().with_resources(resources)


def main():
  parser = argparse.ArgumentParser()
  parser.add_argument("--htdp", required=True)
  parser.add_argument("--inputs", required=True, type=pathlib.Path)
  parser.add_argument("--schemas", required=True, type=pathlib.Path)
  args = parser.parse_args()
  registry = load_registry(args.schemas)
  g = lambda name: str(args.inputs / name)

  # (schema, expected exit code, argv)
  cases = [
      ("profile.json", 0, ["profile", "--design", g("srs21_design.json"),
                           "--pairs", g("srs21_pair.json"), "--b", "0",
                           "--eps-grid", "0:2:0.5"]),
      ("profile.json", 0, ["profile", "--design", g("srs62_design.json"),
                           "--extremal", g("binary6_bounds.json"), "--b", "0.5",
                           "--eps-grid", "0,0.5,3"]),
      ("calibrate.json", 0, ["calibrate", "--design", g("srs62_design.json"),
                             "--extremal", g("binary6_bounds.json"), "--eps",
                             "1.0", "--delta", "1e-3"]),
      ("srs.json", 0, ["srs", "--N", "4", "--n", "1", "--mt", "1", "--Mt", "3",
                       "--query", "eps0"]),
      ("srs.json", 0, ["srs", "--N", "4", "--n", "2", "--mt", "1", "--Mt", "3",
                       "--query", "eps0"]),
      ("srs.json", 0, ["srs", "--N", "12", "--n", "4", "--mt", "0", "--Mt", "12",
                       "--query", "delta", "--eps", "0.5", "--b", "1"]),
      ("srs.json", 0, ["srs", "--N", "10", "--n", "2", "--mt", "4", "--Mt", "6",
                       "--query", "epsilon", "--delta", "0.05"]),
      ("moments.json", 0, ["moments", "--design", g("srs32_design.json"),
                           "--data", g("ones3_data.json"), "--unit", "0"]),
      ("audit.json", 0, ["audit", "--design", g("srs21_design.json"), "--pairs",
                         g("srs21_pair.json"), "--b", "0.5", "--eps", "0.1",
                         "--trials", "20000"]),
      ("error.json", 2, ["srs", "--N", "4", "--n", "9", "--mt", "0", "--Mt", "4",
                         "--query", "eps0"]),
      ("error.json", 2, ["bogus"]),
  ]
  for path in args.schemas.glob("*.json"):
    jsonschema.Draft202012Validator.check_schema(json.loads(path.read_text()))
  for design in ["srs21_design.json", "srs62_design.json", "srs32_design.json"]:
    jsonschema.validate(json.loads(pathlib.Path(g(design)).read_text()),
                        {"$ref": "design.json"}, registry=registry)

  failures = 0
  for schema, want_code, argv in cases:
    proc = subprocess.run([args.htdp] + argv, capture_output=True, text=True)
    stream = proc.stdout if want_code == 0 else proc.stderr
    try:
      if proc.returncode != want_code:
        raise ValueError(f"exit code {proc.returncode}: {proc.stderr.strip()}")
      validator = jsonschema.Draft202012Validator({"$ref": schema},
                                                  registry=registry)
      validator.validate(json.loads(stream))
      print(f"ok   {schema:15} {' '.join(argv[:1])}")
    except (ValueError, jsonschema.ValidationError) as e:
      failures += 1
      print(f"FAIL {schema:15} {' '.join(argv)}: {e}")
  return 1 if failures else 0


if __name__ == "__main__":
  sys.exit(main())
