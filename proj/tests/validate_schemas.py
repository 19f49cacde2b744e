"""Runs the CLI and validates its JSON against schema/."""
import json
import pathlib
import subprocess
import sys

try:
    from jsonschema import Draft202012Validator
    from referencing import Registry, Resource
except ImportError:
    print("jsonschema not installed")
    sys.exit(77)

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
registry = Registry().with_resources([(k, Resource.from_contents(v)) for k, v in schemas.items()])

runs = [
    ("game_result", ["ef", "--left", "K4", "--right", "K3", "--p", "4", "--r", "4", "--json"]),
    ("game_result", ["game", "-s", "maddux:2", "--m", "5", "--k", "omega", "--json"]),
    ("game_result", ["game", "-s", "maddux:2", "--m", "4", "--k", "2", "--json"]),
    ("representation", ["repsearch", "-s", "maddux:2", "--base", "5"]),
    ("basis", ["basis", "-s", "maddux:2", "--m", "4", "--json"]),
    ("theta", ["theta", "-s", "bsl:3,2", "--targets", "red", "--copies", "2", "--json"]),
    ("check", ["check", "-s", "bsl:2,1", "--json"]),
    ("check", ["check", "-s", "fullSet:2,2", "--json"]),
]
bad = 0
for name, args in runs:
    out = subprocess.run([cli] + args, capture_output=True, text=True).stdout
    doc = json.loads(out)
    if name == "game_result":
        Draft202012Validator(schemas["certificate.schema.json"], registry=registry).validate(doc["certificate"])
    errors = list(Draft202012Validator(schemas[name + ".schema.json"], registry=registry).iter_errors(doc))
    print(("ok  " if not errors else "BAD ") + " ".join(args))
    for e in errors:
        print("    " + e.message)
    bad += bool(errors)
sys.exit(1 if bad else 0)
