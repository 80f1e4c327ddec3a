"""Validate JSON reports from the s2s2 binary against the shipped schema."""
import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["snf", "--matrix", "2 4; 6 8"],
    ["group-cohomology", "--group", "Z4", "--module", "z4-pi3"],
    ["group-homology", "--group", "Z2xZ2", "--module", "Z/2"],
    ["ring", "build", "--ring", "rp2-twisted-rp2-wx"],
    ["ring", "iso", "--ring", "rp2xrp2", "--other", "rp2-twisted-rp2"],
    ["ring", "sq", "--ring", "z4", "--i", "2", "--a", "u^2"],
    ["gamma", "coinvariants"],
    ["gamma", "orbits", "--symmetry", "swap=0 1;1 0"],
    ["bordism", "e2", "--group", "Z4"],
    ["bordism", "e3", "--group", "Z4"],
    ["bordism", "--group", "Z4"],
    ["verify-actions", "--action", "sigma", "--samples", "200", "--displacement-grid", "16"],
    ["verify-actions", "--action", "identity", "--samples", "50", "--displacement-grid", "8"],
    ["cover-check", "--samples", "300"],
    ["kkr", "--quotient", "s2xtrp2", "--class", "x+y"],
    ["kkr", "--table"],
    ["paper-suite"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    jsonschema.Draft202012Validator.check_schema(schema)
    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True)
        try:
            jsonschema.validate(json.loads(proc.stdout), schema)
            print(f"ok   {' '.join(args)} (exit {proc.returncode})")
        except (json.JSONDecodeError, jsonschema.ValidationError) as e:
            failures += 1
            print(f"FAIL {' '.join(args)}: {e}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
